"""
Scenario config files: flat ``key = value`` text with ``#`` comments.

Keys are SystemConfig field names plus ``grid.t_start``, ``grid.t_end`` and
``grid.dt``. Unknown or repeated keys are errors.
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Union
import logging

from model.system import SystemConfig
from utils.errors import ConfigurationError

logger = logging.getLogger(__name__)

GRID_KEYS = ("grid.t_start", "grid.t_end", "grid.dt")
TEXT_KEYS = ("pulse_shape",)


@dataclass(frozen=True)
class ScenarioFile:
    """Parsed contents of a scenario config file."""
    cfg: SystemConfig
    grid: Dict[str, float] = field(default_factory=dict)

    @property
    def t_start(self) -> Optional[float]:
        return self.grid.get("grid.t_start")

    @property
    def t_end(self) -> Optional[float]:
        return self.grid.get("grid.t_end")

    @property
    def dt(self) -> Optional[float]:
        return self.grid.get("grid.dt")


def parse_value(key: str, raw: str, line: Optional[int] = None) -> Union[int, float, str]:
    """Convert one raw value according to its key."""
    if key in TEXT_KEYS:
        return raw
    try:
        if key == "n_levels":
            return int(raw)
        return float(raw)
    except ValueError:
        raise ConfigurationError(f"{key}: cannot parse {raw!r} as a number",
                                 field=key, line=line) from None


def parse_config_text(text: str) -> ScenarioFile:
    """
    Parse scenario config text.

    Args:
        text: File contents

    Returns:
        ScenarioFile with a validated SystemConfig and grid values
    """
    valid_keys = set(SystemConfig.field_names()) | set(GRID_KEYS)
    values: Dict[str, Union[int, float, str]] = {}
    lines: Dict[str, int] = {}

    for lineno, raw_line in enumerate(text.splitlines(), 1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(f"expected 'key = value', got {line!r}", line=lineno)

        key, raw = (part.strip() for part in line.split("=", 1))
        if key not in valid_keys:
            raise ConfigurationError(
                f"unknown key {key!r}; valid keys: {', '.join(sorted(valid_keys))}",
                field=key, line=lineno,
            )
        if key in values:
            raise ConfigurationError(f"duplicate key {key!r} (first on line {lines[key]})",
                                     field=key, line=lineno)
        if not raw:
            raise ConfigurationError(f"{key}: missing value", field=key, line=lineno)

        values[key] = parse_value(key, raw, lineno)
        lines[key] = lineno

    if not values:
        raise ConfigurationError("config file has no 'key = value' entries", line=1)

    grid = {k: float(values.pop(k)) for k in GRID_KEYS if k in values}
    try:
        cfg = SystemConfig.from_mapping(values)
    except ConfigurationError as e:
        raise ConfigurationError(str(e), field=e.field, line=lines.get(e.field)) from e

    logger.debug(f"Parsed scenario config with {len(values)} system keys")
    return ScenarioFile(cfg=cfg, grid=grid)


def load_config_file(path: Union[str, Path]) -> ScenarioFile:
    """Read and parse a scenario config file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ConfigurationError(f"cannot read config file {path}: {e}") from e
    return parse_config_text(text)


def format_config(cfg: SystemConfig, grid: Optional[Dict[str, float]] = None) -> str:
    """Render a SystemConfig (and grid) back to config-file text."""
    out = []
    for name, value in cfg.model_dump().items():
        if hasattr(value, "value"):
            value = value.value
        elif isinstance(value, float):
            value = repr(value)
        out.append(f"{name} = {value}")
    for key, value in (grid or {}).items():
        out.append(f"{key} = {value!r}")
    return "\n".join(out) + "\n"
