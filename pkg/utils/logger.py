"""
Logging configuration for the STIRAP toolkit.
"""
import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Optional

FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(name: str, log_dir: Optional[str] = "logs",
                  level: str = "INFO") -> logging.Logger:
    """
    Setup logging configuration.

    Args:
        name: Logger name ("" configures the root logger so that every
            module logger propagates to it)
        log_dir: Directory to store log files, or None for console only
        level: Console log level

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG)

    # Repeated calls (quickstart runs several commands) must not stack handlers
    if logger.handlers:
        return logger

    formatter = logging.Formatter(FORMAT)

    if log_dir is not None:
        log_path = Path(log_dir)
        log_path.mkdir(parents=True, exist_ok=True)

        # File handler
        fh = logging.handlers.RotatingFileHandler(
            log_path / f"{name or 'stirap'}.log",
            maxBytes=10485760,  # 10MB
            backupCount=5
        )
        fh.setLevel(logging.DEBUG)
        fh.setFormatter(formatter)
        logger.addHandler(fh)

    # Console handler; stdout is reserved for CSV and summaries
    ch = logging.StreamHandler(sys.stderr)
    ch.setLevel(getattr(logging, level.upper(), logging.INFO))
    ch.setFormatter(formatter)
    logger.addHandler(ch)

    return logger
