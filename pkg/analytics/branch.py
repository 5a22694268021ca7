"""
Dark-state branch label.
"""
from enum import Enum


class Branch(str, Enum):
    """Which of the two dark states: plus (D = D+) or minus (D = D-)."""
    PLUS = "plus"
    MINUS = "minus"

    @property
    def sign(self) -> float:
        return 1.0 if self is Branch.PLUS else -1.0
