from __future__ import annotations

from typing import Optional


class AffGrassError(Exception):
    """Base error for every failure raised by affgrass."""


class NotAPrimePower(AffGrassError, ValueError):
    pass


class TooLarge(AffGrassError, ValueError):
    pass


class OutOfRange(AffGrassError, ValueError):
    pass


class DivisionByZero(AffGrassError, ZeroDivisionError):
    pass


class BadShape(AffGrassError, ValueError):
    """Raised when (ℓ, ℓ', h) violates 1 ≤ h ≤ ℓ ≤ ℓ'."""


class LengthOverflow(AffGrassError, OverflowError):
    """Raised when the code length q^δ does not fit a signed 64-bit index."""


class ShapeMismatch(AffGrassError, ValueError):
    pass


class DomainViolation(AffGrassError, ValueError):
    """Raised when a formula or construction is used outside its hypotheses."""


class BudgetExceeded(AffGrassError):
    """Raised before an exhaustive enumeration that would exceed its budget."""

    def __init__(self, what: str, required: int, budget: int) -> None:
        self.what = what
        self.required = int(required)
        self.budget = int(budget)
        super().__init__(f"{what}: {self.required} required, budget is {self.budget}")


class RankDeficient(AffGrassError):
    pass


class LengthMismatch(AffGrassError, ValueError):
    pass


class IncompleteHierarchy(AffGrassError, ValueError):
    def __init__(self, message: str, index: Optional[int] = None) -> None:
        self.index = index
        super().__init__(message)


class WitnessMismatch(AffGrassError):
    """A witness subspace disagreed with the closed form it is meant to attain."""


class RecordError(AffGrassError, ValueError):
    """Malformed serialized code record."""


__all__ = [
    "AffGrassError",
    "NotAPrimePower",
    "TooLarge",
    "OutOfRange",
    "DivisionByZero",
    "BadShape",
    "LengthOverflow",
    "ShapeMismatch",
    "DomainViolation",
    "BudgetExceeded",
    "RankDeficient",
    "LengthMismatch",
    "IncompleteHierarchy",
    "WitnessMismatch",
    "RecordError",
]
