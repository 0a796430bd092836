# src/core/errors.py
"""Domain errors. All of them are ValueErrors so callers may catch either."""


class InvalidObjectError(ValueError):
    """Malformed matrix text, Callan sequence, forest or permutation."""


class NotGammaFreeError(ValueError):
    """An operation that needs a Γ-free matrix received one containing a Γ."""


class NotCompleteForestError(ValueError):
    """Matrix is not the characteristic matrix of a complete non-ambiguous forest."""


class CommonRiseError(ValueError):
    """Permutation pair has a common rise."""


class ForestClassError(ValueError):
    """Forest is not increasing / leftmost-valid / properly labeled as required."""


class SizeLimitError(ValueError):
    """Exhaustive enumeration requested beyond its configured guard."""
