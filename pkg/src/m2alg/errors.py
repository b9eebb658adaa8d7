"""Shared exception types."""


class UnsupportedParameters(ValueError):
    """Parameters fall outside the supported regime (e.g. gcd(i, j) != 1)."""


class Inconsistency(RuntimeError):
    """An internal cross-check failed: two routes to the same fact disagree.

    This is never swallowed; it signals a bug in the library, not bad input.
    """
