"""Exceptions shared across the package."""


class FormulaInapplicableError(ValueError):
    """The hypothesis of a closed-form formula is not satisfied."""


class InternalCheckError(ArithmeticError):
    """A self-consistency check failed; indicates a bug, not bad input."""
