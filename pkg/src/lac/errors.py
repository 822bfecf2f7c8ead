"""Exception types shared across the package."""


class LacError(Exception):
    """Base class for every domain error this package raises."""


class PermutationLengthMismatch(LacError):
    """Permutation selections must use the whole alphabet (p equal to n)."""


class InvalidSelection(LacError):
    """A selection breaks the invariants of its mode."""


class RankOutOfRange(LacError):
    """A requested rank is at or past the end of its family."""


class CapExceeded(LacError):
    """A materialization guard refused to build a huge grid."""

    def __init__(self, required: int, cap: int):
        super().__init__(f"{required} cells required, cap is {cap}")
        self.required = required
        self.cap = cap


class NotRenderable(LacError):
    """Text rendering is only defined for two-dimensional grids."""
