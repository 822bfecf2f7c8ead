"""The p-dimensional selection grid and its two-dimensional text rendering.

A grid holds every length-p index tuple over the alphabet as a cell; a cell
is filled exactly when its tuple is a canonical member of the grid's mode.
Grids are for inspection and verification at small sizes; the enumeration
streams are the tool for anything large.  Instances are immutable once built.
"""

import itertools

from .core import Alphabet, Mode, Selection
from .errors import CapExceeded, NotRenderable, PermutationLengthMismatch

DEFAULT_CELL_CAP = 10**6
PLACEHOLDER = "·"  # ·


class LacTensor:
    """An n**p grid whose filled cells are exactly one family's selections."""

    __slots__ = ("alphabet", "p", "mode", "cells")

    def __init__(self, alphabet: Alphabet, p: int, mode: Mode, cells):
        self.alphabet = alphabet
        self.p = p
        self.mode = mode
        # insertion order is row-major; kept that way for iteration
        self.cells = dict(cells)

    @property
    def shape(self) -> tuple[int, ...]:
        return (len(self.alphabet),) * self.p

    @property
    def filled_count(self) -> int:
        return len(self.cells)

    def is_filled(self, index_tuple: tuple[int, ...]) -> bool:
        return index_tuple in self.cells

    def selections(self):
        """Filled cells in row-major order."""
        return iter(self.cells.values())

    def __repr__(self) -> str:
        return (
            f"LacTensor(mode={self.mode.value}, shape={self.shape},"
            f" filled={self.filled_count})"
        )


def build_tensor(
    alphabet: Alphabet, p: int, mode: Mode, cap: int = DEFAULT_CELL_CAP
) -> LacTensor:
    """Materialize the grid, filling cells by the mode's membership test.

    Refuses with CapExceeded when the full grid would hold more than `cap`
    cells, reporting the size it would have needed.
    """
    if p < 0:
        raise ValueError(f"p must be nonnegative, got {p}")
    if cap <= 0:
        raise ValueError(f"cap must be positive, got {cap}")
    n = len(alphabet)
    size = n**p
    if size > cap:
        raise CapExceeded(size, cap)
    if mode is Mode.PERMUTATION and p != n:
        raise PermutationLengthMismatch(
            f"permutation over {n} symbols must have length {n}, got {p}"
        )
    cells = {}
    for t in itertools.product(range(n), repeat=p):
        if mode.admits(t):
            cells[t] = Selection(t, mode)
    return LacTensor(alphabet, p, mode, cells)


def matrix_rows(tensor: LacTensor) -> list[str]:
    """The n text rows of a two-dimensional grid.

    Filled cells render as their concatenated symbols, blank cells as the
    placeholder dot, joined by single spaces.
    """
    if tensor.p != 2:
        raise NotRenderable(
            f"matrix rendering needs a 2-dimensional grid, this one has p={tensor.p}"
        )
    n = len(tensor.alphabet)
    rows = []
    for i in range(n):
        cells = [
            tensor.alphabet.word((i, j)) if (i, j) in tensor.cells else PLACEHOLDER
            for j in range(n)
        ]
        rows.append(" ".join(cells))
    return rows


def render_matrix(tensor: LacTensor) -> str:
    """matrix_rows() joined into one newline-separated block."""
    return "\n".join(matrix_rows(tensor))
