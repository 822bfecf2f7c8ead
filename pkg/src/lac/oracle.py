"""Brute-force witness: derive each family by filtering the full grid.

Deliberately naive and kept free of any code shared with the production
streams in enumeration.py: every length-p tuple is generated by plain
recursion and tested, never skipped.  This is test infrastructure, exposed
through the command line's verify subcommand.
"""

from collections.abc import Iterator

from .core import Alphabet, Mode, Selection
from .errors import CapExceeded, PermutationLengthMismatch

ORACLE_CAP = 10**7


def oracle_enumerate(alphabet: Alphabet, p: int, mode: Mode) -> Iterator[Selection]:
    """All selections of the family, found by exhaustive filtering."""
    if p < 0:
        raise ValueError(f"p must be nonnegative, got {p}")
    n = len(alphabet)
    if mode is Mode.PERMUTATION and p != n:
        raise PermutationLengthMismatch(
            f"permutation over {n} symbols must have length {n}, got {p}"
        )
    size = n**p
    if size > ORACLE_CAP:
        raise CapExceeded(size, ORACLE_CAP)
    return _filtered(n, p, mode)


def oracle_count(alphabet: Alphabet, p: int, mode: Mode) -> int:
    """Stream length of oracle_enumerate on the same arguments."""
    return sum(1 for _ in oracle_enumerate(alphabet, p, mode))


def _filtered(n, p, mode):
    for t in _every_tuple(n, p):
        if _keeps(t, mode):
            yield Selection(t, mode)


def _every_tuple(n, p):
    """All n**p index tuples in lexicographic order, by plain recursion."""
    if p == 0:
        yield ()
        return
    for head in range(n):
        for tail in _every_tuple(n, p - 1):
            yield (head,) + tail


def _keeps(t, mode):
    if mode is Mode.LIST:
        return True
    if mode is Mode.COMBINATION:
        # canonical representative of an unordered repetition-free pick
        return list(t) == sorted(set(t))
    return len(set(t)) == len(t)
