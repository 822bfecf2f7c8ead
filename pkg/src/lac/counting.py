"""Exact closed-form counts for each selection family.

Every result is a plain Python int, which is arbitrary precision: nothing
here rounds, wraps, or approximates.  All functions are pure.
"""

from .core import Mode
from .errors import PermutationLengthMismatch


def _require_nonnegative(**values):
    for name, value in values.items():
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


def factorial(n: int) -> int:
    """n * (n-1) * ... * 2 * 1, with the empty product 0! = 1."""
    _require_nonnegative(n=n)
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def count_lists(n: int, p: int) -> int:
    """Ordered selections with repetition: n**p.

    p = 0 counts the single empty selection, so 0**0 is 1 here.
    """
    _require_nonnegative(n=n, p=p)
    return n**p


def count_arrangements(n: int, p: int) -> int:
    """Ordered selections without repetition: n * (n-1) * ... * (n-p+1).

    The falling product is evaluated directly, never via a full n!
    intermediate.  Returns 1 when p = 0 and 0 when p > n (no injective
    selection exists).
    """
    _require_nonnegative(n=n, p=p)
    if p > n:
        return 0
    out = 1
    for k in range(n, n - p, -1):
        out *= k
    return out


def count_permutations(n: int) -> int:
    """Orderings of all n symbols: arrangements taken n at a time, i.e. n!."""
    return count_arrangements(n, n)


def count_combinations(n: int, p: int) -> int:
    """Unordered selections without repetition: n! / ((n-p)! p!).

    Computed by the stepwise multiply-then-divide scheme: after step i the
    running value is the binomial of (n-p+i) over i, so every division is
    exact and intermediates stay close to the final result.  Each step checks
    exactness; a remainder would mean a broken scheme, not bad input.
    """
    _require_nonnegative(n=n, p=p)
    if p > n:
        return 0
    out = 1
    for i in range(1, p + 1):
        out, leftover = divmod(out * (n - p + i), i)
        if leftover:
            raise ArithmeticError(
                f"non-exact division at step {i} while computing C({n},{p})"
            )
    return out


def family_count(n: int, p: int, mode: Mode) -> int:
    """Closed-form size of the (n, p, mode) family."""
    if mode is Mode.LIST:
        return count_lists(n, p)
    if mode is Mode.ARRANGEMENT:
        return count_arrangements(n, p)
    if mode is Mode.COMBINATION:
        return count_combinations(n, p)
    _require_nonnegative(n=n, p=p)
    if p != n:
        raise PermutationLengthMismatch(
            f"permutation over {n} symbols must have length {n}, got {p}"
        )
    return count_permutations(n)
