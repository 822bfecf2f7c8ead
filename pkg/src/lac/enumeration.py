"""Lazy lexicographic generation of each family, plus rank/unrank bijections.

Streams are successor-driven cursors: each step rewrites a few positions of
the current index tuple in place, so memory stays O(n) no matter how large
the family is.  A stream is a single-consumer iterator; it may be handed
between threads but not advanced concurrently.  rank() and unrank() are pure.
"""

from collections.abc import Iterator

from .core import Alphabet, Mode, Selection, check_selection
from .counting import count_arrangements, count_combinations, family_count
from .errors import PermutationLengthMismatch, RankOutOfRange


def enumerate_selections(alphabet: Alphabet, p: int, mode: Mode) -> Iterator[Selection]:
    """Yield every selection of the (alphabet, p, mode) family exactly once,
    in strictly increasing lexicographic order of index tuples.

    An empty stream (p > n in the injective families) is a normal result.
    Argument problems raise immediately, before any iteration.
    """
    if p < 0:
        raise ValueError(f"p must be nonnegative, got {p}")
    n = len(alphabet)
    if mode is Mode.PERMUTATION and p != n:
        raise PermutationLengthMismatch(
            f"permutation over {n} symbols must have length {n}, got {p}"
        )
    return _stream(alphabet, p, mode)


def _stream(alphabet, p, mode):
    n = len(alphabet)
    if mode is Mode.LIST:
        indices = _list_indices(n, p)
    elif mode is Mode.COMBINATION:
        indices = _combination_indices(n, p)
    else:
        indices = _arrangement_indices(n, p)
    for t in indices:
        yield Selection(t, mode)


def _list_indices(n, p):
    """Base-n odometer: increment the rightmost digit, carrying leftward."""
    if p == 0:
        yield ()
        return
    if n == 0:
        return
    cur = [0] * p
    while True:
        yield tuple(cur)
        i = p - 1
        while i >= 0 and cur[i] == n - 1:
            cur[i] = 0
            i -= 1
        if i < 0:
            return
        cur[i] += 1


def _combination_indices(n, p):
    """Strictly increasing cursor: bump the rightmost index with room to
    grow, then restack everything after it as low as possible."""
    if p == 0:
        yield ()
        return
    if p > n:
        return
    cur = list(range(p))
    while True:
        yield tuple(cur)
        i = p - 1
        while i >= 0 and cur[i] == n - p + i:
            i -= 1
        if i < 0:
            return
        cur[i] += 1
        for j in range(i + 1, p):
            cur[j] = cur[j - 1] + 1


def _arrangement_indices(n, p):
    """Injective cursor: advance the rightmost position that has a larger
    unused value available, then refill the suffix with the smallest unused
    values in ascending order."""
    if p == 0:
        yield ()
        return
    if p > n:
        return
    cur = list(range(p))
    used = [False] * n
    for v in cur:
        used[v] = True
    while True:
        yield tuple(cur)
        i = p - 1
        while i >= 0:
            v = cur[i]
            used[v] = False
            w = v + 1
            while w < n and used[w]:
                w += 1
            if w < n:
                cur[i] = w
                used[w] = True
                break
            i -= 1
        if i < 0:
            return
        w = 0
        for j in range(i + 1, p):
            while used[w]:
                w += 1
            cur[j] = w
            used[w] = True


def rank(selection: Selection, alphabet: Alphabet) -> int:
    """0-based position of a selection in its family's enumeration stream.

    Lists rank as base-n numerals, arrangements and permutations through
    factorial-number-system digits, combinations through the combinadic.
    """
    check_selection(selection, alphabet)
    n = len(alphabet)
    if selection.mode is Mode.LIST:
        r = 0
        for i in selection.indices:
            r = r * n + i
        return r
    if selection.mode is Mode.COMBINATION:
        return _combination_rank(selection.indices, n)
    return _arrangement_rank(selection.indices, n)


def _combination_rank(indices, n):
    # Sum the sizes of the blocks that precede each chosen index: for every
    # smaller still-eligible value v at position i there are C(n-1-v, p-1-i)
    # completions, all of which come earlier in the stream.
    p = len(indices)
    r = 0
    prev = -1
    for i, c in enumerate(indices):
        for v in range(prev + 1, c):
            r += count_combinations(n - 1 - v, p - 1 - i)
        prev = c
    return r


def _arrangement_rank(indices, n):
    # Factorial-number-system digit at position i: how many unused values sit
    # below the chosen one, weighted by the arrangements of the suffix.
    p = len(indices)
    used = [False] * n
    r = 0
    for i, v in enumerate(indices):
        below = sum(1 for w in range(v) if not used[w])
        r += below * count_arrangements(n - 1 - i, p - 1 - i)
        used[v] = True
    return r


def unrank(r: int, alphabet: Alphabet, p: int, mode: Mode) -> Selection:
    """The unique selection whose rank is r; inverse of rank()."""
    if r < 0:
        raise ValueError(f"rank must be nonnegative, got {r}")
    if p < 0:
        raise ValueError(f"p must be nonnegative, got {p}")
    n = len(alphabet)
    total = family_count(n, p, mode)
    if r >= total:
        raise RankOutOfRange(
            f"rank out of range: {r} >= {total}, the size of the"
            f" (n={n}, p={p}, {mode.value}) family"
        )
    if mode is Mode.LIST:
        digits = [0] * p
        for i in range(p - 1, -1, -1):
            r, digits[i] = divmod(r, n)
        return Selection(tuple(digits), mode)
    if mode is Mode.COMBINATION:
        return Selection(_combination_unrank(r, n, p), mode)
    return Selection(_arrangement_unrank(r, n, p), mode)


def _combination_unrank(r, n, p):
    out = []
    v = 0
    for i in range(p):
        # Walk candidate values upward, skipping whole blocks until the one
        # containing r; what remains of r is the rank within that block.
        while True:
            block = count_combinations(n - 1 - v, p - 1 - i)
            if r < block:
                break
            r -= block
            v += 1
        out.append(v)
        v += 1
    return tuple(out)


def _arrangement_unrank(r, n, p):
    out = []
    free = list(range(n))
    for i in range(p):
        place = count_arrangements(n - 1 - i, p - 1 - i)
        digit, r = divmod(r, place)
        out.append(free.pop(digit))
    return tuple(out)
