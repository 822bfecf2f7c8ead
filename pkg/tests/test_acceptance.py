"""Acceptance gate: one test per headline guarantee, each with its tolerance.

Every test prints a single PASS/FAIL line (visible with `pytest -s` or
`-rA`) and then asserts, so the suite both reports and enforces.  Timing
tolerances are generous on purpose -- they catch accidental switches from
closed forms to enumeration, not micro-regressions.
"""

import itertools
import json
import random
import time

from lac import (
    Alphabet,
    Mode,
    build_tensor,
    count_arrangements,
    count_combinations,
    count_lists,
    count_permutations,
    enumerate_selections,
    factorial,
    family_count,
    matrix_rows,
    oracle_enumerate,
    rank,
    unrank,
)
from lac.cli import main, run_verify


def report(name, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


def timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, (time.perf_counter() - start) * 1000.0  # ms


def test_c1_worked_example_counts():
    """Five symbols taken two at a time: 25 lists, 20 arrangements, 10 combinations."""
    fn = lambda: (
        count_lists(5, 2),
        count_arrangements(5, 2),
        count_combinations(5, 2),
    )
    fn()  # warm
    got, ms = timed(fn)
    ok = got == (25, 20, 10) and ms < 1.0
    report(
        "worked-example-counts",
        ok,
        f"lists/arrangements/combinations = {got} in {ms:.3f} ms (tolerance: exact, < 1 ms)",
    )


def test_c2_matrix_fidelity(capsys):
    """The 5x5 grids carry exactly the right cells in exactly the right places."""
    # Structure, via the shipped CLI.
    expectations = {
        "list": (25, lambda i, j: True),
        "arrangement": (20, lambda i, j: i != j),
        "combination": (10, lambda i, j: i < j),
    }
    structure_ok = True
    detail = []
    for mode_name, (want_count, want_filled) in expectations.items():
        code = main(["matrix", "--mode", mode_name, "--n", "5", "--format", "json"])
        record = json.loads(capsys.readouterr().out)
        filled = 0
        for i, row in enumerate(record["matrix"]):
            for j, cell in enumerate(row.split(" ")):
                is_filled = cell != "·"
                filled += is_filled
                structure_ok &= is_filled == want_filled(i, j)
        structure_ok &= code == 0 and filled == want_count == int(record["count"])
        detail.append(f"{mode_name}={filled}")

    # Speed, on the library path the CLI wraps (grid build + render).
    alphabet = Alphabet.default(5)

    def build_all():
        return [
            matrix_rows(build_tensor(alphabet, 2, mode))
            for mode in (Mode.LIST, Mode.ARRANGEMENT, Mode.COMBINATION)
        ]

    build_all()  # warm
    _, ms = timed(build_all)
    ok = structure_ok and ms < 1.0
    report(
        "matrix-fidelity",
        ok,
        f"filled cells {', '.join(detail)}; build+render {ms:.3f} ms"
        " (tolerance: exact cells, < 1 ms)",
    )


def test_c3_oracle_equivalence():
    """Streams equal brute force for every n in 0..6, p in 0..4, every mode."""
    start = time.perf_counter()
    cells = 0
    for n in range(0, 7):
        alphabet = Alphabet.default(n)
        for p in range(0, 5):
            for mode in Mode:
                if mode is Mode.PERMUTATION and p != n:
                    continue  # refusal agreement is checked via run_verify below
                cells += 1
                fast = enumerate_selections(alphabet, p, mode)
                slow = oracle_enumerate(alphabet, p, mode)
                for a, b in itertools.zip_longest(fast, slow):
                    assert a == b, f"divergence at n={n} p={p} mode={mode.value}"
    _, failure = run_verify(6, 4)
    seconds = time.perf_counter() - start
    ok = failure is None and seconds < 10.0
    report(
        "oracle-equivalence",
        ok,
        f"{cells} stream comparisons plus full verify grid in {seconds:.2f} s"
        " (tolerance: exact, < 10 s)",
    )


def test_c4_permutation_identity():
    """Permutations are full-length arrangements: P(n) = A(n, n) = n! for n in 0..10."""
    ok = all(
        count_permutations(n) == count_arrangements(n, n) == factorial(n)
        for n in range(0, 11)
    )
    report("permutation-identity", ok, "P(n) = A(n, n) = n! for n = 0..10 (tolerance: exact)")


def test_c5_ratio_law():
    """A(n, p) = C(n, p) * p! everywhere in 0 <= p <= n <= 12."""
    ok = all(
        count_arrangements(n, p) == count_combinations(n, p) * factorial(p)
        for n in range(0, 13)
        for p in range(0, n + 1)
    )
    report("ratio-law", ok, "A = C * p! over 0 <= p <= n <= 12 (tolerance: exact)")


def test_c6_rank_unrank_roundtrips():
    """1000 seeded random roundtrips with order preservation, n <= 10, p <= 5."""
    rng = random.Random(20260817)
    start = time.perf_counter()
    cases = 0
    while cases < 1000:
        mode = rng.choice(list(Mode))
        if mode is Mode.PERMUTATION:
            n = rng.randint(0, 5)
            p = n
        else:
            n = rng.randint(0, 10)
            p = rng.randint(0, 5)
        total = family_count(n, p, mode)
        if total == 0:
            continue
        alphabet = Alphabet.default(n)
        r1 = rng.randrange(total)
        r2 = rng.randrange(total)
        s1 = unrank(r1, alphabet, p, mode)
        s2 = unrank(r2, alphabet, p, mode)
        assert rank(s1, alphabet) == r1
        assert rank(s2, alphabet) == r2
        # Rank order must mirror lexicographic order.
        assert (r1 < r2) == (s1.indices < s2.indices)
        assert (r1 == r2) == (s1.indices == s2.indices)
        cases += 1
    seconds = time.perf_counter() - start
    ok = seconds < 1.0
    report(
        "rank-unrank-roundtrips",
        ok,
        f"{cases} cases (2 unranks + 2 ranks each) in {seconds:.3f} s"
        " (tolerance: exact, < 1 s)",
    )


def test_c7_large_binomial_cross_check():
    """C(100, 50) from the multiplicative form matches an additions-only Pascal table."""
    count_combinations(100, 50)  # warm
    fast, ms = timed(lambda: count_combinations(100, 50))

    row = [1]
    for _ in range(100):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    slow = row[50]

    fast_digits = list(str(fast))
    slow_digits = list(str(slow))
    ok = fast_digits == slow_digits and ms < 100.0
    report(
        "large-binomial-cross-check",
        ok,
        f"C(100,50) = {fast} agrees digit-for-digit ({len(fast_digits)} digits)"
        f" in {ms:.3f} ms (tolerance: exact, < 100 ms)",
    )
