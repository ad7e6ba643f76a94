"""Acceptance suite: one test per certified claim, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion lines.
Criterion 6 is expected to fail: see tests/ACCEPTANCE_NOTES.md.
"""

import bisect
import json
import pathlib
import random
import time
from fractions import Fraction
from math import comb, floor

import pytest

from kneser_chroma.bounds import bounds_report
from kneser_chroma.coloring import (
    FIELD_MINUS_SUBFIELD,
    FIELD_MINUS_SUBFIELD_PLUS_ZERO,
    FIELD_MINUS_ZERO,
    FULL_FIELD,
    PRIME_PREFIX,
    build_ground_set,
    check_ground_set,
    clique_witness,
)
from kneser_chroma.esym import esym_naive
from kneser_chroma.gf import make_binary_field, make_prime_field
from kneser_chroma.kneser import JOHNSON_POWER, KNESER, KNESER_SQUARE, GraphSpec, adjacent
from kneser_chroma.primes import find_prime_in_interval, sieve
from kneser_chroma.verifier import (
    INJECTIVE,
    JOHNSON_M_PROPER,
    SQUARE_PROPER,
    exact_chromatic,
    recheck_violation,
    verify_coloring,
)

pytestmark = pytest.mark.filterwarnings("ignore:.*outside 2 <= r <= k-2.*")

GOLDEN = pathlib.Path(__file__).parent / "golden"


def _line(num, ok, detail):
    print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def _square(k, r, construction, t_prime=0, entries=None, workers=1):
    X = build_ground_set(k, r, construction, t_prime)
    spec = GraphSpec(n=2 * k + r, k=k, variant=KNESER_SQUARE)
    start = time.perf_counter()
    rep = verify_coloring(spec, X, entries if entries is not None else r, SQUARE_PROPER, workers)
    return rep, time.perf_counter() - start


def test_criterion_01_thm2a_k3_r2():
    rep, dt = _square(3, 2, FULL_FIELD)
    ok = rep.passed and rep.distinct_colors <= 64 and rep.pairs_checked == 1540 and dt < 0.1
    _line(1, ok, f"K^2(8,3) over GF(8): distinct={rep.distinct_colors} <= 64, {dt:.3f}s")


def test_criterion_02_thm2a_k7_r2():
    rep, dt = _square(7, 2, FULL_FIELD)
    ok = (
        rep.passed
        and rep.distinct_colors <= 256
        and rep.pairs_checked == comb(11440, 2)
        and dt < 30
    )
    _line(2, ok, f"K^2(16,7) over GF(16): distinct={rep.distinct_colors} <= 256, {dt:.2f}s")


def test_criterion_03_thm2b_k3_r1():
    rep, dt = _square(3, 1, FIELD_MINUS_ZERO)
    ok = rep.passed and rep.distinct_colors <= 8 and dt < 0.1
    _line(3, ok, f"K^2(7,3) over GF(8)\\{{0}}: distinct={rep.distinct_colors} <= 8 = 2k+2, {dt:.3f}s")


def test_criterion_04_thm2b_k6_r3():
    rep, dt = _square(6, 3, FIELD_MINUS_ZERO)
    ok = rep.passed and rep.distinct_colors <= 4096 and dt < 10
    _line(4, ok, f"K^2(15,6) over GF(16)\\{{0}}: distinct={rep.distinct_colors} <= 4096, {dt:.2f}s")


def test_criterion_05_cor3i_k5_r2():
    X = build_ground_set(5, 2, FIELD_MINUS_SUBFIELD, 2)
    vanishes = check_ground_set(X, 2)
    rep, _ = _square(5, 2, FIELD_MINUS_SUBFIELD, 2)
    ok = vanishes and rep.passed and rep.distinct_colors <= 256
    _line(5, ok, f"K^2(12,5) over GF(16)\\GF(4): vanishing={vanishes}, distinct={rep.distinct_colors} <= 256")


def test_criterion_06_cor3ii_k6_r1():
    # Stated claim: square_proper passes with bound (13+4)^1 = 17.  It does
    # not: with r = 1 the color is the element sum, and since 0 is in X any
    # disjoint pair A, B with A u B = X \ {0} collides.  Recorded as a
    # defect of the r = 1 case; see ACCEPTANCE_NOTES.md.
    rep, _ = _square(6, 1, FIELD_MINUS_SUBFIELD_PLUS_ZERO, 2)
    ok = rep.passed and rep.distinct_colors <= 17
    _line(6, ok, f"K^2(13,6) over (GF(16)\\GF(4))u{{0}}: passed={rep.passed}, distinct={rep.distinct_colors}")


def test_criterion_07_thm4_injective_k4_r2():
    assert find_prime_in_interval(10) == 11
    X = build_ground_set(4, 2, PRIME_PREFIX)
    assert X.field.p == 11
    spec = GraphSpec(n=10, k=4, variant=KNESER)
    rep = verify_coloring(spec, X, 2, INJECTIVE)
    thm4_bound = floor((Fraction(9, 4) * 4 + Fraction(9 * 5, 8)) ** 2)
    ok = rep.passed and 11**2 <= thm4_bound
    _line(7, ok, f"K(10,4) injective over GF(11) prefix: passed={rep.passed}, 121 <= {thm4_bound}")


def test_criterion_08_johnson_k4_r2_m2():
    X = build_ground_set(4, 2, PRIME_PREFIX)
    spec = GraphSpec(n=10, k=4, variant=JOHNSON_POWER, m=2)
    rep = verify_coloring(spec, X, 2, JOHNSON_M_PROPER)
    _line(8, rep.passed, f"J^2(10,4) proper: pairs={rep.pairs_checked}")


def test_criterion_09_degenerate_exact():
    a = exact_chromatic(GraphSpec(n=4, k=2, variant=KNESER_SQUARE))
    b = exact_chromatic(GraphSpec(n=5, k=2, variant=KNESER_SQUARE))
    _line(9, (a, b) == (2, 10), f"chi(K^2(4,2))={a} (matching), chi(K^2(5,2))={b} (complete)")


def test_criterion_10_clique_witness():
    members = clique_witness(3, 2)
    spec = GraphSpec(n=8, k=3, variant=KNESER_SQUARE)
    pairwise = all(adjacent(spec, a, b) for i, a in enumerate(members) for b in members[i + 1 :])
    ok = len(members) == 21 and pairwise
    _line(10, ok, f"clique witness in K^2(8,3): size={len(members)}, pairwise adjacent={pairwise}")


def test_criterion_11_negative_control():
    rep, _ = _square(3, 2, FULL_FIELD, entries=1)
    genuine = (not rep.passed) and rep.violation is not None and recheck_violation(rep)
    v = rep.violation
    _line(11, genuine, f"truncated color fails with recheckable pair ({v.mask_a:#x},{v.mask_b:#x})")


def test_criterion_12_convolution_property():
    # 500 random disjoint unions, both sides via the naive oracle only
    rng = random.Random(1540)
    failures = 0
    for _ in range(500):
        if rng.random() < 0.5:
            F = make_prime_field(rng.choice([3, 5, 7, 11, 13, 17, 23, 31, 41, 53, 61]))
        else:
            F = make_binary_field(rng.randint(1, 6))
        pool = list(range(F.order))
        rng.shuffle(pool)
        nx = rng.randint(0, min(6, F.order))
        ny = rng.randint(0, min(6, F.order - nx))
        X, Y = pool[:nx], pool[nx : nx + ny]
        r = rng.randint(1, 6)
        for i in range(1, r + 1):
            lhs = esym_naive(F, X + Y, i)
            rhs = 0
            for s in range(i + 1):
                rhs = F.add(rhs, F.mul(esym_naive(F, X, s), esym_naive(F, Y, i - s)))
            if lhs != rhs:
                failures += 1
    _line(12, failures == 0, f"500 disjoint-union convolution checks, {failures} failures")


def test_criterion_13_prime_interval_desk_scale():
    start = time.perf_counter()
    top = 100_000
    primes = sieve(int(9 * (top + 3) / 8) + 1)
    misses = []
    for n in range(2, top + 1):
        p = primes[bisect.bisect_left(primes, n)]
        if p > 9 * (n + 3) / 8:
            misses.append(n)
    dt = time.perf_counter() - start
    ok = not misses and dt < 5
    _line(13, ok, f"prime in [n, 9(n+3)/8] for all n in [2, 10^5]: misses={misses[:3]}, {dt:.2f}s")


@pytest.mark.parametrize("k,r", [(3, 1), (3, 2), (4, 2), (5, 2), (7, 2)])
def test_criterion_14_bounds_golden(k, r):
    got = bounds_report(k, r).to_json()
    golden = json.loads((GOLDEN / f"bounds_k{k}_r{r}.json").read_text())
    ok = got == golden
    _line(14, ok, f"bounds report (k={k}, r={r}) matches golden file")


def test_criterion_14_bounds_independent_formulas():
    # recompute each formula from scratch with Fraction arithmetic
    rep = bounds_report(3, 2)
    assert rep.clique_lower == comb(3 + 4, 2)
    assert rep.trivial_upper == comb(5, 2) ** 2
    assert rep.thm1_upper == 2 * (Fraction(9, 4) * 3 + Fraction(9 * 5, 8)) ** 2
    assert rep.thm2a_upper == 8**2
    rep = bounds_report(3, 1)
    assert rep.thm2b_upper == 8**1 == 2 * 3 + 2
    assert rep.r1_bounds["r1_8k3_plus_203"] == Fraction(8, 3) * 3 + Fraction(20, 3)
    rep = bounds_report(5, 2)
    assert rep.cor3_uppers == ((4, 2, "minus", (12 + 4) ** 2),)
    rep = bounds_report(7, 2)
    assert rep.thm2a_upper == 16**2
    _line(14, True, "independent Fraction recomputation agrees")
