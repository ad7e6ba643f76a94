"""The desk-scale instance matrix: every verifiable claim at small sizes, one call each.

Used by the CLI `report --all-desk-instances` for a one-command reproduction
of the repository's results.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import coloring as col
from .bounds import bounds_report
from .kneser import JOHNSON_POWER, KNESER, KNESER_SQUARE, GraphSpec
from .verifier import (
    INJECTIVE,
    JOHNSON_M_PROPER,
    SQUARE_PROPER,
    exact_chromatic,
    recheck_violation,
    verify_coloring,
)


@dataclass
class MatrixRow:
    name: str
    ok: bool
    detail: str
    elapsed: float


def _verify(k: int, r: int, construction: str, prop: str, t_prime: int = 0, m: int = 0):
    X = col.build_ground_set(k, r, construction, t_prime)
    n = 2 * k + r
    if prop == SQUARE_PROPER:
        spec = GraphSpec(n=n, k=k, variant=KNESER_SQUARE)
    elif prop == INJECTIVE:
        spec = GraphSpec(n=n, k=k, variant=KNESER)
    else:
        spec = GraphSpec(n=n, k=k, variant=JOHNSON_POWER, m=m)
    return verify_coloring(spec, X, r, prop)


def _instances(skip_slow: bool) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    def square(k, r, construction, bound, t_prime=0):
        def run():
            rep = _verify(k, r, construction, SQUARE_PROPER, t_prime)
            ok = rep.passed and rep.distinct_colors <= bound
            return ok, f"distinct={rep.distinct_colors} <= {bound}, pairs={rep.pairs_checked}"

        return run

    def injective(k, r):
        def run():
            rep = _verify(k, r, col.PRIME_PREFIX, INJECTIVE)
            return rep.passed, f"distinct={rep.distinct_colors}, pairs={rep.pairs_checked}"

        return run

    def johnson(k, r, m):
        def run():
            rep = _verify(k, r, col.PRIME_PREFIX, JOHNSON_M_PROPER, m=m)
            return rep.passed, f"distinct={rep.distinct_colors}, pairs={rep.pairs_checked}"

        return run

    def degenerate():
        def run():
            a = exact_chromatic(GraphSpec(n=4, k=2, variant=KNESER_SQUARE))
            b = exact_chromatic(GraphSpec(n=5, k=2, variant=KNESER_SQUARE))
            return (a, b) == (2, 10), f"chi(K^2(4,2))={a}, chi(K^2(5,2))={b}"

        return run

    def clique():
        def run():
            w = col.clique_witness(3, 2)
            return len(w) == 21, f"witness size {len(w)}"

        return run

    def negative_control():
        def run():
            X = col.build_ground_set(3, 2, col.FULL_FIELD)
            spec = GraphSpec(n=8, k=3, variant=KNESER_SQUARE)
            rep = verify_coloring(spec, X, 1, SQUARE_PROPER)
            ok = (not rep.passed) and recheck_violation(rep)
            v = rep.violation
            detail = f"violation masks ({v.mask_a:#x},{v.mask_b:#x})" if v else "no violation"
            return ok, detail

        return run

    def ground_check(k, r, construction, t_prime=0):
        def run():
            X = col.build_ground_set(k, r, construction, t_prime)
            ok = col.check_ground_set(X, r)
            return ok, f"odd e_i vanish on X (|X|={X.n})"

        return run

    rows = [
        ("thm2a k=3 r=2 X=GF(8) square", square(3, 2, col.FULL_FIELD, 64)),
        ("thm2b k=3 r=1 X=GF(8)\\{0} square", square(3, 1, col.FIELD_MINUS_ZERO, 8)),
        ("thm2b k=6 r=3 X=GF(16)\\{0} square", square(6, 3, col.FIELD_MINUS_ZERO, 4096)),
        ("cor3i k=5 r=2 ground-set vanishing", ground_check(5, 2, col.FIELD_MINUS_SUBFIELD, 2)),
        ("cor3i k=5 r=2 X=GF(16)\\GF(4) square", square(5, 2, col.FIELD_MINUS_SUBFIELD, 256, 2)),
        (
            "cor3ii k=6 r=1 X=(GF(16)\\GF(4))u{0} square",
            square(6, 1, col.FIELD_MINUS_SUBFIELD_PLUS_ZERO, 17, 2),
        ),
        ("thm4 k=4 r=2 prime-prefix injective", injective(4, 2)),
        ("johnson k=4 r=2 m=2 proper", johnson(4, 2, 2)),
        ("degenerate exact chromatic", degenerate()),
        ("clique witness k=3 r=2", clique()),
        ("negative control r=1 truncation", negative_control()),
    ]
    if not skip_slow:
        rows.insert(1, ("thm2a k=7 r=2 X=GF(16) square", square(7, 2, col.FULL_FIELD, 256)))
    return rows


def run_desk_matrix(skip_slow: bool = False) -> list[MatrixRow]:
    out = []
    for name, fn in _instances(skip_slow):
        start = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"error: {exc}"
        out.append(MatrixRow(name, ok, detail, time.perf_counter() - start))
    return out


def bounds_summary(pairs=((3, 1), (3, 2), (4, 2), (5, 2), (7, 2))) -> list[dict]:
    return [bounds_report(k, r).to_json() for k, r in pairs]
