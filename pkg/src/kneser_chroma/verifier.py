"""Exhaustive certification of colorings, plus exact chromatic numbers of tiny instances.

verify_coloring scans every unordered vertex pair with vectorized popcounts,
so the ~6.5e7 pairs of K^2(16,7) finish in seconds.  Pair scanning may be
partitioned across worker processes by blocks of the first index; the merge
(AND of passed, minimum violation) is schedule-independent, so reports are
identical for any worker count.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from math import comb
from multiprocessing import get_context
from typing import Optional, Sequence

import numpy as np

from .coloring import GroundSet, color_vertex, ground_set_from_json
from .errors import TooLarge
from .esym import esym_naive
from .gf import field_from_json
from .kneser import (
    JOHNSON_POWER,
    KNESER,
    KNESER_SQUARE,
    MAX_VERTICES,
    GraphSpec,
    adjacent,
    enumerate_vertices,
    intersect_size,
)

SQUARE_PROPER = "square_proper"
INJECTIVE = "injective"
JOHNSON_M_PROPER = "johnson_m_proper"

PROPERTIES = (SQUARE_PROPER, INJECTIVE, JOHNSON_M_PROPER)


@dataclass(frozen=True)
class Violation:
    index_a: int
    index_b: int
    mask_a: int
    mask_b: int
    color_a: int
    color_b: int
    intersection: int

    def to_json(self) -> dict:
        return {
            "index_a": self.index_a,
            "index_b": self.index_b,
            "mask_a": self.mask_a,
            "mask_b": self.mask_b,
            "color_a": self.color_a,
            "color_b": self.color_b,
            "intersection": self.intersection,
        }


@dataclass(frozen=True)
class VerificationReport:
    spec: GraphSpec
    ground: dict  # GroundSet serialization
    property: str
    r: int
    passed: bool
    violation: Optional[Violation]
    distinct_colors: int
    pairs_checked: int
    elapsed: float

    def to_json(self, include_timing: bool = False) -> dict:
        # timing excluded by default so reports are byte-identical across runs
        d = {
            "spec": self.spec.to_json(),
            "ground": self.ground,
            "property": self.property,
            "r": self.r,
            "passed": self.passed,
            "violation": self.violation.to_json() if self.violation else None,
            "distinct_colors": self.distinct_colors,
            "pairs_checked": self.pairs_checked,
        }
        if include_timing:
            d["elapsed"] = self.elapsed
        return d


def _intersection_bounds(spec: GraphSpec, property: str) -> tuple[int, int, bool]:
    """(lo, hi, include_disjoint): pair needs distinct colors iff
    lo <= |A n B| <= hi, or |A n B| = 0 when include_disjoint."""
    n, k = spec.n, spec.k
    if property == SQUARE_PROPER:
        return 3 * k - n, k - 1, True
    if property == INJECTIVE:
        if n <= 2 * k:
            raise ValueError("injective property needs n > 2k")
        return k - (n - 2 * k), k - 1, False
    if property == JOHNSON_M_PROPER:
        if spec.variant != JOHNSON_POWER:
            raise ValueError("johnson_m_proper needs a johnson_power spec")
        return k - spec.m, k - 1, False
    raise ValueError(f"unknown property {property!r}")


def _scan_block(
    masks: np.ndarray, colors: np.ndarray, lo: int, hi: int, disjoint: bool, start: int, stop: int
) -> Optional[tuple[int, int]]:
    """First (i, j) violation with start <= i < stop, in lexicographic order."""
    for i in range(start, stop):
        inter = np.bitwise_count(masks[i] & masks[i + 1 :])
        need = (inter >= lo) & (inter <= hi)
        if disjoint:
            need |= inter == 0
        bad = need & (colors[i + 1 :] == colors[i])
        if bad.any():
            j = int(np.flatnonzero(bad)[0]) + i + 1
            return (i, j)
    return None


def _scan_block_args(args) -> Optional[tuple[int, int]]:
    return _scan_block(*args)


def verify_table(
    spec: GraphSpec,
    masks: Sequence[int],
    colors: Sequence[int],
    property: str,
    workers: int = 1,
) -> tuple[bool, Optional[tuple[int, int]], int, int]:
    """Scan all unordered pairs of an explicit (mask, color) table.

    Returns (passed, first violation (i, j) or None, distinct colors,
    pairs checked).  Used both by verify_coloring and by CSV re-imports.
    """
    n_vertices = len(masks)
    marr = np.asarray(masks, dtype=np.uint64)
    carr = np.asarray(colors, dtype=np.int64)
    lo, hi, disjoint = _intersection_bounds(spec, property)

    if workers <= 1 or n_vertices < 256:
        hit = _scan_block(marr, carr, lo, hi, disjoint, 0, n_vertices - 1)
    else:
        bounds = np.linspace(0, n_vertices - 1, workers + 1, dtype=int)
        tasks = [
            (marr, carr, lo, hi, disjoint, int(a), int(b))
            for a, b in zip(bounds[:-1], bounds[1:])
        ]
        with get_context("fork").Pool(workers) as pool:
            hits = [h for h in pool.map(_scan_block_args, tasks) if h is not None]
        hit = min(hits) if hits else None

    distinct = len(set(colors))
    pairs = n_vertices * (n_vertices - 1) // 2
    return hit is None, hit, distinct, pairs


def verify_coloring(
    spec: GraphSpec, X: GroundSet, r: int, property: str, workers: int = 1
) -> VerificationReport:
    """Color all vertices of spec over ground set X and certify the property.

    square_proper checks K^2 adjacency, injective checks common-neighbor
    pairs, johnson_m_proper checks J^m adjacency with the color truncated to
    the first m entries.
    """
    if spec.n != X.n:
        raise ValueError(f"spec n={spec.n} does not match ground size {X.n}")
    count = comb(spec.n, spec.k)
    if count > MAX_VERTICES:
        raise TooLarge(f"C({spec.n},{spec.k}) = {count} exceeds {MAX_VERTICES}")
    entries = spec.m if property == JOHNSON_M_PROPER else r

    start = time.perf_counter()
    masks = enumerate_vertices(spec.n, spec.k)
    colors = [color_vertex(X, m, entries).index for m in masks]
    passed, hit, distinct, pairs = verify_table(spec, masks, colors, property, workers)

    violation = None
    if hit is not None:
        i, j = hit
        violation = Violation(
            index_a=i,
            index_b=j,
            mask_a=masks[i],
            mask_b=masks[j],
            color_a=colors[i],
            color_b=colors[j],
            intersection=intersect_size(masks[i], masks[j]),
        )
    return VerificationReport(
        spec=spec,
        ground=X.to_json(),
        property=property,
        r=entries,
        passed=passed,
        violation=violation,
        distinct_colors=distinct,
        pairs_checked=pairs,
        elapsed=time.perf_counter() - start,
    )


def recheck_violation(report: VerificationReport) -> bool:
    """Recompute both colors (naive subset enumeration) and the predicate for
    the recorded pair; true iff the violation is genuine."""
    if report.passed or report.violation is None:
        raise ValueError("recheck requires a failed report with a recorded violation")
    v = report.violation
    X = ground_set_from_json(report.ground)
    F = field_from_json(report.ground["field"])

    def naive_color(mask: int) -> int:
        elems = [X.elements[i] for i in range(X.n) if mask >> i & 1]
        idx = 0
        for i in range(report.r, 0, -1):
            idx = idx * F.order + esym_naive(F, elems, i)
        return idx

    lo, hi, disjoint = _intersection_bounds(report.spec, report.property)
    inter = intersect_size(v.mask_a, v.mask_b)
    needs_distinct = (lo <= inter <= hi) or (disjoint and inter == 0)
    ca, cb = naive_color(v.mask_a), naive_color(v.mask_b)
    return (
        needs_distinct
        and ca == cb
        and ca == v.color_a
        and cb == v.color_b
        and inter == v.intersection
    )


# -- exact / greedy chromatic numbers of tiny instances ----------------------

EXACT_MAX_VERTICES = 60


def _adjacency_bitsets(spec: GraphSpec, max_vertices: int) -> list[int]:
    count = comb(spec.n, spec.k)
    if count > max_vertices:
        raise TooLarge(f"C({spec.n},{spec.k}) = {count} exceeds {max_vertices}")
    vertices = enumerate_vertices(spec.n, spec.k)
    adj = [0] * count
    for i, a in enumerate(vertices):
        for j in range(i + 1, count):
            if adjacent(spec, a, vertices[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def greedy_chromatic(spec: GraphSpec, order: Sequence[int] | None = None) -> int:
    """Greedy coloring in the given vertex order (default ascending index)."""
    adj = _adjacency_bitsets(spec, 20_000)
    n = len(adj)
    order = range(n) if order is None else order
    colors = [-1] * n
    used = 0
    for v in order:
        taken = {colors[u] for u in range(n) if adj[v] >> u & 1 and colors[u] >= 0}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
        used = max(used, c + 1)
    return used


def _max_clique_greedy(adj: list[int]) -> int:
    """Deterministic maximal-clique lower bound, seeded from each vertex."""
    n = len(adj)
    best = 0
    for v in range(n):
        clique = [v]
        cand = adj[v]
        while cand:
            u = (cand & -cand).bit_length() - 1
            clique.append(u)
            cand &= adj[u]
        best = max(best, len(clique))
    return best


def exact_chromatic(spec: GraphSpec) -> int:
    """Exact chromatic number by DSATUR-ordered branch and bound.

    Deterministic: vertex selection maximizes (saturation, degree) with ties
    broken by lowest index; colors tried in ascending order.
    """
    adj = _adjacency_bitsets(spec, EXACT_MAX_VERTICES)
    n = len(adj)
    if n == 0:
        return 0
    best = greedy_chromatic(spec)
    lower = _max_clique_greedy(adj)
    if lower == best:
        return best
    degrees = [a.bit_count() for a in adj]
    colors = [-1] * n
    ncolors = [0] * n  # bitmask of colors present in each vertex's neighborhood

    def solve(colored: int, used: int) -> None:
        nonlocal best
        if colored == n:
            best = used
            return
        # DSATUR: most saturated uncolored vertex, then highest degree, then lowest index
        pick, pick_key = -1, (-1, -1, 0)
        for v in range(n):
            if colors[v] < 0:
                key = (ncolors[v].bit_count(), degrees[v], -v)
                if key > pick_key:
                    pick, pick_key = v, key
        for c in range(used + 1):  # existing colors plus at most one new
            if ncolors[pick] >> c & 1:
                continue
            new_used = max(used, c + 1)
            if new_used >= best:
                continue
            colors[pick] = c
            touched = []
            nb = adj[pick]
            while nb:
                u = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if not ncolors[u] >> c & 1:
                    ncolors[u] |= 1 << c
                    touched.append(u)
            solve(colored + 1, new_used)
            for u in touched:
                ncolors[u] &= ~(1 << c)
            colors[pick] = -1

    solve(0, 0)
    return best
