"""Bitmask model of K(n,k), its square, and Johnson graph powers.

Vertices are k-subsets of an n-element ground set, encoded as n-bit masks.
Adjacency is always recomputed from masks; edge sets are never materialized
(K^2(16,7) already has ~1e8 edges, and the predicates are two machine ops).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import NotRegular, TooLarge

MAX_N = 62
MAX_VERTICES = 200_000

KNESER = "kneser"
KNESER_SQUARE = "kneser_square"
JOHNSON_POWER = "johnson_power"


@dataclass(frozen=True)
class GraphSpec:
    """Which graph on the k-subsets of an n-set: K(n,k), K^2(n,k), or J^m(n,k)."""

    n: int
    k: int
    variant: str
    m: int = 0  # Johnson power, variant == JOHNSON_POWER only

    def __post_init__(self):
        if not 0 < self.k <= self.n <= MAX_N:
            raise ValueError(f"need 0 < k <= n <= {MAX_N}")
        if self.variant in (KNESER, KNESER_SQUARE) and self.n < 2 * self.k:
            raise ValueError("Kneser variants need n >= 2k")
        if self.variant == JOHNSON_POWER and not 1 <= self.m <= self.k:
            raise ValueError("Johnson power needs 1 <= m <= k")
        if self.variant not in (KNESER, KNESER_SQUARE, JOHNSON_POWER):
            raise ValueError(f"unknown variant {self.variant!r}")

    def label(self) -> str:
        if self.variant == KNESER:
            return f"K({self.n},{self.k})"
        if self.variant == KNESER_SQUARE:
            return f"K^2({self.n},{self.k})"
        return f"J^{self.m}({self.n},{self.k})"

    def to_json(self) -> dict:
        d = {"n": self.n, "k": self.k, "variant": self.variant}
        if self.variant == JOHNSON_POWER:
            d["m"] = self.m
        return d


def enumerate_vertices(n: int, k: int) -> list[int]:
    """All C(n,k) k-subset masks in increasing integer order (Gosper's hack)."""
    if not 0 < k <= n <= MAX_N:
        raise TooLarge(f"need 0 < k <= n <= {MAX_N}")
    count = comb(n, k)
    if count > MAX_VERTICES:
        raise TooLarge(f"C({n},{k}) = {count} exceeds {MAX_VERTICES}")
    out = []
    v = (1 << k) - 1
    limit = 1 << n
    while v < limit:
        out.append(v)
        # Gosper: next mask with the same popcount
        c = v & -v
        s = v + c
        v = (((v ^ s) >> 2) // c) | s
    assert len(out) == count
    return out


def intersect_size(a: int, b: int) -> int:
    return (a & b).bit_count()


def adjacent(spec: GraphSpec, a: int, b: int) -> bool:
    """Exact adjacency predicate for the spec's variant; irreflexive."""
    if a == b:
        return False
    t = intersect_size(a, b)
    if spec.variant == KNESER:
        return t == 0
    if spec.variant == KNESER_SQUARE:
        return t == 0 or t >= 3 * spec.k - spec.n
    return spec.k - spec.m <= t <= spec.k - 1


def distance2_related(n: int, k: int, a: int, b: int) -> bool:
    """True iff A and B share a common neighbor in K(n,k): k-r <= |A n B| <= k-1, r = n-2k."""
    if n <= 2 * k:
        raise ValueError("requires n > 2k")
    t = intersect_size(a, b)
    return k - (n - 2 * k) <= t <= k - 1


def degree_check(spec: GraphSpec, max_vertices: int = 20_000) -> int:
    """Common degree after verifying regularity by full scan."""
    count = comb(spec.n, spec.k)
    if count > max_vertices:
        raise TooLarge(f"C({spec.n},{spec.k}) = {count} exceeds {max_vertices}")
    vertices = enumerate_vertices(spec.n, spec.k)
    degree = None
    for a in vertices:
        d = sum(1 for b in vertices if b != a and adjacent(spec, a, b))
        if degree is None:
            degree = d
        elif d != degree:
            raise NotRegular(f"{spec.label()} has vertices of degree {degree} and {d}")
    return degree
