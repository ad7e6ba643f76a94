"""Ground-set constructions over finite fields and the symmetric-polynomial coloring.

A ground set X of size 2k+r sits inside a field F.  Each vertex (k-subset of
positions) is colored by the truncated vector (e_1(A), ..., e_r(A)) of the
field elements it selects.  Disjoint pairs get distinct colors in
characteristic 2 whenever the odd-index symmetric polynomials of X vanish;
close pairs (k-r <= |A n B| <= k-1) get distinct colors over any field.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb

from .errors import ArithmeticMismatch, NotAClique, SubfieldTooSmall, TooLarge
from .esym import esym_prefix
from .gf import Field, make_binary_field, make_prime_field, subfield_elements
from .kneser import (
    KNESER_SQUARE,
    MAX_VERTICES,
    GraphSpec,
    adjacent,
    enumerate_vertices,
)
from .primes import find_prime_in_interval

FULL_FIELD = "full_field"
FIELD_MINUS_ZERO = "field_minus_zero"
FIELD_MINUS_SUBFIELD = "field_minus_subfield"
FIELD_MINUS_SUBFIELD_PLUS_ZERO = "field_minus_subfield_plus_zero"
PRIME_PREFIX = "prime_prefix"
EXPLICIT = "explicit"

CONSTRUCTIONS = (
    FULL_FIELD,
    FIELD_MINUS_ZERO,
    FIELD_MINUS_SUBFIELD,
    FIELD_MINUS_SUBFIELD_PLUS_ZERO,
    PRIME_PREFIX,
)


@dataclass(frozen=True)
class GroundSet:
    """Ordered list of n distinct field elements serving as the Kneser ground set."""

    field: Field
    elements: tuple[int, ...]
    construction: str = EXPLICIT
    subfield_degree: int = 0  # t', subfield constructions only

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("ground-set elements must be pairwise distinct")
        for a in self.elements:
            self.field.check(a)

    @property
    def n(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        d = {
            "field": self.field.to_json(),
            "construction": self.construction,
            "elements": list(self.elements),
        }
        if self.subfield_degree:
            d["subfield_degree"] = self.subfield_degree
        return d


@dataclass(frozen=True)
class ColorVector:
    """Color tuple (e_1(A), ..., e_r(A)) with its canonical integer index."""

    field: Field
    entries: tuple[int, ...]

    @property
    def index(self) -> int:
        idx = 0
        for v in reversed(self.entries):
            idx = idx * self.field.order + v
        return idx

    @classmethod
    def from_index(cls, field: Field, index: int, r: int) -> "ColorVector":
        entries = []
        for _ in range(r):
            index, v = divmod(index, field.order)
            entries.append(v)
        return cls(field=field, entries=tuple(entries))


def ground_set_from_json(d: dict) -> GroundSet:
    from .gf import field_from_json

    return GroundSet(
        field=field_from_json(d["field"]),
        elements=tuple(d["elements"]),
        construction=d.get("construction", EXPLICIT),
        subfield_degree=d.get("subfield_degree", 0),
    )


def _exact_log2(n: int) -> int | None:
    return n.bit_length() - 1 if n > 0 and n & (n - 1) == 0 else None


def _check_kr(k: int, r: int) -> None:
    if not 1 <= r <= k - 1:
        raise ValueError(f"need 1 <= r <= k-1, got k={k}, r={r}")
    if not 2 <= r <= k - 2:
        # the close-pair and disjoint-pair guarantees are stated for
        # 1 <= r <= k-2 and 2 <= r <= k-1 respectively; outside the
        # intersection the verifier decides empirically
        warnings.warn(
            f"(k={k}, r={r}) is outside 2 <= r <= k-2; verifying empirically",
            stacklevel=3,
        )


def _subfield_degree_guard(r: int, t_prime: int) -> None:
    # t' >= log2(r+2), i.e. 2^t' - 2 >= r
    if (1 << t_prime) - 2 < r:
        raise SubfieldTooSmall(f"need 2^t' - 2 >= r, got t'={t_prime}, r={r}")


def build_ground_set(k: int, r: int, construction: str, t_prime: int = 0) -> GroundSet:
    """Ground set of size n = 2k+r for one of the field-based constructions.

    full_field needs n = 2^t; field_minus_zero needs n = 2^t - 1;
    field_minus_subfield(t') needs n = 2^t - 2^t'; the plus_zero variant
    needs n = 2^t - 2^t' + 1.  prime_prefix takes the residues
    {0, ..., n-1} of GF(p) with p the smallest prime in [n, 9(n+3)/8].
    """
    _check_kr(k, r)
    n = 2 * k + r
    if construction == FULL_FIELD:
        t = _exact_log2(n)
        if t is None:
            raise ArithmeticMismatch(f"2k+r = {n} is not a power of 2")
        F = make_binary_field(t)
        return GroundSet(F, tuple(range(F.order)), construction)
    if construction == FIELD_MINUS_ZERO:
        t = _exact_log2(n + 1)
        if t is None:
            raise ArithmeticMismatch(f"2k+r = {n} is not 2^t - 1")
        F = make_binary_field(t)
        return GroundSet(F, tuple(range(1, F.order)), construction)
    if construction in (FIELD_MINUS_SUBFIELD, FIELD_MINUS_SUBFIELD_PLUS_ZERO):
        target = n if construction == FIELD_MINUS_SUBFIELD else n - 1
        # target = 2^t - 2^t'; t' must divide t for the subfield to exist
        if t_prime < 1:
            raise ValueError("subfield constructions need t_prime >= 1")
        t = _exact_log2(target + (1 << t_prime))
        if t is None or t % t_prime != 0 or t <= t_prime:
            raise ArithmeticMismatch(
                f"2k+r = {n} does not match 2^t - 2^{t_prime}"
                f"{' + 1' if construction == FIELD_MINUS_SUBFIELD_PLUS_ZERO else ''}"
                f" with {t_prime} | t"
            )
        _subfield_degree_guard(r, t_prime)
        F = make_binary_field(t)
        sub = subfield_elements(F, t_prime)
        elems = [a for a in range(F.order) if a not in sub]
        if construction == FIELD_MINUS_SUBFIELD_PLUS_ZERO:
            elems = [0] + elems
        return GroundSet(F, tuple(elems), construction, subfield_degree=t_prime)
    if construction == PRIME_PREFIX:
        p = find_prime_in_interval(n, "bertrand98")
        F = make_prime_field(p)
        return GroundSet(F, tuple(range(n)), construction)
    raise ValueError(f"unknown construction {construction!r}")


def check_ground_set(X: GroundSet, r: int) -> bool:
    """True iff e_{2m+1}(X) = 0 for every m with 2m+1 <= r."""
    if r < 1:
        raise ValueError("r must be >= 1")
    values = esym_prefix(X.field, X.elements, r).values
    return all(values[i - 1] == 0 for i in range(1, r + 1, 2))


def mask_elements(X: GroundSet, mask: int) -> list[int]:
    """Field elements of X selected by the set bits of mask."""
    return [X.elements[i] for i in range(X.n) if mask >> i & 1]


def color_vertex(X: GroundSet, mask: int, r: int) -> ColorVector:
    """f(A) = (e_1(A), ..., e_r(A)) for the vertex's underlying element set."""
    vec = esym_prefix(X.field, mask_elements(X, mask), r)
    return ColorVector(field=X.field, entries=vec.values)


def color_all(X: GroundSet, k: int, r: int) -> tuple[list[tuple[int, int]], int]:
    """Full coloring table [(vertex_index, color_index)] plus distinct-color count.

    Vertex order is ascending mask; schedule-independent by construction.
    """
    count = comb(X.n, k)
    if count > MAX_VERTICES:
        raise TooLarge(f"C({X.n},{k}) = {count} exceeds {MAX_VERTICES}")
    rows = []
    seen = set()
    for idx, mask in enumerate(enumerate_vertices(X.n, k)):
        c = color_vertex(X, mask, r).index
        rows.append((idx, c))
        seen.add(c)
    return rows, len(seen)


def clique_witness(k: int, r: int) -> list[int]:
    """The C(k+2r,r) k-subsets of [2k+r] containing positions {0,...,k-r-1}.

    Pairwise K^2 adjacency is verified before returning.
    """
    if not 1 <= r <= k - 1:
        raise ValueError(f"need 1 <= r <= k-1, got k={k}, r={r}")
    size = comb(k + 2 * r, r)
    if size > 100_000:
        raise TooLarge(f"clique size {size} exceeds 100000")
    n = 2 * k + r
    base = (1 << (k - r)) - 1
    members = [base | (rest << (k - r)) for rest in enumerate_vertices(n - (k - r), r)]
    assert len(members) == size
    spec = GraphSpec(n=n, k=k, variant=KNESER_SQUARE)
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if not adjacent(spec, a, b):
                raise NotAClique(f"witness pair {a:#x}, {b:#x} not adjacent in {spec.label()}")
    return members
