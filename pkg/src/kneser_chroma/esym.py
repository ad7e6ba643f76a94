"""Elementary symmetric polynomials of field subsets.

e_i(Z) is the sum of all products of i distinct elements of Z, with
e_0 = 1 and e_i = 0 for i > |Z|.  The truncated vector (e_1, ..., e_r)
is the color fingerprint used throughout the coloring constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import DuplicateElement, NotDisjoint, SetTooLarge
from .gf import Field

NAIVE_MAX = 12


@dataclass(frozen=True)
class ESymVector:
    field: Field
    values: tuple[int, ...]  # (e_1(Z), ..., e_r(Z))

    @property
    def r(self) -> int:
        return len(self.values)


def esym_prefix(F: Field, Z: Sequence[int], r: int) -> ESymVector:
    """(e_1(Z), ..., e_r(Z)) by the incremental recurrence E_i += z * E_{i-1}.

    O(|Z| * r); order of Z does not affect the result.  Raises
    DuplicateElement on repeats rather than deduplicating, since a repeat
    indicates a caller bug.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if len(set(Z)) != len(Z):
        raise DuplicateElement("ground elements must be pairwise distinct")
    e = [1] + [0] * r  # e[0] = e_0 = 1_F
    for z in Z:
        for i in range(min(r, len(Z)), 0, -1):
            e[i] = F.add(e[i], F.mul(z, e[i - 1]))
    return ESymVector(field=F, values=tuple(e[1:]))


def esym_naive(F: Field, Z: Sequence[int], i: int) -> int:
    """Literal-definition oracle: sum of products over all i-subsets of Z."""
    if i < 0:
        raise ValueError("i must be >= 0")
    if len(Z) > NAIVE_MAX:
        raise SetTooLarge(f"naive evaluation capped at |Z| <= {NAIVE_MAX}")
    if len(set(Z)) != len(Z):
        raise DuplicateElement("ground elements must be pairwise distinct")
    if i == 0:
        return 1
    if i > len(Z):
        return 0
    total = 0
    for combo in combinations(Z, i):
        prod = 1
        for z in combo:
            prod = F.mul(prod, z)
        total = F.add(total, prod)
    return total


def esym_union_check(F: Field, X: Sequence[int], Y: Sequence[int], r: int) -> bool:
    """True iff e_i(X u Y) = sum_s e_s(X) e_{i-s}(Y) for every 1 <= i <= r.

    X and Y must be disjoint.  Expected always true; exercised as a
    property-test oracle.
    """
    if set(X) & set(Y):
        raise NotDisjoint("X and Y must be disjoint")
    union = list(X) + list(Y)
    lhs = esym_prefix(F, union, r).values

    def e(Z: Sequence[int], i: int) -> int:
        if i == 0:
            return 1
        if i > len(Z):
            return 0
        return esym_prefix(F, Z, i).values[i - 1]

    for i in range(1, r + 1):
        conv = 0
        for s in range(i + 1):
            conv = F.add(conv, F.mul(e(X, s), e(Y, i - s)))
        if lhs[i - 1] != conv:
            return False
    return True
