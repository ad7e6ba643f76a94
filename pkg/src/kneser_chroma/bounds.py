"""Closed-form chromatic bounds for K^2(2k+r,k), evaluated as exact rationals.

These are report-only calculators: every published bound that applies to a
given (k, r) is evaluated exactly (Fraction arithmetic, no floats) and the
best applicable upper bound is floored.  The injective bound is tracked
separately since it bounds the injective chromatic number, not chi(K^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

MAX_FIELD_DEGREE = 16


def _exact_log2(n: int) -> int | None:
    return n.bit_length() - 1 if n > 0 and n & (n - 1) == 0 else None


def _base(k: int, r: int) -> Fraction:
    # 9k/4 + 9(r+3)/8, the prime-interval endpoint for n = 2k+r
    return Fraction(9, 4) * k + Fraction(9 * (r + 3), 8)


@dataclass(frozen=True)
class BoundsReport:
    k: int
    r: int
    clique_lower: int
    trivial_upper: int
    thm1_upper: Fraction
    injective_upper: Fraction
    thm2a_upper: int | None
    thm2b_upper: int | None
    cor3_uppers: tuple[tuple[int, int, str, int], ...]  # (t, t', form, bound)
    r1_bounds: dict = field(default_factory=dict)
    best_upper: int = 0

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "r": self.r,
            "clique_lower": self.clique_lower,
            "trivial_upper": self.trivial_upper,
            "thm1_upper": format_bound(self.thm1_upper),
            "injective_upper": format_bound(self.injective_upper),
            "thm2a_upper": self.thm2a_upper,
            "thm2b_upper": self.thm2b_upper,
            "cor3_uppers": [
                {"t": t, "t_prime": tp, "form": form, "bound": b}
                for t, tp, form, b in self.cor3_uppers
            ],
            "r1_bounds": {name: format_bound(v) for name, v in self.r1_bounds.items()},
            "best_upper": self.best_upper,
        }


def format_bound(v) -> str | int:
    """Integers as-is; non-integer rationals as 'p/q (≈ decimal to 5 places)'."""
    f = Fraction(v)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator} (≈ {float(f):.5f})"


def cor3_decompositions(k: int, r: int) -> list[tuple[int, int, str]]:
    """All (t, t', form) with 2k+r = 2^t - 2^t' (minus) or 2^t - 2^t' + 1 (plus),
    t' | t, and 2^t' - 2 >= r, scanning t <= 16."""
    n = 2 * k + r
    out = []
    min_tp = max(1, math.ceil(math.log2(r + 2)))
    for t in range(2, MAX_FIELD_DEGREE + 1):
        for t_prime in range(min_tp, t):
            if t % t_prime != 0:
                continue
            gap = (1 << t) - (1 << t_prime)
            if gap == n:
                out.append((t, t_prime, "minus"))
            elif gap + 1 == n:
                out.append((t, t_prime, "plus"))
    return out


def _r1_bounds(k: int) -> dict[str, Fraction]:
    """Published chi(K^2(2k+1,k)) bounds of the form alpha*k + beta (r = 1 only)."""
    out: dict[str, Fraction] = {}
    if k >= 2:
        out["r1_4k_plus_2"] = Fraction(4 * k + 2)
        out["r1_8k3_plus_203"] = Fraction(8, 3) * k + Fraction(20, 3)
    if k >= 3:
        out["r1_3k_plus_2"] = Fraction(3 * k + 2)
    if k >= 7:
        out["r1_32k15_plus_32"] = Fraction(32, 15) * k + 32
    # family parameterized by n >= 2 with 2^n - 1 <= 2k+1; best n reported
    best = None
    best_n = None
    for n in range(2, (2 * k + 2).bit_length() + 1):
        if (1 << n) - 1 > 2 * k + 1:
            break
        q = (1 << n) - 1
        val = Fraction(1 << (n + 1), q) * k + Fraction((1 << n) * ((1 << (n + 1)) - 3), q)
        if best is None or val < best:
            best, best_n = val, n
    if best is not None:
        out[f"r1_family_n{best_n}"] = best
    return out


def bounds_report(k: int, r: int) -> BoundsReport:
    if k < 2 or not 1 <= r <= k - 1:
        raise ValueError(f"need k >= 2 and 1 <= r <= k-1, got k={k}, r={r}")
    n = 2 * k + r
    clique_lower = comb(k + 2 * r, r)
    trivial_upper = comb(k + r, r) ** 2
    injective_upper = _base(k, r) ** r
    thm1_upper = 2 * injective_upper

    thm2a = n**r if _exact_log2(n) is not None else None
    thm2b = (n + 1) ** r if _exact_log2(n + 1) is not None else None

    cor3 = tuple(
        (t, tp, form, (n + (1 << tp)) ** r) for t, tp, form in cor3_decompositions(k, r)
    )
    r1 = _r1_bounds(k) if r == 1 else {}

    uppers: list[Fraction] = [Fraction(trivial_upper), thm1_upper]
    if thm2a is not None:
        uppers.append(Fraction(thm2a))
    if thm2b is not None:
        uppers.append(Fraction(thm2b))
    uppers.extend(Fraction(b) for _, _, _, b in cor3)
    uppers.extend(r1.values())
    best_upper = math.floor(min(uppers))

    report = BoundsReport(
        k=k,
        r=r,
        clique_lower=clique_lower,
        trivial_upper=trivial_upper,
        thm1_upper=thm1_upper,
        injective_upper=injective_upper,
        thm2a_upper=thm2a,
        thm2b_upper=thm2b,
        cor3_uppers=cor3,
        r1_bounds=r1,
        best_upper=best_upper,
    )
    assert report.clique_lower <= report.best_upper, "bound ordering sanity failed"
    return report
