"""Finite field arithmetic for GF(p) and GF(2^t).

Elements are plain nonnegative integers below the field order.  For a prime
field the integer is the residue mod p.  For a binary extension field the
integer encodes the coefficient bits of the polynomial representative, little
endian (constant term = bit 0), so addition is XOR and serialization is
bit-exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeOutOfRange, NotASubfieldDegree, NotPrime
from .primes import is_prime

MAX_BINARY_DEGREE = 16


def _poly_degree(p: int) -> int:
    return p.bit_length() - 1


def _poly_mod(a: int, m: int) -> int:
    """Remainder of GF(2)[x] division of a by m (bit-encoded)."""
    dm = _poly_degree(m)
    while a.bit_length() - 1 >= dm and a:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def _poly_mul(a: int, b: int) -> int:
    """Carryless product in GF(2)[x]."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _is_irreducible(poly: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    d = _poly_degree(poly)
    if d < 1:
        return False
    for div in range(2, 1 << (d // 2 + 1)):
        if _poly_degree(div) < 1:
            continue
        if _poly_mod(poly, div) == 0:
            return False
    return True


def smallest_irreducible(t: int) -> int:
    """Lexicographically smallest monic irreducible of degree t over GF(2).

    Candidates are restricted to nonzero constant term, which excludes the
    bare polynomial x; for t >= 2 every irreducible has a nonzero constant
    term anyway, and for t = 1 this picks x + 1.
    """
    for poly in range((1 << t) | 1, 1 << (t + 1), 2):
        if _is_irreducible(poly):
            return poly
    raise AssertionError(f"no irreducible of degree {t}")  # unreachable


@dataclass(frozen=True)
class Field:
    """Descriptor of GF(p) or GF(2^t); owns element arithmetic.

    Immutable; all operations are pure and safe to share across workers.
    """

    kind: str  # "prime" | "binary"
    order: int
    p: int = 0  # modulus, kind == "prime"
    t: int = 0  # extension degree, kind == "binary"
    modulus_bits: int = 0  # irreducible reduction polynomial, kind == "binary"

    # -- arithmetic ---------------------------------------------------------

    def check(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of {self}")
        return a

    def add(self, a: int, b: int) -> int:
        if self.kind == "prime":
            return (a + b) % self.p
        return a ^ b

    def sub(self, a: int, b: int) -> int:
        if self.kind == "prime":
            return (a - b) % self.p
        return a ^ b

    def neg(self, a: int) -> int:
        if self.kind == "prime":
            return (-a) % self.p
        return a

    def mul(self, a: int, b: int) -> int:
        if self.kind == "prime":
            return (a * b) % self.p
        return _poly_mod(_poly_mul(a, b), self.modulus_bits)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        if self.kind == "prime":
            return pow(a, e, self.p)
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.pow(a, self.order - 2)

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "prime" else 2

    def elements(self) -> list[int]:
        return list(range(self.order))

    def to_json(self) -> dict:
        if self.kind == "prime":
            return {"kind": "prime", "p": self.p}
        return {"kind": "binary", "t": self.t, "modulus": self.modulus_bits}

    def __repr__(self) -> str:
        if self.kind == "prime":
            return f"GF({self.p})"
        return f"GF(2^{self.t})"


def make_prime_field(p: int) -> Field:
    if p < 2 or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return Field(kind="prime", order=p, p=p)


def make_binary_field(t: int) -> Field:
    if not 1 <= t <= MAX_BINARY_DEGREE:
        raise DegreeOutOfRange(f"degree {t} outside [1, {MAX_BINARY_DEGREE}]")
    return Field(kind="binary", order=1 << t, t=t, modulus_bits=smallest_irreducible(t))


def field_from_json(d: dict) -> Field:
    if d["kind"] == "prime":
        return make_prime_field(d["p"])
    F = make_binary_field(d["t"])
    if F.modulus_bits != d["modulus"]:
        raise ValueError(f"modulus {d['modulus']} is not the canonical one for t={d['t']}")
    return F


def subfield_elements(F: Field, t_prime: int) -> set[int]:
    """Elements of the subfield GF(2^t') inside binary F: fixed points of a -> a^(2^t').

    Closure under add and mul is verified before returning.
    """
    if F.kind != "binary":
        raise NotASubfieldDegree("subfield extraction requires a binary field")
    if t_prime < 1 or F.t % t_prime != 0:
        raise NotASubfieldDegree(f"{t_prime} does not divide {F.t}")
    q = 1 << t_prime
    sub = {a for a in range(F.order) if F.pow(a, q) == a}
    assert len(sub) == q
    for a in sub:
        for b in sub:
            assert F.add(a, b) in sub and F.mul(a, b) in sub
    return sub
