"""Exact ground rings: the integers, the rationals, and prime fields.

Ring elements are plain Python values: ``int`` over Z, ``Fraction`` over Q,
and canonical representatives ``0..p-1`` over F_p.  A ``Ring`` instance
bundles the arithmetic so matrices and complexes never branch on the kind.
"""

from __future__ import annotations

from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Ring:
    """One of Z, Q, or F_p (p prime), with exact element arithmetic."""

    def __init__(self, kind: str, p: int | None = None):
        if kind not in ("Z", "Q", "Fp"):
            raise ValueError(f"unknown ring kind {kind!r}")
        if kind == "Fp":
            if p is None or not _is_prime(p):
                raise ValueError(f"Fp requires a prime, got {p!r}")
        self.kind = kind
        self.p = p if kind == "Fp" else None

    # -- constructors -------------------------------------------------
    def of(self, n):
        """Coerce an integer (or Fraction over Q) into the ring."""
        if self.kind == "Z":
            if isinstance(n, Fraction):
                if n.denominator != 1:
                    raise ValueError(f"{n} is not an integer")
                return int(n)
            return int(n)
        if self.kind == "Q":
            return Fraction(n)
        return int(n) % self.p

    @property
    def zero(self):
        return self.of(0)

    @property
    def one(self):
        return self.of(1)

    # -- arithmetic ---------------------------------------------------
    def add(self, a, b):
        c = a + b
        return c % self.p if self.kind == "Fp" else c

    def sub(self, a, b):
        c = a - b
        return c % self.p if self.kind == "Fp" else c

    def mul(self, a, b):
        c = a * b
        return c % self.p if self.kind == "Fp" else c

    def neg(self, a):
        return (-a) % self.p if self.kind == "Fp" else -a

    def is_zero(self, a) -> bool:
        return a == 0

    def is_unit(self, a) -> bool:
        if self.kind == "Z":
            return a in (1, -1)
        return a != 0

    def inv(self, a):
        if self.kind == "Q":
            return Fraction(1) / a
        if self.kind == "Fp":
            return pow(a, self.p - 2, self.p)
        if a in (1, -1):
            return a
        raise ZeroDivisionError(f"{a} is not a unit in Z")

    def div(self, a, b):
        """Exact division; raises if b does not divide a over Z."""
        if self.kind == "Z":
            if b == 0 or a % b != 0:
                raise ZeroDivisionError(f"{b} does not divide {a} in Z")
            return a // b
        return self.mul(a, self.inv(b))

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    # -- identification -----------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Ring) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return f"Fp({self.p})" if self.kind == "Fp" else self.kind

    def tag(self) -> str:
        """Serialization tag: "Z", "Q" or "Fp:<p>"."""
        return f"Fp:{self.p}" if self.kind == "Fp" else self.kind

    @staticmethod
    def from_tag(tag: str) -> "Ring":
        if tag == "Z":
            return ZZ
        if tag == "Q":
            return QQ
        if tag.startswith("Fp:"):
            return Ring("Fp", int(tag.split(":", 1)[1]))
        raise ValueError(f"bad ring tag {tag!r}")


ZZ = Ring("Z")
QQ = Ring("Q")


def GF(p: int) -> Ring:
    return Ring("Fp", p)
