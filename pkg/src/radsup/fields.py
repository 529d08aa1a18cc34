"""Exact coefficient fields: the rationals and prime fields F_p.

Field objects mediate all coefficient arithmetic so that polynomial code
stays field-agnostic.  Rational elements are ``fractions.Fraction``; prime
field elements are plain ints reduced into ``[0, p)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

_NONZERO_SMALL_INTS = tuple(i for i in range(-10, 11) if i != 0)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RationalField:
    """The rational numbers, with exact Fraction arithmetic."""

    @property
    def tag(self) -> str:
        return "QQ"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return Fraction(1) / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return Fraction(a) / Fraction(b)

    def is_negative(self, a) -> bool:
        return a < 0

    def abs(self, a):
        return -a if a < 0 else a

    def random_nonzero(self, rng) -> Fraction:
        # uniform over the nonzero integers in [-10, 10]
        return Fraction(rng.choice(_NONZERO_SMALL_INTS))

    def random(self, rng) -> Fraction:
        return Fraction(rng.randint(-10, 10))

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        return Fraction(text)


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p, elements stored as ints in [0, p)."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def tag(self) -> str:
        return f"Fp({self.p})"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def coerce(self, value) -> int:
        if isinstance(value, Fraction):
            return self.div(value.numerator, value.denominator)
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a % self.p) * self.inv(b) % self.p

    def is_negative(self, a) -> bool:
        return False

    def abs(self, a):
        return a % self.p

    def random_nonzero(self, rng) -> int:
        return rng.randrange(1, self.p)

    def random(self, rng) -> int:
        return rng.randrange(0, self.p)

    def format(self, a) -> str:
        return str(a % self.p)

    def parse(self, text: str):
        frac = Fraction(text)
        return self.coerce(frac)


Field = RationalField | PrimeField

QQ = RationalField()
GF2 = PrimeField(2)
GF32003 = PrimeField(32003)

_FP_TAG = re.compile(r"^Fp\((\d+)\)$")


def field_from_tag(tag: str) -> Field:
    """Inverse of ``field.tag``: accepts "QQ" or "Fp(p)"."""
    tag = tag.strip()
    if tag == "QQ":
        return RationalField()
    m = _FP_TAG.match(tag)
    if m:
        return PrimeField(int(m.group(1)))
    raise ValueError(f"unknown field tag {tag!r} (expected QQ or Fp(p))")
