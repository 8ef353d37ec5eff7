"""Exact arithmetic in the real field Q(sqrt2, sqrt3, sqrt5).

Elements are stored as 8 rational coordinates over the basis
``1, sqrt2, sqrt3, sqrt5, sqrt6, sqrt10, sqrt15, sqrt30``.  That is enough to
hold ``2cos(pi/m)`` for every edge label m in {2, 3, 4, 5, 6} and the
``m = inf`` convention, which is all the root arithmetic ever needs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Sequence, Union

RADICANDS = (1, 2, 3, 5, 6, 10, 15, 30)
_INDEX = {d: i for i, d in enumerate(RADICANDS)}


def _basis_product(a: int, b: int) -> tuple[int, int]:
    g = gcd(a, b)
    return _INDEX[(a // g) * (b // g)], g


# _MUL[i][j] = (k, c) with e_i * e_j = c * e_k
_MUL = [[_basis_product(a, b) for b in RADICANDS] for a in RADICANDS]

Rational = Union[int, Fraction]


class FieldElement:
    """An exact element of Q(sqrt2, sqrt3, sqrt5).

    Stored as 8 integer numerators over one positive common denominator,
    reduced so that the gcd of all of them is 1.
    """

    __slots__ = ("_n", "_d", "_hash", "_sign")

    def __init__(self, coords: Iterable[Rational] = (0,) * 8):
        c = [Fraction(x) for x in coords]
        if len(c) != 8:
            raise ValueError(f"expected 8 coordinates, got {len(c)}")
        den = 1
        for x in c:
            den = den * x.denominator // gcd(den, x.denominator)
        self._set(tuple(x.numerator * (den // x.denominator) for x in c), den)

    def _set(self, nums: tuple, den: int) -> None:
        g = gcd(den, *nums)
        if g != 1:
            nums = tuple(x // g for x in nums)
            den //= g
        self._n = nums
        self._d = den
        self._hash = None
        self._sign = None

    @classmethod
    def _raw(cls, nums: tuple, den: int = 1) -> "FieldElement":
        obj = cls.__new__(cls)
        obj._set(nums, den)
        return obj

    @classmethod
    def rational(cls, q: Rational) -> "FieldElement":
        q = Fraction(q)
        return cls._raw((q.numerator,) + (0,) * 7, q.denominator)

    @classmethod
    def sqrt(cls, d: int) -> "FieldElement":
        """The positive square root of one of the basis radicands."""
        if d not in _INDEX:
            raise ValueError(f"sqrt({d}) is not a basis element")
        c = [0] * 8
        c[_INDEX[d]] = 1
        return cls._raw(tuple(c))

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._d) for x in self._n)

    def is_zero(self) -> bool:
        return not any(self._n)

    def is_rational(self) -> bool:
        return not any(self._n[1:])

    # arithmetic

    @staticmethod
    def _coerce(other) -> "FieldElement":
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement.rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._d, other._d
        if a == b:
            return FieldElement._raw(tuple(x + y for x, y in zip(self._n, other._n)), a)
        return FieldElement._raw(tuple(x * b + y * a for x, y in zip(self._n, other._n)), a * b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._d, other._d
        if a == b:
            return FieldElement._raw(tuple(x - y for x, y in zip(self._n, other._n)), a)
        return FieldElement._raw(tuple(x * b - y * a for x, y in zip(self._n, other._n)), a * b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        obj = FieldElement.__new__(FieldElement)
        obj._n = tuple(-x for x in self._n)
        obj._d = self._d
        obj._hash = None
        obj._sign = None
        return obj

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return FieldElement._raw(tuple(x * q.numerator for x in self._n), self._d * q.denominator)
        if not isinstance(other, FieldElement):
            return NotImplemented
        out = [0] * 8
        a, b = self._n, other._n
        for i in range(8):
            x = a[i]
            if not x:
                continue
            row = _MUL[i]
            for j in range(8):
                y = b[j]
                if y:
                    k, g = row[j]
                    out[k] += g * x * y
        return FieldElement._raw(tuple(out), self._d * other._d)

    __rmul__ = __mul__

    def conjugate(self, p: int) -> "FieldElement":
        """Apply the Galois automorphism sending sqrt(p) to -sqrt(p)."""
        return FieldElement._raw(
            tuple(-x if d % p == 0 else x for d, x in zip(RADICANDS, self._n)), self._d
        )

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, sqrt3, sqrt5)")
        x = self
        num = ONE
        for p in (2, 3, 5):
            c = x.conjugate(p)
            num = num * c
            x = x * c
        # x is now the (rational) field norm
        assert x.is_rational()
        return num * Fraction(x._d, x._n[0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    # comparison

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._n[0], self._d) == other
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self._d == other._d and self._n == other._n

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._d))
        return self._hash

    def sign(self) -> int:
        if self._sign is None:
            self._sign = _sign(self._n)
        return self._sign

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return sum(x * d ** 0.5 for d, x in zip(RADICANDS, self._n)) / self._d

    def __repr__(self):
        terms = []
        for d, x in zip(RADICANDS, self.coords):
            if x:
                terms.append(str(x) if d == 1 else f"{x}*sqrt{d}")
        return "FieldElement(" + (" + ".join(terms) or "0") + ")"


ZERO = FieldElement()
ONE = FieldElement.rational(1)


@lru_cache(maxsize=None)
def _sqrt_bounds(d: int, bits: int) -> tuple[int, int]:
    """Integers lo, hi with lo <= sqrt(d) * 2**bits <= hi."""
    n = d << (2 * bits)
    lo = isqrt(n)
    return lo, (lo if lo * lo == n else lo + 1)


def _sign(c: Sequence[int]) -> int:
    """Sign of sum c_i * sqrt(d_i) for integers c_i."""
    if not any(c[1:]):
        return (c[0] > 0) - (c[0] < 0)
    # Nonzero: refine an enclosing interval until it excludes zero.
    bits = 32
    while True:
        lo = hi = 0
        for d, x in zip(RADICANDS, c):
            if not x:
                continue
            if d == 1:
                lo += x << bits
                hi += x << bits
                continue
            a, b = _sqrt_bounds(d, bits)
            if x > 0:
                lo += x * a
                hi += x * b
            else:
                lo += x * b
                hi += x * a
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def field_sign(a: FieldElement) -> int:
    return a.sign()


SQRT2 = FieldElement.sqrt(2)
SQRT3 = FieldElement.sqrt(3)
SQRT5 = FieldElement.sqrt(5)


def two_cos_pi_over(m) -> FieldElement:
    """2cos(pi/m) for m in {1, 2, 3, 4, 5, 6}; the m = inf convention gives 2."""
    if m == float("inf"):
        return FieldElement.rational(2)
    table = {
        1: FieldElement.rational(-2),
        2: ZERO,
        3: ONE,
        4: SQRT2,
        5: (ONE + SQRT5) / 2,
        6: SQRT3,
    }
    try:
        return table[m]
    except KeyError:
        raise ValueError(f"edge label {m} not supported by the exact engine") from None
