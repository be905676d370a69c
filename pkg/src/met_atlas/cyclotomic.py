"""Exact arithmetic in Q(zeta_m), in the power basis modulo the m-th cyclotomic polynomial."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable

# Polynomials are coefficient lists, lowest degree first.


def _trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _divmod(num: list, den: list) -> tuple[list, list]:
    num = [Fraction(c) for c in num]
    den = _trim([Fraction(c) for c in den])
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    while len(_trim(num)) >= len(den):
        shift = len(num) - len(den)
        f = num[-1] / den[-1]
        quot[shift] = f
        for i, c in enumerate(den):
            num[shift + i] -= f * c
    return _trim(quot), num


def _mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Phi_m by dividing x^m - 1 by Phi_d for every proper divisor d of m."""
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    p = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            p, rem = _divmod(p, list(cyclotomic_polynomial(d)))
            if rem:
                raise AssertionError(f"Phi_{d} does not divide x^{m} - 1")
    if any(c.denominator != 1 for c in p):
        raise AssertionError(f"Phi_{m} has non-integral coefficients")
    return tuple(int(c) for c in p)


def _coerce(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"cannot read {x!r} as a rational")


class CycloNumber:
    """An element of Q(zeta_m) with coefficients reduced modulo Phi_m.

    Two numbers are equal iff their orders and coefficient tuples agree, so the
    type is safe to hash and use as a dictionary key.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Iterable = ()):
        phi = cyclotomic_polynomial(m)
        deg = len(phi) - 1
        poly = [_coerce(c) for c in coeffs]
        if len(poly) > deg:
            _, poly = _divmod(poly, list(phi))
        poly = poly + [Fraction(0)] * (deg - len(poly))
        self.m = m
        self.coeffs = tuple(poly)

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "CycloNumber":
        k %= m
        return cls(m, [0] * k + [1])

    @classmethod
    def rational(cls, m: int, value) -> "CycloNumber":
        return cls(m, [value])

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def _other(self, other) -> "CycloNumber":
        if isinstance(other, CycloNumber):
            if other.m != self.m:
                raise ValueError(f"mixed cyclotomic orders {self.m} and {other.m}")
            return other
        return CycloNumber(self.m, [_coerce(other)])

    def __add__(self, other):
        other = self._other(other)
        return CycloNumber(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        other = self._other(other)
        return CycloNumber(self.m, _mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # extended Euclid: s * self = 1 (mod Phi_m)
        r0, r1 = [Fraction(c) for c in cyclotomic_polynomial(self.m)], _trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _divmod(r0, r1)
            r0, r1 = r1, _trim(r)
            s0, s1 = s1, _sub(s0, _mul(q, s1))
        return CycloNumber(self.m, [c / r1[0] for c in s1])

    def __truediv__(self, other):
        return self * self._other(other).inverse()

    def __rtruediv__(self, other):
        return self._other(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = CycloNumber(self.m, [1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNumber):
            return self.m == other.m and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == CycloNumber(self.m, [other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.m, self.coeffs))

    def __repr__(self) -> str:
        return f"CycloNumber({self.m}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            base = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not base:
                terms.append(str(c))
            elif c == 1:
                terms.append(base)
            elif c == -1:
                terms.append("-" + base)
            else:
                terms.append(f"{c}*{base}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def cyclo_arith(a: CycloNumber, b: CycloNumber | None, op: str) -> CycloNumber:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown operation {op!r}")
