"""Exact arithmetic in Q(zeta_n), zeta_n = exp(2*pi*i/n).

Numbers are stored in the power basis ``1, z, ..., z^(phi(n)-1)`` reduced
modulo the n-th cyclotomic polynomial, which makes the representation
canonical for a fixed conductor.  Mixed-conductor operations lift both
operands to the lcm.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Integer coefficients of Phi_n, lowest degree first."""
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _poly_exact_div(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        out[k] = c
        for j, d in enumerate(den):
            num[k + j] -= c * d
    assert not any(num), "non-exact cyclotomic division"
    return out


def _reduce(coeffs, n):
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    c = [Fraction(x) for x in coeffs]
    for k in range(len(c) - 1, deg - 1, -1):
        lead = c[k]
        if lead:
            for j in range(deg + 1):
                c[k - deg + j] -= lead * phi[j]
    c = c[:deg] + [Fraction(0)] * max(0, deg - len(c))
    return tuple(c)


class CyclotomicNumber:
    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        self.n = n
        self.coeffs = _reduce(coeffs, n)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CyclotomicNumber":
        k %= n
        return cls(n, [0] * k + [1])

    @classmethod
    def from_rational(cls, q, n: int = 1) -> "CyclotomicNumber":
        return cls(n, [q])

    def lift(self, m: int) -> "CyclotomicNumber":
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError(f"cannot lift conductor {self.n} to {m}")
        step = m // self.n
        out = [Fraction(0)] * (step * len(self.coeffs) + 1)
        for k, c in enumerate(self.coeffs):
            out[k * step] = c
        return CyclotomicNumber(m, out)

    def _common(self, other):
        if not isinstance(other, CyclotomicNumber):
            other = CyclotomicNumber(self.n, [other])
        m = self.n * other.n // gcd(self.n, other.n)
        return self.lift(m), other.lift(m), m

    def __add__(self, other):
        a, b, m = self._common(other)
        return CyclotomicNumber(m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.n, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b, m = self._common(other)
        out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    out[i + j] += x * y
        return CyclotomicNumber(m, out)

    __rmul__ = __mul__

    def __truediv__(self, q):
        # only rational divisors are needed downstream
        q = Fraction(q)
        return CyclotomicNumber(self.n, [x / q for x in self.coeffs])

    def __pow__(self, k: int):
        out = CyclotomicNumber(self.n, [1])
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self) -> "CyclotomicNumber":
        out = [Fraction(0)] * self.n
        for k, c in enumerate(self.coeffs):
            out[(-k) % self.n] += c
        return CyclotomicNumber(self.n, out)

    def __eq__(self, other):
        if not isinstance(other, (CyclotomicNumber, int, Fraction)):
            return NotImplemented
        a, b, _ = self._common(other)
        return a.coeffs == b.coeffs

    __hash__ = None

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __repr__(self):
        terms = [f"{c}*z{self.n}^{k}" for k, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"

    def __str__(self):
        if self.is_rational():
            return str(self.rational())
        return repr(self)
