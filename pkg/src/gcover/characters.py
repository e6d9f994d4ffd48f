"""Shipped character tables, eigenvalue multiplicities and age arithmetic.

Character tables are available for cyclic groups and for groups isomorphic
to S3 (which covers every built-in group and all of their subgroups).  The
privileged root is ``xi_r = exp(2*pi*i/r)``; ages depend on that choice.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .cyclotomic import CyclotomicNumber
from .errors import NonIntegralMultiplicity, UnsupportedGroup
from .group_core import FiniteGroup


@dataclass(frozen=True, eq=False)
class Representation:
    group: FiniteGroup
    dim: int
    character: tuple  # one CyclotomicNumber per element conjugacy class
    name: str

    def value(self, x: int) -> CyclotomicNumber:
        return self.character[self.group.class_of[x]]

    def __add__(self, other: "Representation") -> "Representation":
        return Representation(self.group, self.dim + other.dim,
                              tuple(a + b for a, b in zip(self.character, other.character)),
                              f"{self.name}+{other.name}")

    def scaled(self, k: int) -> "Representation":
        return Representation(self.group, self.dim * k,
                              tuple(a * k for a in self.character), f"{k}{self.name}")


@dataclass(frozen=True)
class EigenMultiplicities:
    r: int
    w: tuple

    @property
    def dim(self) -> int:
        return sum(self.w)

    def inverse(self) -> "EigenMultiplicities":
        """Multiplicities of the inverse element."""
        return EigenMultiplicities(self.r, tuple(self.w[(-k) % self.r] for k in range(self.r)))


@dataclass(frozen=True)
class JuniorVerdict:
    junior: bool
    witness: Optional[int]
    witness_age: Optional[Fraction]


def _is_s3_like(g: FiniteGroup) -> bool:
    return g.order == 6 and not g.is_abelian


def _cyclic_generator(g: FiniteGroup) -> Optional[int]:
    for x in range(g.order):
        if g.element_orders[x] == g.order:
            return x
    return None


def irreducibles(g: FiniteGroup) -> list:
    """Complete irreducible character table for cyclic groups and S3."""
    n = g.exponent
    gen = _cyclic_generator(g)
    if gen is not None:
        log = {}
        x = 0
        for k in range(g.order):
            log[x] = k
            x = g.mul(x, gen)
        reps = []
        for j in range(g.order):
            chars = tuple(CyclotomicNumber.zeta(n, j * log[r]) for r in g.class_reps)
            reps.append(Representation(g, 1, chars, "I" if j == 0 else f"chi{j}"))
        return reps
    if _is_s3_like(g):
        by_order = {1: (1, 1, 2), 2: (1, -1, 0), 3: (1, 1, -1)}
        out = []
        for idx, name in enumerate(("I", "eps", "R")):
            chars = tuple(CyclotomicNumber.from_rational(by_order[g.element_orders[r]][idx], n)
                          for r in g.class_reps)
            out.append(Representation(g, chars[0].rational().numerator, chars, name))
        return out
    raise UnsupportedGroup(f"no character table shipped for {g!r}")


def regular_representation(g: FiniteGroup) -> Representation:
    chars = tuple(CyclotomicNumber.from_rational(g.order if r == 0 else 0, g.exponent)
                  for r in g.class_reps)
    return Representation(g, g.order, chars, "regular")


def representation(g: FiniteGroup, name: str) -> Representation:
    if name == "regular":
        return regular_representation(g)
    aliases = {"trivial": "I", "1": "I", "sign": "eps", "epsilon": "eps", "rho": "R"}
    name = aliases.get(name, name)
    for rep in irreducibles(g):
        if rep.name == name:
            return rep
    raise KeyError(f"unknown representation {name!r} of {g!r}")


def inner_product(a: Representation, b: Representation) -> Fraction:
    g = a.group
    total = CyclotomicNumber.from_rational(0)
    for c, cl in enumerate(g.classes):
        total = total + a.character[c] * b.character[c].conjugate() * len(cl)
    return (total / g.order).rational()


def eigen_multiplicities(rep: Representation, h: int) -> EigenMultiplicities:
    """Multiplicity of each eigenvalue ``xi_r^k`` of ``rep(h)``, ``r = order(h)``."""
    g = rep.group
    r = g.element_orders[h]
    m = rep.character[0].n
    m = m * r // gcd(m, r)
    xi_step = m // r
    w = []
    for k in range(r):
        total = CyclotomicNumber.from_rational(0, m)
        x = 0
        for j in range(r):
            total = total + CyclotomicNumber.zeta(m, -k * j * xi_step) * rep.value(x)
            x = g.mul(x, h)
        total = total / r
        if not total.is_rational() or total.rational().denominator != 1 or total.rational() < 0:
            raise NonIntegralMultiplicity(
                f"multiplicity of xi_{r}^{k} for {rep.name} at {g.names[h]} is {total}")
        w.append(int(total.rational()))
    return EigenMultiplicities(r, tuple(w))


def age(mult: EigenMultiplicities) -> Fraction:
    return sum((Fraction(k * wk, mult.r) for k, wk in enumerate(mult.w)), Fraction(0))


def is_quasireflection(mult: EigenMultiplicities) -> bool:
    """Exactly one non-identity eigenvalue, with multiplicity one."""
    return sum(mult.w[1:]) == 1


def junior_check(elements: Sequence[EigenMultiplicities]) -> JuniorVerdict:
    for idx, mult in enumerate(elements):
        if any(mult.w[1:]):
            a = age(mult)
            if a < 1:
                return JuniorVerdict(True, idx, a)
    return JuniorVerdict(False, None, None)
