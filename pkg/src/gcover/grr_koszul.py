"""Degree-one Grothendieck-Riemann-Roch for pushforwards of twisted bundles,
ranks of the syzygy bundles ``E_{j,b}`` and the Koszul divisor class.

Node convention: a node whose local index ``h`` has order ``r`` contributes
``(r/2) (S_h + S_{h^-1})`` to the class of its boundary stratum, where
``S_h = sum_k w_h(k) B_2(k/r) / 2`` and ``w_h`` are the eigenvalue
multiplicities of ``rep(h)``.  With this convention the trivial
representation of any group yields ``lambda = (kappa1 + pi^* delta_0) / 12``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Optional

from .characters import Representation, eigen_multiplicities
from .divisor_algebra import (DELTA_0_C2, DELTA_0_C3, KAPPA1, LAMBDA, DivisorClass,
                              delta_0_node, delta_prime, kappa1_substitution)
from .errors import ClosedFormMismatch, IndexOutOfRange, UnsupportedDegree

# the two node-type aggregates as the Koszul formulas name them
DELTA_T = DELTA_0_C2
DELTA_N = DELTA_0_C3


# Bernoulli polynomials -------------------------------------------------------

@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """``B_n = B_n(0)``, so ``B_1 = -1/2``."""
    if n == 0:
        return Fraction(1)
    return -sum((comb(n + 1, k) * bernoulli_number(k) for k in range(n)), Fraction(0)) / (n + 1)


@dataclass(frozen=True)
class BernoulliPoly:
    d: int
    coeffs: tuple  # lowest degree first

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        out = ""
        for k in range(self.d, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = abs(c)
            body = f"{mag}*{mono}" if mono and mag != 1 else (mono or str(mag))
            sign = "-" if c < 0 else "+"
            out = (f"-{body}" if c < 0 else body) if not out else f"{out} {sign} {body}"
        return out or "0"


def bernoulli_poly(d: int) -> BernoulliPoly:
    if d < 0:
        raise IndexOutOfRange(f"degree must be >= 0, got {d}")
    # B_d(x) = sum_k C(d, k) B_k x^(d-k)
    coeffs = [Fraction(0)] * (d + 1)
    for k in range(d + 1):
        coeffs[d - k] = comb(d, k) * bernoulli_number(k)
    return BernoulliPoly(d, tuple(coeffs))


B2 = bernoulli_poly(2)


# GRR in degree one -----------------------------------------------------------

def _node_sum(rep: Representation, h: int) -> Fraction:
    m = eigen_multiplicities(rep, h)
    return sum((wk * B2(Fraction(k, m.r)) for k, wk in enumerate(m.w)), Fraction(0)) / 2


def _node_label(group, invsym_id: int) -> str:
    c = group.invsym_classes[invsym_id][0]
    if c == 0:
        return delta_prime(0)
    return delta_0_node(group.class_names[c])


def ch1_pushforward(genus: int, rep: Representation, group=None, twist: int = 0,
                    degree: int = 1) -> DivisorClass:
    """First Chern character of the pushforward of ``omega^twist`` tensored with ``rep``.

    The result is expressed on ``kappa1`` and the irreducible-curve
    boundary strata (one per inverse-symmetric node class); separating
    nodes are outside the scope of this function.
    """
    if degree != 1:
        raise UnsupportedDegree(f"only degree 1 is implemented, got {degree}")
    group = group or rep.group
    coeffs = {KAPPA1: rep.dim * B2(twist) / 2}
    for k, members in enumerate(group.invsym_classes):
        h = group.class_reps[members[0]]
        r = group.element_orders[h]
        s = _node_sum(rep, h) + _node_sum(rep, group.inv[h])
        label = _node_label(group, k)
        coeffs[label] = coeffs.get(label, Fraction(0)) + Fraction(r, 2) * s
    return DivisorClass(genus, coeffs)


# syzygy bundles --------------------------------------------------------------

def c1_E0b(i: int, b: int) -> DivisorClass:
    """``c_1(E_{0,b}) = 2 lambda + 2 C(b,2) kappa1 - 1/4 delta_T - 2/3 delta_N``."""
    if b < 1:
        raise IndexOutOfRange(f"twist must be >= 1, got {b}", witness={"b": b})
    return DivisorClass(2 * i + 1, {LAMBDA: 2, KAPPA1: 2 * comb(b, 2),
                                    DELTA_T: Fraction(-1, 4), DELTA_N: Fraction(-2, 3)})


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def rank_E(i: int, j: int, b: int) -> int:
    """Rank of ``E_{j,b}`` on genus ``2i+1``, assuming the first cohomology vanishes."""
    g = 2 * i + 1
    if not 0 <= j <= g - 1:
        raise IndexOutOfRange(f"exterior power {j} outside 0..{g - 1}", witness={"j": j})
    return (2 * _binom(g - 2, j - 1) * (2 - 2 * g)
            + _binom(g - 1, j) * (2 * b * (2 * g - 2) + 2 * (1 - g)))


@dataclass(frozen=True)
class KoszulClass:
    i: int
    prefactor: int  # rank of E_{i-1,2}
    unit_class: DivisorClass  # the class divided by the prefactor
    normalized: DivisorClass  # unit_class / (2 C(2i-2, i-1))

    @property
    def full_class(self) -> DivisorClass:
        return self.unit_class * self.prefactor


def koszul_closed_form(i: int) -> DivisorClass:
    g = 2 * i + 1
    return DivisorClass(g, {LAMBDA: Fraction(2 * (3 * i + 1), i), delta_prime(0): -1,
                            DELTA_T: -Fraction(6 * i + 1, 4 * i),
                            DELTA_N: -Fraction(5 * i + 2, 3 * i)})


def koszul_class(i: int) -> KoszulClass:
    if i < 2:
        raise IndexOutOfRange(f"half-genus must be >= 2, got {i}", witness={"i": i})
    g = 2 * i + 1
    total = DivisorClass(g)
    for b in range(i + 1):
        term = c1_E0b(i, b + 1) * comb(g, i - b) \
            + DivisorClass(g, {LAMBDA: rank_E(i, 0, b + 1) * _binom(g - 1, i - b - 1)})
        total = total + term * (-1) ** (b + 1)
    total = kappa1_substitution(total)
    scale = 2 * comb(2 * i - 2, i - 1)
    normalized = total / scale
    closed = koszul_closed_form(i)
    if normalized != closed:
        raise ClosedFormMismatch(f"Koszul class disagrees with the closed form at i={i}",
                                 witness={"computed": normalized.to_json(),
                                          "closed": closed.to_json()})
    return KoszulClass(i, rank_E(i, i - 1, 2), total, normalized)


def pullback_brill_noether(i: int, genus: Optional[int] = None) -> DivisorClass:
    """Pullback of the Brill-Noether divisor of curves with a ``g^1_{i+1}``, unit scalar."""
    if i < 1:
        raise IndexOutOfRange(f"half-genus must be >= 1, got {i}", witness={"i": i})
    g = 2 * i + 1 if genus is None else genus
    return DivisorClass(g, {LAMBDA: Fraction(6 * (i + 2), i + 1), delta_prime(0): -1,
                            DELTA_T: -2, DELTA_N: -3})
