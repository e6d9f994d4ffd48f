"""Slope decomposition of the canonical class and the general-type verdict.

On the irreducible-curve part of the boundary the halved canonical class
``13/2 lambda - delta_0' - 3/2 delta_T - 2 delta_N`` is written as

    s [Koszul] + (1 - s) [Brill-Noether] + gamma lambda + E,

with ``E`` a non-negative boundary combination.  ``s`` is pushed as far as
the ``delta_N`` coefficient of ``E`` allows; ``gamma`` grows with ``s``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .divisor_algebra import LAMBDA, DivisorClass, canonical_class, delta_prime
from .grr_koszul import DELTA_N, DELTA_T, koszul_class, pullback_brill_noether
from .errors import IndexOutOfRange
from .pencil_bounds import ASSUMPTION_EQ00, check

ASSUMPTIONS = (
    "lambda is big on the moduli of S3-covers",
    "pluricanonical forms on the regular locus extend to a desingularization",
    "the Koszul locus is a proper divisor (its class is computed, not its effectivity)",
    "the syzygy bundles E_{j,b} have vanishing first cohomology where ranks are taken",
    "for i = 10 the effective part must avoid the genus-10 K3 locus",
    ASSUMPTION_EQ00,
)

NORMALIZATION_NOTE = ("the target is half of the canonical class on the irreducible-curve "
                      "boundary: 2 * (13/2, 1, 3/2, 2) = (13, 2, 3, 4)")


@dataclass(frozen=True)
class SlopeSolution:
    i: int
    s_max: Fraction
    gamma_max: Fraction
    verdict: str  # general_type | inconclusive
    effective_E: DivisorClass
    binding: str  # which constraint fixes s_max

    def to_dict(self) -> dict:
        return {"i": self.i, "genus": 2 * self.i + 1, "s_max": str(self.s_max),
                "gamma_max": str(self.gamma_max), "verdict": self.verdict,
                "binding_constraint": self.binding, "effective_E": self.effective_E.to_json()}


def target_class(i: int) -> DivisorClass:
    return DivisorClass(2 * i + 1, {LAMBDA: Fraction(13, 2), delta_prime(0): -1,
                                    DELTA_T: Fraction(-3, 2), DELTA_N: -2})


def gamma(i: int, s) -> Fraction:
    return Fraction(i - 11, 2 * (i + 1)) + Fraction(s) * Fraction(4 * i - 2, i * (i + 1))


def solve_slope(i: int) -> SlopeSolution:
    if i < 2:
        raise IndexOutOfRange(f"half-genus must be >= 2, got {i}", witness={"i": i})
    # E's delta_T coefficient: s(6i+1)/(4i) + 2(1-s) - 3/2 >= 0  <=>  s <= 2i/(2i-1)
    # E's delta_N coefficient: s(5i+2)/(3i) + 3(1-s) - 2 >= 0    <=>  s <= 3i/(4i-2)
    bound_t = Fraction(2 * i, 2 * i - 1)
    bound_n = Fraction(3 * i, 4 * i - 2)
    s = min(bound_t, bound_n, Fraction(1))
    binding = "delta_N" if s == bound_n else "delta_T" if s == bound_t else "s<=1"
    gm = gamma(i, s)
    kz = koszul_class(i).normalized
    bn = pullback_brill_noether(i)
    e = target_class(i) - kz * s - bn * (1 - s) - DivisorClass(2 * i + 1, {LAMBDA: gm})
    nonneg = all(v >= 0 for v in e.coeffs.values())
    verdict = "general_type" if gm > 0 and nonneg else "inconclusive"
    return SlopeSolution(i, s, gm, verdict, e, binding)


def verdict(g: int) -> dict:
    """General-type report for the connected S3-component in genus ``g``."""
    report = {"genus": g, "assumptions": list(ASSUMPTIONS)}
    if g % 2 == 0:
        report.update(verdict="inconclusive", reason="even genus: no Koszul divisor available")
        return report
    i = (g - 1) // 2
    if i < 2:
        report.update(verdict="inconclusive", i=i, reason="genus too small for the slope argument")
        return report
    sol = solve_slope(i)
    report.update(sol.to_dict())
    report["decomposition"] = {
        "koszul": str(sol.s_max), "brill_noether": str(1 - sol.s_max),
        "lambda": str(sol.gamma_max), "effective_E": sol.effective_E.to_json()["coeffs"],
        "target": target_class(i).to_json()["coeffs"]}
    report["normalization_note"] = NORMALIZATION_NOTE
    report["canonical_class"] = canonical_class(g).to_json()["coeffs"]
    report["pencil_bounds"] = [check(j, 13, 2, 3) for j in range(1, g // 2 + 1)]
    for row in report["pencil_bounds"]:
        row.pop("assumptions")
    if sol.verdict != "general_type":
        report["reason"] = f"gamma_max = {sol.gamma_max} is not positive"
    elif not all(row["passes"] for row in report["pencil_bounds"]):
        report["verdict"] = "inconclusive"
        report["reason"] = "a pencil bound fails"
    return report
