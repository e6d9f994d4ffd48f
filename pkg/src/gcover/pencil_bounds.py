"""Test pencils over the boundary and the effectivity bounds they force.

Three pencils are modeled: ``B_i`` on the moduli of curves (an elliptic
tail moving in a pencil on a genus-``i`` side), its preimage ``A_i_TN``
in the boundary piece with a T-cover on the genus-``i`` side and an N-cover
on the other, and its preimage ``A_i_c3`` in the piece with 3-cycle
stabilizer at the node.  The degree ``d`` of ``A_i_c3`` over ``B_i`` is
never needed, so its numbers are stored per unit ``d``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .divisor_algebra import (DELTA_0_C2, DELTA_0_C3, LAMBDA, DivisorClass, delta_base,
                              delta_i_c3, delta_prime)
from .errors import IndexOutOfRange, InvalidQuery

PENCILS = ("B_i", "A_i_TN", "A_i_c3")

# A.(delta_0_c2 + delta_0_c3) >= A.delta_0' on the c3 pencil.  Taken as given:
# its proof is a degeneration count whose multiplicities are not quantified.
ASSUMPTION_EQ00 = ("A_i_c3 . (delta_0_c2 + delta_0_c3) >= A_i_c3 . delta_prime_0, "
                   "accepted without independent derivation")

# the genus-10 pencils are not known to fill their divisor (K3 locus)
EXCEPTIONAL_I = 10


@dataclass(frozen=True)
class PencilIntersection:
    pencil: str
    i: int
    numbers: dict  # label -> Fraction
    totals: dict = field(default_factory=dict)  # "label+label+..." -> Fraction
    per_unit_d: bool = False

    @property
    def exceptional(self) -> bool:
        return self.i == EXCEPTIONAL_I

    def __getitem__(self, label: str) -> Fraction:
        return self.numbers.get(label, Fraction(0))

    def intersect(self, c: DivisorClass) -> Fraction:
        """Intersection with a class supported on the labels this pencil knows."""
        if self.totals:
            raise InvalidQuery(f"{self.pencil} only knows a total over the delta_0 pieces")
        return sum((self[k] * v for k, v in c.coeffs.items()), Fraction(0))

    def to_dict(self) -> dict:
        out = {"pencil": self.pencil, "i": self.i, "per_unit_d": self.per_unit_d,
               "exceptional_i10": self.exceptional,
               "numbers": {k: str(v) for k, v in self.numbers.items()}}
        if self.totals:
            out["totals"] = {k: str(v) for k, v in self.totals.items()}
        return out


def pencil_numbers(pencil: str, i: int) -> PencilIntersection:
    if i < 1:
        raise IndexOutOfRange(f"pencil index must be >= 1, got {i}", witness={"i": i})
    b0 = 6 * i + 18
    if pencil == "B_i":
        nums = {LAMBDA: i + 1, delta_base(0): b0, delta_base(i): -1}
        return PencilIntersection(pencil, i, _frac(nums))
    if pencil == "A_i_TN":
        covers = 2 ** (2 * i) - 1  # non-trivial mu2-covers of the genus-i side
        nums = {LAMBDA: covers * (i + 1),
                delta_prime(0): (2 ** (2 * i - 1) + 1) * b0,
                DELTA_0_C2: (2 ** (2 * i - 1) - 2) * b0,
                delta_prime(i): -covers}
        return PencilIntersection(pencil, i, _frac(nums))
    if pencil == "A_i_c3":
        nums = {LAMBDA: i + 1, delta_i_c3(i): -1}
        totals = {f"{delta_prime(0)}+{DELTA_0_C2}+{DELTA_0_C3}": Fraction(b0)}
        return PencilIntersection(pencil, i, _frac(nums), totals, per_unit_d=True)
    raise InvalidQuery(f"unknown pencil {pencil!r}; choose from {PENCILS}")


def _frac(d: dict) -> dict:
    return {k: Fraction(v) for k, v in d.items()}


def min_b_prime(i: int, a, b0p, b0c2) -> Fraction:
    """Lower bound on ``b_i'`` from ``A_i_TN . E >= 0``."""
    if i < 1:
        raise IndexOutOfRange(f"i must be >= 1, got {i}", witness={"i": i})
    a, b0p, b0c2 = Fraction(a), Fraction(b0p), Fraction(b0c2)
    half = 2 ** (2 * i - 1)
    return ((half + 1) * b0p + (half - 2) * b0c2) * (6 * i + 18) / (2 ** (2 * i) - 1) \
        - (i + 1) * a


def min_b_c3(i: int, a) -> Fraction:
    """Lower bound on ``b_{i,c3}`` per unit ``d`` from ``A_i_c3 . E >= 0``.

    Uses ``b_0' >= 2, b_{0,c2} >= 3, b_{0,c3} >= 4`` together with
    :data:`ASSUMPTION_EQ00`, which give ``2x + 3y + 4z >= 5/2 (x + y + z)``.
    """
    if i < 1:
        raise IndexOutOfRange(f"i must be >= 1, got {i}", witness={"i": i})
    return Fraction(5, 2) * (6 * i + 18) - (i + 1) * Fraction(a)


def check(i: int, a, b0p, b0c2) -> dict:
    bp = min_b_prime(i, a, b0p, b0c2)
    bc = min_b_c3(i, a)
    return {"i": i, "bound_b_prime": str(bp), "bound_b_c3": str(bc),
            "passes": bp >= 3 and bc > 7, "exceptional_i10": i == EXCEPTIONAL_I,
            "assumptions": [ASSUMPTION_EQ00]}
