"""Automorphisms of elliptic tails acting on cover classes over a one-pointed
elliptic curve, and the branch data of the N-component over M_{1,1}.

The fundamental group of a once-punctured torus, after filling the puncture
with a trivial local index, is free abelian on ``a, b``.  A cover class is a
commuting pair ``(A, B)`` up to simultaneous conjugation.  An automorphism
``s`` of the curve acts by precomposition: ``(A, B) -> (phi(s(a)), phi(s(b)))``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InconsistentProfile, InvalidQuery
from .group_core import FiniteGroup, builtin

# representative pairs of the four N-classes, as element names
_S3_N_ROWS = {
    ("1", "(123)"): "(i)",
    ("(123)", "(123)"): "(ii)",
    ("(123)", "(132)"): "(iii)",
    ("(123)", "1"): "(iv)",
}


@dataclass(frozen=True)
class EllipticCoverClass:
    group: FiniteGroup
    pair: tuple  # lexicographically least member of the conjugation orbit

    @classmethod
    def of(cls, g: FiniteGroup, a: int, b: int) -> "EllipticCoverClass":
        if g.mul(a, b) != g.mul(b, a):
            raise InvalidQuery(f"{g.names[a]} and {g.names[b]} do not commute")
        return cls(g, min((g.conj(a, y), g.conj(b, y)) for y in range(g.order)))

    @property
    def label(self) -> str:
        a, b = self.pair
        return f"a->{self.group.names[a]}, b->{self.group.names[b]}"

    @property
    def image(self) -> frozenset:
        return self.group.generated(self.pair)

    @property
    def image_class(self) -> int:
        return self.group.subgroup_class_of(self.image)

    @property
    def row_label(self) -> Optional[str]:
        """Row label (i)-(iv) for the N-classes of S3, else ``None``."""
        if self.group.label != "S3":
            return None
        g = self.group
        for (a, b), row in _S3_N_ROWS.items():
            if self.pair == EllipticCoverClass.of(g, g.element(a), g.element(b)).pair:
                return row
        return None

    def to_dict(self) -> dict:
        return {"pair": [self.group.names[x] for x in self.pair], "label": self.label,
                "image": self.group.subgroup_class_names[self.image_class],
                "row": self.row_label}


@dataclass(frozen=True)
class AutAction:
    order: int

    def __post_init__(self):
        if self.order not in (4, 6):
            raise InvalidQuery(f"elliptic automorphism order must be 4 or 6, got {self.order}")

    def apply_pair(self, g: FiniteGroup, a: int, b: int) -> tuple:
        if self.order == 6:
            return b, g.mul(b, g.inv[a])  # a -> b, b -> b a^-1
        return b, g.inv[a]  # a -> b, b -> a^-1

    def apply(self, cls: EllipticCoverClass) -> EllipticCoverClass:
        return EllipticCoverClass.of(cls.group, *self.apply_pair(cls.group, *cls.pair))


@dataclass(frozen=True)
class AutOrbit:
    members: tuple  # EllipticCoverClass, in cycle order starting at the least pair

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def lifting(self) -> bool:
        """The automorphism lifts to a class exactly when it fixes it."""
        return self.size == 1


def all_classes(g: FiniteGroup) -> list:
    seen = {}
    for a in range(g.order):
        for b in g.centralizers[a]:
            c = EllipticCoverClass.of(g, a, b)
            seen[c.pair] = c
    return [seen[p] for p in sorted(seen)]


def classes_with_image(g: FiniteGroup, h: int) -> list:
    """Conjugation classes of commuting pairs generating a subgroup in class ``h``."""
    return [c for c in all_classes(g) if c.image_class == h]


def aut_orbits(classes: Sequence[EllipticCoverClass], action: AutAction) -> list:
    pending = {c.pair: c for c in classes}
    orbits = []
    for pair in sorted(pending):
        if pair not in pending:
            continue
        cycle = []
        c = pending[pair]
        while c.pair in pending:
            cycle.append(pending.pop(c.pair))
            c = action.apply(c)
        if c.pair != pair:
            raise InvalidQuery("class list is not closed under the action")
        orbits.append(AutOrbit(tuple(cycle)))
    return orbits


# branch data ----------------------------------------------------------------

@dataclass(frozen=True)
class FiberPoint:
    name: str
    ramification: int
    classes: tuple = ()  # row labels (i)-(iv) of the cover classes in this point


@dataclass(frozen=True)
class BranchDatum:
    base_point: str
    fiber: tuple  # FiberPoint
    local_picture: str = ""

    @property
    def fiber_degree(self) -> int:
        return sum(p.ramification for p in self.fiber)

    @property
    def ramification(self) -> int:
        return sum(p.ramification - 1 for p in self.fiber)

    def to_dict(self) -> dict:
        return {"base_point": self.base_point, "local_picture": self.local_picture,
                "fiber": [{"name": p.name, "ramification": p.ramification,
                           "classes": list(p.classes)} for p in self.fiber]}


def _fiber_from_orbits(base: str, orbits) -> tuple:
    # the point carrying the larger stabilizer change gets the single prime
    ordered = sorted(orbits, key=lambda o: (-o.size, o.members[0].pair))
    return tuple(FiberPoint(f"{base}" + "'" * (k + 1), o.size,
                            tuple(c.row_label for c in o.members))
                 for k, o in enumerate(ordered))


def branch_data_RN():
    """Branch data of the degree-4 map from the N-component to M_{1,1}.

    Returns ``(branch_data, degree)``.  Over the order-4 and order-6 curves
    the fibers come from the automorphism orbits on the four N-classes; over
    the nodal curve the two points are fixed inputs: one with an order-3
    stabilizer at the node (index 3) and one with trivial stabilizer.
    """
    s3 = builtin("S3")
    classes = classes_with_image(s3, s3.subgroup_class("N"))
    degree = len(classes)
    e4 = BranchDatum("E4", _fiber_from_orbits("E4", aut_orbits(classes, AutAction(4))),
                     "(1/2,1/2)")
    e6 = BranchDatum("E6", _fiber_from_orbits("E6", aut_orbits(classes, AutAction(6))),
                     "(1/3,1/3)")
    e0 = BranchDatum("E0", (FiberPoint("E0'", 3), FiberPoint("E0''", 1)), "(1,1/3)")
    return [e4, e6, e0], degree


def genus_by_riemann_hurwitz(degree: int, base_genus: int,
                             branch: Sequence[BranchDatum]) -> int:
    if degree < 1 or base_genus < 0:
        raise InconsistentProfile(f"bad degree {degree} or base genus {base_genus}")
    for b in branch:
        if b.fiber_degree != degree:
            raise InconsistentProfile(
                f"fiber over {b.base_point} has total index {b.fiber_degree}, not {degree}",
                witness={"base_point": b.base_point, "sum": b.fiber_degree})
    twice = degree * (2 * base_genus - 2) + sum(b.ramification for b in branch) + 2
    g = Fraction(twice, 2)
    if g.denominator != 1 or g < 0:
        raise InconsistentProfile(f"Riemann-Hurwitz gives genus {g}",
                                  witness={"genus": str(g)})
    return int(g)
