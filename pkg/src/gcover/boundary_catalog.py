"""Boundary divisors of the moduli of G-covers, with constructive verdicts.

Type-i label ``(i, h, H1, H2)``: a node splitting the curve into genus ``i``
and ``g - i``; the genus-``i`` side carries an H1-cover with local index in
``[h]`` at the node, the other side an H2-cover with index in ``[h^-1]``.

Type-0 label ``(h, H1, H2)`` with ``H2 <= H1``: the normalization (genus
``g - 1``, two marks) carries an H2-cover with indices ``w`` and ``v`` and
the whole curve an H1-cover.  A monodromy tuple is

    (a_1, b_1, ..., a_{g-1}, b_{g-1}, w, v ; x),   v = x w^-1 x^-1,

with ``[a_1, b_1] ... w v = 1``; the image of the normalization is
``<a, b, w, v>`` and that of the whole curve adds the loop image ``x``.

Existence is decided by exact counts at the requested genus (lattice
Moebius inversion with a convolution inner count); a witness tuple is then
searched at the smallest genus where one exists and padded with identity
pairs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .config import Config
from .divisor_algebra import fine
from .errors import InvalidQuery, SearchTooLarge
from .group_core import FiniteGroup
from .monodromy import exact_image_counts, find_witness, relation_product


@dataclass
class Verdict:
    status: str  # nonempty | empty | undecided
    method: str
    witness: Optional[dict] = None
    certificate: Optional[dict] = None
    commutator_condition: Optional[bool] = None

    @property
    def diagnostic_disagrees(self) -> bool:
        if self.commutator_condition is None:
            return False
        return self.commutator_condition != (self.status == "nonempty")

    def to_dict(self) -> dict:
        out = {"status": self.status, "method": self.method}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.commutator_condition is not None:
            out["commutator_condition"] = self.commutator_condition
            out["diagnostic_disagrees"] = self.diagnostic_disagrees
        return out


@dataclass
class BoundaryLabel:
    group: FiniteGroup
    genus: int
    kind: str  # type_0 | type_i
    i: int
    h1: int
    h2: int
    node_type: int  # InvSymClassId for type_0, ConjClassId for type_i
    verdict: Optional[Verdict] = field(default=None, compare=False)

    @property
    def node_class(self) -> int:
        """A conjugacy class carrying the node type."""
        if self.kind == "type_0":
            return self.group.invsym_classes[self.node_type][0]
        return self.node_type

    @property
    def node_name(self) -> str:
        return self.group.class_names[self.node_class]

    @property
    def node_order(self) -> int:
        g = self.group
        return g.element_orders[g.class_reps[self.node_class]]

    @property
    def name(self) -> str:
        g = self.group
        node = "" if self.node_class == 0 else f",{self.node_name}"
        return (f"Delta_{{{self.i}{node}}}^{{{g.subgroup_class_names[self.h1]},"
                f"{g.subgroup_class_names[self.h2]}}}")

    @property
    def fine_key(self) -> str:
        g = self.group
        return fine(f"{self.i}:{self.node_name}:{g.subgroup_class_names[self.h1]}:"
                    f"{g.subgroup_class_names[self.h2]}")

    @property
    def nonempty(self) -> Optional[bool]:
        if self.verdict is None or self.verdict.status == "undecided":
            return None
        return self.verdict.status == "nonempty"

    def to_dict(self) -> dict:
        g = self.group
        out = {"name": self.name, "kind": self.kind, "i": self.i,
               "h1": g.subgroup_class_names[self.h1], "h2": g.subgroup_class_names[self.h2],
               "node_type": self.node_name, "fine_key": self.fine_key}
        if self.verdict is not None:
            out["verdict"] = self.verdict.to_dict()
        return out


# exact existence -------------------------------------------------------------

@lru_cache(maxsize=None)
def _exact(g: FiniteGroup, genus: int, marks: tuple, k: frozenset) -> int:
    return exact_image_counts(g, genus, [frozenset(m) for m in marks], targets=[k]).get(k, 0)


def _names(g: FiniteGroup, tup) -> list:
    return [g.names[x] for x in tup]


def _type0_options(g: FiniteGroup, genus: int, node_class: int, h1: int, h2: int):
    """Yield ``(k2, w, v, x)`` realizable on a genus-``genus`` curve."""
    for k2 in g.subgroup_classes[h2][:1]:  # conjugation-invariant, one member suffices
        for w in sorted(g.classes[node_class] & k2):
            winv = g.inv[w]
            for v in sorted(k2 & g.classes[g.class_of[winv]]):
                gluers = [x for x in range(g.order) if g.conj(winv, x) == v]
                good = [x for x in gluers
                        if g.subgroup_class_of(k2 | {x}, generate=True) == h1]
                if good and _exact(g, genus - 1, (frozenset([w]), frozenset([v])), k2) > 0:
                    yield k2, w, v, good[0]


def _decide_type0(g, genus, node_class, h1, h2, config) -> Verdict:
    for k2, w, v, x in _type0_options(g, genus, node_class, h1, h2):
        try:
            wit = find_witness(g, genus - 1, [{w}, {v}], k2, config)
        except SearchTooLarge as exc:
            return Verdict("undecided", "exact_count",
                           certificate={"exact_count_positive": True,
                                        "cutoff": exc.cutoff, "required": exc.required})
        return Verdict("nonempty", "exact_count", witness={
            "normalization_genus": genus - 1, "found_at_genus": wit.found_at_genus,
            "tuple": _names(g, wit.tuple), "gluing": g.names[x]})
    return Verdict("empty", "exact_count", certificate={
        "reason": "no (w, v, x) with positive exact count",
        "normalization_genus": genus - 1})


def _side_options(g: FiniteGroup, genus: int, mark_class: int, h: int):
    """``(k, m)``: subgroup in class ``h`` and mark element realizable on one side."""
    out = []
    for k in g.subgroup_classes[h]:
        for m in sorted(g.classes[mark_class] & k):
            if _exact(g, genus, (frozenset([m]),), k) > 0:
                out.append((k, m))
    return out


def _type_i_realizations(g, genus, i, node_class, h1, h2):
    """Yield ``(k1, m1, k2, m2, y, total_class)`` over all gluings."""
    inv_class = g.class_of[g.inv[g.class_reps[node_class]]]
    side1 = [(k, m) for k, m in _side_options(g, i, node_class, h1)
             if k == g.subgroup_classes[h1][0]]
    if not side1:
        return
    side2 = _side_options(g, genus - i, inv_class, h2)
    for k1, m1 in side1:
        target = g.inv[m1]
        for k2, m2 in side2:
            for y in range(g.order):
                if g.conj(m2, y) == target:
                    moved = frozenset(g.conj(z, y) for z in k2)
                    yield k1, m1, k2, m2, y, g.subgroup_class_of(k1 | moved, generate=True)


def _decide_type_i(g, genus, i, node_class, h1, h2, component, config) -> Verdict:
    for k1, m1, k2, m2, y, total in _type_i_realizations(g, genus, i, node_class, h1, h2):
        if component is not None and total != component:
            continue
        try:
            w1 = find_witness(g, i, [{m1}], k1, config)
            w2 = find_witness(g, genus - i, [{m2}], k2, config)
        except SearchTooLarge as exc:
            return Verdict("undecided", "exact_count",
                           certificate={"exact_count_positive": True,
                                        "cutoff": exc.cutoff, "required": exc.required})
        # conjugate side 2 so that the two local indices are mutually inverse
        side2 = tuple(g.conj(z, y) for z in w2.tuple)
        return Verdict("nonempty", "exact_count", witness={
            "side1": {"genus": i, "found_at_genus": w1.found_at_genus,
                      "tuple": _names(g, w1.tuple)},
            "side2": {"genus": genus - i, "found_at_genus": w2.found_at_genus,
                      "tuple": _names(g, side2)},
            "total_image": g.subgroup_class_names[total]})
    return Verdict("empty", "exact_count", certificate={
        "reason": "no side realizations with positive exact count"
                  + ("" if component is None else " in the requested component")})


# public API ------------------------------------------------------------------

def commutator_necessary_condition(label: BoundaryLabel) -> bool:
    if label.kind != "type_0":
        raise InvalidQuery("the commutator condition concerns type-0 labels")
    g = label.group
    nodes = set()
    for c in g.invsym_classes[label.node_type]:
        nodes |= g.classes[c]
    return any(nodes & g.commutator_subgroup(k) for k in g.subgroup_classes[label.h2])


def decide(label: BoundaryLabel, component: Optional[int] = None,
           config: Optional[Config] = None) -> Verdict:
    config = config or Config.from_env()
    g = label.group
    if label.kind == "type_0":
        if component is not None and label.h1 != component:
            return Verdict("empty", "exact_count",
                           certificate={"reason": "whole-curve image class differs from component"})
        v = _decide_type0(g, label.genus, label.node_class, label.h1, label.h2, config)
        v.commutator_condition = commutator_necessary_condition(label)
        return v
    return _decide_type_i(g, label.genus, label.i, label.node_class, label.h1, label.h2,
                          component, config)


def candidate_labels(g: int, group: FiniteGroup) -> list:
    """Every label shape before any nonemptiness test."""
    if g < 2:
        raise InvalidQuery(f"boundary catalog needs genus >= 2, got {g}")
    out = []
    n_sub = len(group.subgroup_classes)
    for node in range(len(group.invsym_classes)):
        for h1 in range(n_sub):
            for h2 in range(n_sub):
                if group.subgroup_class_le(h2, h1):
                    out.append(BoundaryLabel(group, g, "type_0", 0, h1, h2, node))
    for i in range(1, g // 2 + 1):
        for node in range(len(group.classes)):
            for h1 in range(n_sub):
                for h2 in range(n_sub):
                    out.append(BoundaryLabel(group, g, "type_i", i, h1, h2, node))
    return out


def catalog(g: int, group: FiniteGroup, restrict_to_component: Optional[int] = None,
            config: Optional[Config] = None, include_empty: bool = False) -> list:
    """Boundary labels with verdicts; empty labels are dropped unless asked for."""
    out = []
    for lab in candidate_labels(g, group):
        lab.verdict = decide(lab, restrict_to_component, config)
        if include_empty or lab.verdict.status != "empty":
            out.append(lab)
    return out


def replay_witness(label: BoundaryLabel) -> bool:
    """Re-check a nonempty verdict's witness from scratch."""
    v = label.verdict
    if v is None or v.status != "nonempty" or v.witness is None:
        return False
    g = label.group
    ids = lambda names: tuple(g.element(n) for n in names)  # noqa: E731
    if label.kind == "type_0":
        gg = label.genus - 1
        tup = ids(v.witness["tuple"])
        x = g.element(v.witness["gluing"])
        w, vv = tup[-2], tup[-1]
        if len(tup) != 2 * gg + 2 or relation_product(g, gg, tup) != 0:
            return False
        if g.conj(g.inv[w], x) != vv or g.invsym_of[g.class_of[w]] != label.node_type:
            return False
        k2 = g.generated(tup)
        return (g.subgroup_class_of(k2) == label.h2
                and g.subgroup_class_of(k2 | {x}, generate=True) == label.h1)
    s1, s2 = v.witness["side1"], v.witness["side2"]
    t1, t2 = ids(s1["tuple"]), ids(s2["tuple"])
    i = label.i
    if len(t1) != 2 * i + 1 or len(t2) != 2 * (label.genus - i) + 1:
        return False
    if relation_product(g, i, t1) or relation_product(g, label.genus - i, t2):
        return False
    if g.class_of[t1[-1]] != label.node_type or g.mul(t1[-1], t2[-1]) != 0:
        return False
    k1, k2 = g.generated(t1), g.generated(t2)
    total = g.subgroup_class_of(k1 | k2, generate=True)
    return (g.subgroup_class_of(k1) == label.h1 and g.subgroup_class_of(k2) == label.h2
            and g.subgroup_class_names[total] == v.witness["total_image"])
