"""Finite groups given by Cayley tables, with eagerly derived conjugation data.

Elements are integers ``0..order-1`` and ``0`` is always the identity.
Element conjugacy classes are ordered by their least member; subgroup
classes are ordered by (order, least member set) so the trivial class comes
first and the whole group last.
"""
from __future__ import annotations

import itertools
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .errors import NotAGroup, NotASubgroup

ConjClassId = int
InvSymClassId = int
SubgroupClassId = int


def _sort_key(members: frozenset) -> tuple:
    return (len(members), tuple(sorted(members)))


class FiniteGroup:
    """A validated finite group. Immutable once built; use :func:`build_group`."""

    def __init__(self, table, names=None, label=None, class_names=None,
                 subgroup_class_names=None):
        self.order = len(table)
        self.table = tuple(tuple(row) for row in table)
        self.label = label
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(self.order))
        self._validate()
        self._derive()
        self.class_names = tuple(class_names) if class_names else tuple(
            "1" if c == 0 else self.names[min(cl)] if len(cl) == 1 else f"[{self.names[min(cl)]}]"
            for c, cl in enumerate(self.classes))
        if subgroup_class_names:
            self.subgroup_class_names = tuple(subgroup_class_names)
        else:
            last = len(self.subgroup_classes) - 1
            self.subgroup_class_names = tuple(
                "1" if k == 0 else "G" if k == last else f"H{k}"
                for k in range(len(self.subgroup_classes)))

    # validation -----------------------------------------------------------
    def _validate(self):
        n, t = self.order, self.table
        if n == 0 or any(len(row) != n for row in t):
            raise NotAGroup("table is not square and non-empty")
        for x, row in enumerate(t):
            for y, v in enumerate(row):
                if not (0 <= v < n):
                    raise NotAGroup(f"entry {x}*{y}={v} out of range", witness=[x, y])
        for x in range(n):
            if t[0][x] != x or t[x][0] != x:
                raise NotAGroup("index 0 is not a two-sided identity", witness=[0, x])
        for x in range(n):
            if 0 not in t[x] or all(t[y][x] != 0 for y in range(n)):
                raise NotAGroup(f"element {x} has no inverse", witness=[x])
            y = t[x].index(0)
            if t[y][x] != 0:
                raise NotAGroup(f"element {x} has no two-sided inverse", witness=[x, y])
        for x, y, z in itertools.product(range(n), repeat=3):
            if t[t[x][y]][z] != t[x][t[y][z]]:
                raise NotAGroup("associativity fails", witness=[x, y, z])

    # derived data ---------------------------------------------------------
    def _derive(self):
        n, t = self.order, self.table
        self.inv = tuple(t[x].index(0) for x in range(n))
        orders = []
        for x in range(n):
            k, y = 1, x
            while y != 0:
                y = t[y][x]
                k += 1
            orders.append(k)
        self.element_orders = tuple(orders)
        self.exponent = 1
        for k in orders:
            self.exponent = self.exponent * k // _gcd(self.exponent, k)

        class_of = [-1] * n
        classes = []
        for x in range(n):
            if class_of[x] >= 0:
                continue
            cl = frozenset(self.conj(x, y) for y in range(n))
            for z in cl:
                class_of[z] = len(classes)
            classes.append(cl)
        self.classes = tuple(classes)
        self.class_of = tuple(class_of)
        self.class_reps = tuple(min(cl) for cl in classes)
        self.inverse_class = tuple(class_of[self.inv[r]] for r in self.class_reps)

        invsym = []
        invsym_of = [-1] * len(classes)
        for c in range(len(classes)):
            if invsym_of[c] >= 0:
                continue
            members = tuple(sorted({c, self.inverse_class[c]}))
            for m in members:
                invsym_of[m] = len(invsym)
            invsym.append(members)
        self.invsym_classes = tuple(invsym)
        self.invsym_of = tuple(invsym_of)

        self.centralizers = tuple(
            frozenset(y for y in range(n) if t[x][y] == t[y][x]) for x in range(n))
        self.center = frozenset.intersection(*self.centralizers)

        subgroups = {frozenset([0])}
        frontier = [frozenset([0])]
        while frontier:
            nxt = []
            for s in frontier:
                for x in range(n):
                    if x in s:
                        continue
                    h = self.generated(s | {x})
                    if h not in subgroups:
                        subgroups.add(h)
                        nxt.append(h)
            frontier = nxt
        self.subgroups = tuple(sorted(subgroups, key=_sort_key))

        seen = set()
        sub_classes = []
        for s in self.subgroups:
            if s in seen:
                continue
            orbit = {frozenset(self.conj(x, y) for x in s) for y in range(n)}
            seen |= orbit
            sub_classes.append(tuple(sorted(orbit, key=_sort_key)))
        sub_classes.sort(key=lambda orbit: _sort_key(orbit[0]))
        self.subgroup_classes = tuple(sub_classes)
        self._subgroup_class_of = {
            s: k for k, orbit in enumerate(sub_classes) for s in orbit}

    # element arithmetic ---------------------------------------------------
    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def prod(self, elems: Iterable[int]) -> int:
        acc = 0
        t = self.table
        for e in elems:
            acc = t[acc][e]
        return acc

    def conj(self, x: int, y: int) -> int:
        """``y x y^-1``."""
        return self.table[self.table[y][x]][self.inv[y]]

    def commutator(self, a: int, b: int) -> int:
        """``a b a^-1 b^-1``."""
        t, inv = self.table, self.inv
        return t[t[t[a][b]][inv[a]]][inv[b]]

    def power(self, x: int, k: int) -> int:
        k %= self.element_orders[x]
        acc = 0
        for _ in range(k):
            acc = self.table[acc][x]
        return acc

    def generated(self, elems: Iterable[int]) -> frozenset:
        """Subgroup generated by ``elems``."""
        gens = set(elems) | {0}
        members = set(gens)
        frontier = list(members)
        t = self.table
        while frontier:
            nxt = []
            for a in frontier:
                for b in gens:
                    c = t[a][b]
                    if c not in members:
                        members.add(c)
                        nxt.append(c)
            frontier = nxt
        return frozenset(members)

    def is_subgroup(self, elems: Iterable[int]) -> bool:
        s = frozenset(elems)
        if 0 not in s:
            return False
        return all(self.table[a][b] in s for a in s for b in s)

    # conjugation data -----------------------------------------------------
    def centralizer(self, x: int) -> frozenset:
        return self.centralizers[x]

    def subgroup_class_of(self, elems: Iterable[int], generate: bool = False) -> SubgroupClassId:
        s = frozenset(elems)
        if generate:
            s = self.generated(s)
        elif not self.is_subgroup(s):
            raise NotASubgroup(f"{sorted(s)} is not closed under the group law",
                               witness=sorted(s))
        return self._subgroup_class_of[s]

    def commutator_subgroup(self, h: Iterable[int]) -> frozenset:
        h = list(h)
        return self.generated(self.commutator(a, b) for a in h for b in h)

    def subgroup_class_le(self, lower: SubgroupClassId, upper: SubgroupClassId) -> bool:
        """True when some member of class ``lower`` lies inside a member of ``upper``."""
        rep = self.subgroup_classes[upper][0]
        return any(s <= rep for s in self.subgroup_classes[lower])

    def centralizer_of_set(self, elems: Iterable[int]) -> frozenset:
        out = frozenset(range(self.order))
        for x in elems:
            out &= self.centralizers[x]
        return out

    @property
    def is_abelian(self) -> bool:
        return len(self.center) == self.order

    @property
    def trivial_class(self) -> SubgroupClassId:
        return 0

    @property
    def full_class(self) -> SubgroupClassId:
        return len(self.subgroup_classes) - 1

    # name lookup ----------------------------------------------------------
    def element(self, name) -> int:
        if isinstance(name, int):
            return name
        if name in self.names:
            return self.names.index(name)
        if name.isdigit() and int(name) < self.order:
            return int(name)
        raise KeyError(f"unknown element {name!r}")

    def conj_class(self, name) -> ConjClassId:
        """Class id from a class name, an element name, or an element index."""
        if isinstance(name, int):
            return self.class_of[name]
        if name in self.class_names:
            return self.class_names.index(name)
        return self.class_of[self.element(name)]

    def subgroup_class(self, name) -> SubgroupClassId:
        if isinstance(name, int):
            return name
        if name in self.subgroup_class_names:
            return self.subgroup_class_names.index(name)
        low = name.lower()
        if low in ("full", "g", "all"):
            return self.full_class
        if low in ("trivial", "1"):
            return 0
        if name.isdigit() and int(name) < len(self.subgroup_classes):
            return int(name)
        raise KeyError(f"unknown subgroup class {name!r}")

    def __repr__(self):
        return f"FiniteGroup({self.label or 'order ' + str(self.order)})"

    def summary(self) -> dict:
        return {
            "label": self.label,
            "order": self.order,
            "elements": list(self.names),
            "element_orders": list(self.element_orders),
            "classes": [
                {"id": c, "name": self.class_names[c],
                 "members": [self.names[x] for x in sorted(cl)],
                 "size": len(cl),
                 "centralizer_order": len(self.centralizers[self.class_reps[c]])}
                for c, cl in enumerate(self.classes)],
            "inverse_symmetric_classes": [
                [self.class_names[c] for c in members] for members in self.invsym_classes],
            "subgroup_count": len(self.subgroups),
            "subgroup_classes": [
                {"id": k, "name": self.subgroup_class_names[k],
                 "order": len(orbit[0]),
                 "representative": [self.names[x] for x in sorted(orbit[0])],
                 "conjugates": len(orbit)}
                for k, orbit in enumerate(self.subgroup_classes)],
        }


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def build_group(table: Sequence[Sequence[int]], names=None, label=None,
                class_names=None, subgroup_class_names=None) -> FiniteGroup:
    return FiniteGroup(table, names=names, label=label, class_names=class_names,
                       subgroup_class_names=subgroup_class_names)


def subgroup_as_group(g: FiniteGroup, elems: Iterable[int]):
    """Re-index a subgroup as a standalone group; returns ``(group, members)``.

    ``members[k]`` is the element of ``g`` playing the role of index ``k``.
    """
    members = sorted(elems)
    pos = {x: k for k, x in enumerate(members)}
    table = [[pos[g.table[a][b]] for b in members] for a in members]
    return FiniteGroup(table, names=[g.names[x] for x in members]), members


# built-ins ----------------------------------------------------------------

def _perm_mul(p, q):
    # p∘q: apply q first
    return tuple(p[q[i]] for i in range(len(q)))


S3_ELEMENTS = {
    "1": (0, 1, 2),
    "(12)": (1, 0, 2),
    "(13)": (2, 1, 0),
    "(23)": (0, 2, 1),
    "(123)": (1, 2, 0),
    "(132)": (2, 0, 1),
}


def _s3():
    names = list(S3_ELEMENTS)
    perms = [S3_ELEMENTS[k] for k in names]
    table = [[perms.index(_perm_mul(p, q)) for q in perms] for p in perms]
    return build_group(table, names=names, label="S3",
                       class_names=["1", "c2", "c3"],
                       subgroup_class_names=["1", "T", "N", "S3"])


def cyclic_group(n: int) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    names = ["1" if k == 0 else "z" if k == 1 else f"z^{k}" for k in range(n)]
    g = build_group(table, names=names, label=f"mu{n}" if n > 1 else "trivial")
    sub_names = []
    for orbit in g.subgroup_classes:
        d = len(orbit[0])
        sub_names.append("1" if d == 1 else f"mu{d}")
    g.subgroup_class_names = tuple(sub_names)
    return g


_BUILTIN_FACTORIES = {
    "trivial": lambda: cyclic_group(1),
    "mu2": lambda: cyclic_group(2),
    "mu3": lambda: cyclic_group(3),
    "mu4": lambda: cyclic_group(4),
    "mu6": lambda: cyclic_group(6),
    "S3": _s3,
}
_cache = {}

BUILTIN_NAMES = tuple(_BUILTIN_FACTORIES)


def builtin(name: str) -> FiniteGroup:
    key = {k.lower(): k for k in _BUILTIN_FACTORIES}.get(name.lower())
    if key is None:
        raise KeyError(f"unknown built-in group {name!r}; choose from {BUILTIN_NAMES}")
    if key not in _cache:
        _cache[key] = _BUILTIN_FACTORIES[key]()
    return _cache[key]


def parse_cayley_file(text: str, label: Optional[str] = None) -> FiniteGroup:
    """Parse the Cayley-table text format.

    Line 1 is the order ``n``; the next ``n`` lines hold the rows; any
    trailing ``idx name`` lines name elements.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise NotAGroup("empty Cayley file")
    n = int(lines[0])
    if len(lines) < n + 1:
        raise NotAGroup(f"expected {n} table rows")
    table = [[int(v) for v in lines[1 + r].split()] for r in range(n)]
    names = [str(i) for i in range(n)]
    for ln in lines[n + 1:]:
        idx, name = ln.split(None, 1)
        names[int(idx)] = name.strip()
    return build_group(table, names=names, label=label)


def load_group(spec: str) -> FiniteGroup:
    """Built-in name or path to a Cayley-table file."""
    try:
        return builtin(spec)
    except KeyError:
        path = Path(spec)
        if not path.exists():
            raise
        return parse_cayley_file(path.read_text(), label=path.stem)
