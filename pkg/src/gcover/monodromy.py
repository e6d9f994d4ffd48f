"""Counting G-covers through their monodromy tuples.

A cover of a genus ``g`` curve with ``n`` marks is encoded by a tuple
``(a_1, b_1, ..., a_g, b_g, c_1, ..., c_n)`` of group elements with

    [a_1, b_1] ... [a_g, b_g] c_1 ... c_n = 1,     [a, b] = a b a^-1 b^-1,

evaluated left to right.  Three independent counting paths are provided:

* ``brute_force``: enumerate every tuple.
* ``frobenius``: the character formula (needs a shipped character table).
* ``moebius``: exact-image counts by Moebius inversion over the subgroup
  lattice, with per-subgroup totals from a convolution of commutator
  distributions (works for any group and any genus).
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .characters import irreducibles
from .config import Config
from .cyclotomic import CyclotomicNumber
from .errors import InvalidQuery, NonIntegralCount, SearchTooLarge, UnsupportedGroup
from .group_core import FiniteGroup, subgroup_as_group

# below this many tuples a worker pool costs more than it saves
_PARALLEL_THRESHOLD = 2_000_000


@dataclass(frozen=True)
class CoverCountQuery:
    group: FiniteGroup
    genus: int
    mark_types: tuple = ()
    image_class: Optional[int] = None
    up_to_conjugation: bool = False

    def __post_init__(self):
        object.__setattr__(self, "mark_types", tuple(self.mark_types))
        g = self.group
        if self.genus < 0:
            raise InvalidQuery(f"genus must be non-negative, got {self.genus}")
        for c in self.mark_types:
            if not 0 <= c < len(g.classes):
                raise InvalidQuery(f"unknown conjugacy class id {c}")
        if self.image_class is not None:
            if not 0 <= self.image_class < len(g.subgroup_classes):
                raise InvalidQuery(f"unknown subgroup class id {self.image_class}")
            if self.image_class == g.trivial_class and any(self.mark_types):
                raise InvalidQuery("trivial image class forces trivial mark types",
                                   witness=list(self.mark_types))

    @property
    def mark_sets(self) -> list:
        return [self.group.classes[c] for c in self.mark_types]

    @property
    def search_size(self) -> int:
        return self.group.order ** (2 * self.genus + len(self.mark_types))


@dataclass(frozen=True)
class CoverCountResult:
    count: int
    method: str


@dataclass(frozen=True)
class NodeGluingQuery:
    group: FiniteGroup
    node_type: int


@dataclass(frozen=True)
class GluingFactors:
    count: int
    elements: tuple
    orbit_count: int  # conjugacy classes of the centralizer


# ---------------------------------------------------------------------------
# brute force

def _kernel(table, comm, genus, ab_pool, mark_pools, first, allowed_images):
    """Count relation tuples; ``first`` restricts the first coordinate.

    ``allowed_images`` is ``None`` or a set of subgroups (frozensets); in the
    latter case the generated subgroup must be one of them.
    """
    n_marks = len(mark_pools)
    inv = [row.index(0) for row in table]
    check_image = allowed_images is not None
    closure = {}

    def image_ok(used):
        key = frozenset(used)
        hit = closure.get(key)
        if hit is None:
            gens = set(key) | {0}
            members = set(gens)
            frontier = list(members)
            while frontier:
                nxt = []
                for a in frontier:
                    for b in gens:
                        c = table[a][b]
                        if c not in members:
                            members.add(c)
                            nxt.append(c)
                frontier = nxt
            hit = frozenset(members) in allowed_images
            closure[key] = hit
        return hit

    def marks(i, p, used):
        if i == n_marks - 1:
            # the last mark is forced to be p^-1
            pool = mark_pools[i] if i or genus else first
            need = inv[p]
            if need not in pool:
                return 0
            return 1 if not check_image or image_ok(used + (need,)) else 0
        if i == n_marks:
            return 1 if p == 0 and (not check_image or image_ok(used)) else 0
        pool = mark_pools[i] if i or genus else first
        row = table[p]
        total = 0
        for c in pool:
            total += marks(i + 1, row[c], used + (c,) if check_image else used)
        return total

    def pairs(j, p, used):
        if j == genus:
            return marks(0, p, used)
        pool_a = first if j == 0 else ab_pool
        row = table[p]
        total = 0
        for a in pool_a:
            crow = comm[a]
            for b in ab_pool:
                total += pairs(j + 1, row[crow[b]], used + (a, b) if check_image else used)
        return total

    return pairs(0, 0, ())


def _kernel_task(args):
    return _kernel(*args)


def _brute_total(g: FiniteGroup, genus, ab_pool, mark_pools, allowed_images, workers):
    """Relation tuples with entries drawn from the given pools."""
    comm = tuple(tuple(g.commutator(a, b) for b in range(g.order)) for a in range(g.order))
    ab_pool = tuple(sorted(ab_pool))
    mark_pools = [tuple(sorted(p)) for p in mark_pools]
    if genus == 0 and not mark_pools:
        return 1 if allowed_images is None or frozenset([0]) in allowed_images else 0
    first = ab_pool if genus else mark_pools[0]
    size = len(first) * len(ab_pool) ** max(0, 2 * genus - 1)
    for p in mark_pools:
        size *= len(p)
    if workers > 1 and size >= _PARALLEL_THRESHOLD and len(first) > 1:
        chunks = [first[k::workers] for k in range(workers) if first[k::workers]]
        tasks = [(g.table, comm, genus, ab_pool, mark_pools, chunk, allowed_images)
                 for chunk in chunks]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            return sum(pool.map(_kernel_task, tasks))
    return _kernel(g.table, comm, genus, ab_pool, mark_pools, first, allowed_images)


def count_homs_brute(q: CoverCountQuery, config: Optional[Config] = None) -> CoverCountResult:
    config = config or Config.from_env()
    if q.search_size > config.brute_force_cutoff:
        raise SearchTooLarge(q.search_size, config.brute_force_cutoff)
    g = q.group
    allowed = None
    if q.image_class is not None:
        allowed = set(g.subgroup_classes[q.image_class])
    everything = range(g.order)
    if not q.up_to_conjugation:
        n = _brute_total(g, q.genus, everything, q.mark_sets, allowed, config.workers)
        return CoverCountResult(n, "brute_force")
    # Burnside: orbits = (1/|G|) sum_x #tuples fixed by conjugation by x
    total = 0
    for c, cl in enumerate(g.classes):
        cx = g.centralizers[g.class_reps[c]]
        fixed = _brute_total(g, q.genus, cx, [s & cx for s in q.mark_sets],
                             allowed, config.workers)
        total += len(cl) * fixed
    return CoverCountResult(_exact_div(total, g.order), "brute_force")


def _exact_div(a: int, b: int) -> int:
    if a % b:
        raise NonIntegralCount(f"{a}/{b} is not an integer")
    return a // b


# ---------------------------------------------------------------------------
# Frobenius character formula

def frobenius_total(g: FiniteGroup, genus: int, mark_sets: Sequence[Iterable[int]]) -> int:
    """Relation tuples with ``c_i`` in ``mark_sets[i]``; each set a union of classes."""
    mark_sets = [frozenset(s) for s in mark_sets]
    for s in mark_sets:
        for x in s:
            if not g.classes[g.class_of[x]] <= s:
                raise InvalidQuery("Frobenius marks must be unions of conjugacy classes")
    n = len(mark_sets)
    total = CyclotomicNumber.from_rational(0)
    for chi in irreducibles(g):
        term = CyclotomicNumber.from_rational(Fraction(chi.dim) ** (2 - 2 * genus - n))
        for s in mark_sets:
            acc = CyclotomicNumber.from_rational(0)
            for x in s:
                acc = acc + chi.value(x)
            term = term * acc
        total = total + term
    total = total * Fraction(g.order) ** (2 * genus - 1)
    if not total.is_rational() or total.rational().denominator != 1:
        raise NonIntegralCount(f"character sum gave {total}")
    return int(total.rational())


def count_homs_frobenius(q: CoverCountQuery) -> CoverCountResult:
    if q.image_class is not None:
        raise InvalidQuery("image-class restriction needs the moebius path")
    g = q.group
    if not q.up_to_conjugation:
        return CoverCountResult(frobenius_total(g, q.genus, q.mark_sets), "frobenius")
    total = 0
    for c, cl in enumerate(g.classes):
        cx = g.centralizers[g.class_reps[c]]
        sub, members = subgroup_as_group(g, cx)
        pos = {x: k for k, x in enumerate(members)}
        marks = [[pos[x] for x in s if x in pos] for s in q.mark_sets]
        total += len(cl) * frobenius_total(sub, q.genus, marks)
    return CoverCountResult(_exact_div(total, g.order), "frobenius")


# ---------------------------------------------------------------------------
# convolution and Moebius inversion

def _convolve(g: FiniteGroup, d1: dict, d2: dict) -> dict:
    out = {}
    t = g.table
    for x, a in d1.items():
        row = t[x]
        for y, b in d2.items():
            z = row[y]
            out[z] = out.get(z, 0) + a * b
    return out


def commutator_distribution(g: FiniteGroup, members: Iterable[int], genus: int) -> dict:
    """``z -> #{(a_j, b_j) in members^(2 genus) : prod [a_j, b_j] = z}``."""
    members = sorted(members)
    one = {}
    for a in members:
        for b in members:
            z = g.commutator(a, b)
            one[z] = one.get(z, 0) + 1
    out = {0: 1}
    power, k = one, genus
    while k:  # square-and-multiply; group convolution is associative
        if k & 1:
            out = _convolve(g, out, power)
        k >>= 1
        if k:
            power = _convolve(g, power, power)
    return out


def convolution_total(g: FiniteGroup, genus: int, mark_sets: Sequence[Iterable[int]],
                      members: Optional[Iterable[int]] = None) -> int:
    """Relation tuples with every entry in ``members`` (default: all of G)."""
    members = frozenset(range(g.order)) if members is None else frozenset(members)
    d = commutator_distribution(g, members, genus)
    m = {0: 1}
    for s in mark_sets:
        m = _convolve(g, m, {x: 1 for x in s if x in members})
    return sum(a * m.get(g.inv[z], 0) for z, a in d.items())


def _inner_total(g, genus, mark_sets, members, inner, workers):
    if inner == "convolution":
        return convolution_total(g, genus, mark_sets, members)
    if inner == "brute_force":
        return _brute_total(g, genus, members, [set(s) & members for s in mark_sets],
                            None, workers)
    if inner == "frobenius":
        sub, elems = subgroup_as_group(g, members)
        pos = {x: k for k, x in enumerate(elems)}
        return frobenius_total(sub, genus, [[pos[x] for x in s if x in pos] for s in mark_sets])
    raise InvalidQuery(f"unknown inner counting method {inner!r}")


def exact_image_counts(g: FiniteGroup, genus: int, mark_sets: Sequence[Iterable[int]],
                       inner: str = "convolution", workers: int = 1,
                       targets: Optional[Iterable[frozenset]] = None) -> dict:
    """Subgroup ``K -> #tuples generating exactly K``.

    Only subgroups below some member of ``targets`` are evaluated when
    ``targets`` is given.
    """
    mark_sets = [frozenset(s) for s in mark_sets]
    subs = g.subgroups
    if targets is not None:
        targets = list(targets)
        subs = tuple(s for s in subs if any(s <= t for t in targets))
    exact = {}
    for k in subs:  # sorted by order, so proper subgroups come first
        if any(not (s & k) for s in mark_sets):
            exact[k] = 0
            continue
        f = _inner_total(g, genus, mark_sets, k, inner, workers)
        for low, v in exact.items():
            if v and low < k:
                f -= v
        exact[k] = f
    return exact


def count_with_image_class(q: CoverCountQuery, inner: str = "convolution",
                           config: Optional[Config] = None) -> CoverCountResult:
    g = q.group
    config = config or Config.from_env()
    if q.image_class is None:
        parts = [count_with_image_class(
            CoverCountQuery(g, q.genus, q.mark_types, h, q.up_to_conjugation), inner, config)
            .count for h in range(len(g.subgroup_classes))
            if h != g.trivial_class or not any(q.mark_types)]
        return CoverCountResult(sum(parts), "moebius")
    orbit = g.subgroup_classes[q.image_class]
    exact = exact_image_counts(g, q.genus, q.mark_sets, inner, config.workers, targets=orbit)
    if not q.up_to_conjugation:
        return CoverCountResult(sum(exact[k] for k in orbit), "moebius")
    # a tuple generating K has stabilizer C_G(K) under simultaneous conjugation
    total = sum(exact[k] * len(g.centralizer_of_set(k)) for k in orbit)
    return CoverCountResult(_exact_div(total, g.order), "moebius")


def count_covers(q: CoverCountQuery, method: str = "auto",
                 config: Optional[Config] = None) -> CoverCountResult:
    """Dispatch to a counting path; ``auto`` prefers the exact non-enumerative routes."""
    config = config or Config.from_env()
    if method == "brute_force":
        return count_homs_brute(q, config)
    if method == "frobenius":
        return count_homs_frobenius(q)
    if method in ("moebius", "auto"):
        if method == "auto" and q.image_class is None:
            try:
                return count_homs_frobenius(q)
            except UnsupportedGroup:  # no character table; fall through
                pass
        return count_with_image_class(q, config=config)
    raise InvalidQuery(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# gluing data and witnesses

def gluing_factors(q: NodeGluingQuery) -> GluingFactors:
    g = q.group
    cent = g.centralizers[g.class_reps[q.node_type]]
    orbits = {frozenset(g.conj(x, y) for y in cent) for x in cent}
    return GluingFactors(len(cent), tuple(sorted(cent)), len(orbits))


def iter_tuples(g: FiniteGroup, genus: int, mark_sets: Sequence[Iterable[int]],
                members: Optional[Iterable[int]] = None):
    """Yield relation tuples in canonical order (lexicographic in the indices)."""
    members = tuple(range(g.order)) if members is None else tuple(sorted(members))
    pools = [members] * (2 * genus) + [tuple(sorted(s)) for s in mark_sets]
    t = g.table
    for tup in itertools.product(*pools):
        p = 0
        for j in range(genus):
            p = t[p][g.commutator(tup[2 * j], tup[2 * j + 1])]
        for c in tup[2 * genus:]:
            p = t[p][c]
        if p == 0:
            yield tup


def relation_product(g: FiniteGroup, genus: int, tup: Sequence[int]) -> int:
    p = 0
    for j in range(genus):
        p = g.mul(p, g.commutator(tup[2 * j], tup[2 * j + 1]))
    for c in tup[2 * genus:]:
        p = g.mul(p, c)
    return p


def pad_tuple(genus_from: int, genus_to: int, tup: Sequence[int]) -> tuple:
    """Insert identity pairs so a witness lives on a higher genus."""
    head = tuple(tup[:2 * genus_from])
    return head + (0, 0) * (genus_to - genus_from) + tuple(tup[2 * genus_from:])


@dataclass
class Witness:
    genus: int
    found_at_genus: int
    tuple: tuple = field(default_factory=tuple)


def find_witness(g: FiniteGroup, genus: int, mark_sets: Sequence[Iterable[int]],
                 image: frozenset, config: Optional[Config] = None) -> Optional[Witness]:
    """A tuple generating exactly ``image`` on genus ``genus``, or ``None``.

    Existence is decided exactly at each genus up to ``genus``; the search
    itself runs at the smallest genus where the exact count is positive and
    the result is padded with identity pairs.
    """
    config = config or Config.from_env()
    mark_sets = [frozenset(s) for s in mark_sets]
    for g0 in range(genus + 1):
        n = exact_image_counts(g, g0, mark_sets, targets=[image]).get(image, 0)
        if n == 0:
            continue
        size = len(image) ** (2 * g0 + len(mark_sets))
        if size > config.brute_force_cutoff:
            raise SearchTooLarge(size, config.brute_force_cutoff)
        for tup in iter_tuples(g, g0, [s & image for s in mark_sets], image):
            if g.generated(tup) == image:
                return Witness(genus, g0, pad_tuple(g0, genus, tup))
        raise AssertionError("exact count positive but no tuple found")
    return None
