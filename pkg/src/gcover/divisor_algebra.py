"""Exact divisor classes over a labeled basis, with the S3 pullback formulas.

Basis labels are plain strings:

=====================  ==========================================
``lambda``             Hodge class
``kappa1``             first kappa class
``delta_base_i``       boundary classes on the moduli of curves
``delta_prime_i``      trivial node type over ``delta_i``
``delta_0_c2``         irreducible curves, node type of a transposition
``delta_0_c3``         irreducible curves, node type of a 3-cycle
``delta_i_c3_i``       separating node with 3-cycle stabilizer, ``i >= 1``
``fine:...``           a single boundary label (see ``boundary_catalog``)
=====================  ==========================================

For groups other than S3 the node-type labels use the class name in place
of ``c2`` / ``c3``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Optional

from .errors import GenusMismatch, IndexOutOfRange, InternalMismatch

LAMBDA = "lambda"
KAPPA1 = "kappa1"
DELTA_0_C2 = "delta_0_c2"
DELTA_0_C3 = "delta_0_c3"


def delta_base(i: int) -> str:
    return f"delta_base_{i}"


def delta_prime(i: int) -> str:
    return f"delta_prime_{i}"


def delta_i_c3(i: int) -> str:
    return f"delta_i_c3_{i}"


def delta_0_node(node: str) -> str:
    """Coarse type-0 label for a non-trivial node class name."""
    return f"delta_0_{node}"


def delta_i_node(i: int, node: str) -> str:
    return f"delta_i_{node}_{i}"


def _label_key(label: str):
    """Display order: lambda, kappa1, base deltas, then by boundary index."""
    if label == LAMBDA:
        return (0, 0, 0, label)
    if label == KAPPA1:
        return (1, 0, 0, label)
    m = re.fullmatch(r"delta_base_(\d+)", label)
    if m:
        return (2, int(m.group(1)), 0, label)
    m = re.fullmatch(r"delta_prime_(\d+)", label)
    if m:
        return (3, int(m.group(1)), 0, label)
    if label.startswith("delta_0_"):
        return (3, 0, 1, label)
    m = re.fullmatch(r"delta_i_.+_(\d+)", label)
    if m:
        return (3, int(m.group(1)), 1, label)
    return (4, 0, 0, label)


def _parse_fraction(v) -> Fraction:
    if isinstance(v, str):
        return Fraction(v.strip())
    return Fraction(v)


def format_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


class DivisorClass:
    """A rational divisor class on a fixed genus; missing labels are zero."""

    __slots__ = ("genus", "coeffs")

    def __init__(self, genus: int, coeffs: Optional[Mapping[str, object]] = None):
        self.genus = genus
        clean: Dict[str, Fraction] = {}
        for k, v in (coeffs or {}).items():
            q = _parse_fraction(v)
            if q:
                clean[k] = q
        self.coeffs = clean

    def __getitem__(self, label: str) -> Fraction:
        return self.coeffs.get(label, Fraction(0))

    def labels(self) -> list:
        return sorted(self.coeffs, key=_label_key)

    def _check(self, other: "DivisorClass"):
        if not isinstance(other, DivisorClass):
            raise TypeError(f"cannot combine DivisorClass with {type(other).__name__}")
        if other.genus != self.genus:
            raise GenusMismatch(f"genus {self.genus} vs genus {other.genus}",
                                witness=[self.genus, other.genus])

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return DivisorClass(self.genus, out)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.genus, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __mul__(self, scalar) -> "DivisorClass":
        s = Fraction(scalar)
        return DivisorClass(self.genus, {k: v * s for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "DivisorClass":
        return self * (1 / Fraction(scalar))

    def __eq__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self.genus == other.genus and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in ((k, self.coeffs[k]) for k in self.labels()))
        return f"DivisorClass(g={self.genus}, {{{body}}})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in self.labels():
            v = self.coeffs[k]
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            coef = "" if mag == 1 else f"{mag}*"
            parts.append(f"{sign} {coef}{k}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> dict:
        return {"genus": self.genus,
                "coeffs": {k: format_fraction(self.coeffs[k]) for k in self.labels()}}

    @classmethod
    def from_json(cls, data: Mapping) -> "DivisorClass":
        return cls(int(data["genus"]), {k: _parse_fraction(v) for k, v in data["coeffs"].items()})

    def map_labels(self, fn: Callable[[str], "DivisorClass"]) -> "DivisorClass":
        """Linear extension of a label-wise substitution."""
        out = DivisorClass(self.genus)
        for k, v in self.coeffs.items():
            out = out + fn(k) * v
        return out


def unit(genus: int, label: str) -> DivisorClass:
    return DivisorClass(genus, {label: 1})


def _check_index(i: int, g: int):
    if not 0 <= i <= g // 2:
        raise IndexOutOfRange(f"boundary index {i} outside 0..{g // 2} for genus {g}",
                              witness={"i": i, "genus": g})


# pullbacks -------------------------------------------------------------------

def pullback_delta(i: int, g: int) -> DivisorClass:
    _check_index(i, g)
    if i == 0:
        return DivisorClass(g, {delta_prime(0): 1, DELTA_0_C2: 2, DELTA_0_C3: 3})
    return DivisorClass(g, {delta_prime(i): 1, delta_i_c3(i): 3})


def pullback_lambda(g: int) -> DivisorClass:
    return unit(g, LAMBDA)


def pullback(c: DivisorClass) -> DivisorClass:
    """Pull a class on the moduli of curves back to the S3-cover moduli.

    ``kappa1`` is carried over unchanged; see :func:`kappa1_substitution`.
    """
    def one(label):
        m = re.fullmatch(r"delta_base_(\d+)", label)
        if m:
            return pullback_delta(int(m.group(1)), c.genus)
        if label in (LAMBDA, KAPPA1):
            return unit(c.genus, label)
        raise ValueError(f"{label!r} is not a class on the moduli of curves")
    return c.map_labels(one)


def ramification_divisor(g: int) -> DivisorClass:
    coeffs = {DELTA_0_C2: 1, DELTA_0_C3: 2}
    for i in range(1, g // 2 + 1):
        coeffs[delta_i_c3(i)] = 2
    return DivisorClass(g, coeffs)


def base_canonical_class(g: int) -> DivisorClass:
    """Canonical class of the moduli of curves: 13 lambda - 2 delta_0 - 3 delta_1 - 2 sum_{i>=2}."""
    coeffs = {LAMBDA: 13, delta_base(0): -2}
    for i in range(1, g // 2 + 1):
        coeffs[delta_base(i)] = -3 if i == 1 else -2
    return DivisorClass(g, coeffs)


def canonical_closed_form(g: int) -> DivisorClass:
    coeffs = {LAMBDA: 13, delta_prime(0): -2, DELTA_0_C2: -3, DELTA_0_C3: -4}
    for i in range(1, g // 2 + 1):
        coeffs[delta_prime(i)] = -3 if i == 1 else -2
        coeffs[delta_i_c3(i)] = -7 if i == 1 else -4
    return DivisorClass(g, coeffs)


def canonical_class(g: int) -> DivisorClass:
    """Canonical class by Riemann-Hurwitz, checked against the closed form."""
    if g < 2:
        raise IndexOutOfRange(f"genus must be at least 2, got {g}", witness={"genus": g})
    k = pullback(base_canonical_class(g)) + ramification_divisor(g)
    closed = canonical_closed_form(g)
    if k != closed:
        raise InternalMismatch(f"canonical class derivations disagree in genus {g}",
                               witness={"hurwitz": k.to_json(), "closed": closed.to_json()})
    return k


def kappa1_substitution(c: DivisorClass) -> DivisorClass:
    """Replace kappa1 by the pullback of ``12 lambda - delta``."""
    if KAPPA1 not in c.coeffs:
        return c
    rest = DivisorClass(c.genus, {k: v for k, v in c.coeffs.items() if k != KAPPA1})
    sub = DivisorClass(c.genus, {LAMBDA: 12, delta_prime(0): -1, DELTA_0_C2: -2, DELTA_0_C3: -3})
    return rest + sub * c.coeffs[KAPPA1]


# fine labels -----------------------------------------------------------------

def fine(key: str) -> str:
    return f"fine:{key}"


def parse_fine(label: str) -> tuple:
    """``fine:<i>:<node>:<h1>:<h2>`` -> ``(i, node, h1, h2)``."""
    parts = label.split(":")
    if len(parts) != 5 or parts[0] != "fine":
        raise ValueError(f"not a fine boundary label: {label!r}")
    return int(parts[1]), parts[2], parts[3], parts[4]


def coarse_label(label: str) -> str:
    """Surjection from fine labels onto coarse ones; other labels map to themselves."""
    if not label.startswith("fine:"):
        return label
    i, node, _, _ = parse_fine(label)
    if node == "1":
        return delta_prime(i)
    return delta_0_node(node) if i == 0 else delta_i_node(i, node)


def aggregate(c: DivisorClass) -> DivisorClass:
    return c.map_labels(lambda k: unit(c.genus, coarse_label(k)))


def fine_pullback_delta(i: int, g: int, labels: Iterable) -> DivisorClass:
    """Pullback of ``delta_i`` over the nonempty fine labels of a catalog.

    Each label enters with multiplicity the order of the node stabilizer.
    ``labels`` yields objects with ``i``, ``fine_key`` and ``node_order``.
    """
    _check_index(i, g)
    out = DivisorClass(g)
    for lab in labels:
        if lab.i == i:
            out = out + unit(g, lab.fine_key) * lab.node_order
    return out
