"""Command-line interface: one subcommand per module, JSON on stdout."""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from . import acceptance
from .boundary_catalog import catalog
from .characters import age, eigen_multiplicities, is_quasireflection, representation
from .config import Config
from .divisor_algebra import (DivisorClass, canonical_class, kappa1_substitution, pullback,
                              pullback_delta, pullback_lambda, ramification_divisor)
from .elliptic_tail import (AutAction, aut_orbits, branch_data_RN, classes_with_image,
                            genus_by_riemann_hurwitz)
from .errors import GcoverError
from .grr_koszul import ch1_pushforward, koszul_class, rank_E
from .group_core import load_group
from .kodaira import verdict
from .monodromy import CoverCountQuery, NodeGluingQuery, count_covers, gluing_factors
from .pencil_bounds import PENCILS, check, pencil_numbers


class UsageError(Exception):
    pass


# output ----------------------------------------------------------------------

def _default(obj):
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, DivisorClass):
        return obj.to_json()
    if isinstance(obj, (set, frozenset, tuple)):
        return sorted(obj) if isinstance(obj, (set, frozenset)) else list(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def render(payload, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2, default=_default)
    return _table(payload)


def _cell(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, default=_default)
    return str(v)


def _table(payload) -> str:
    if isinstance(payload, list) and payload and all(isinstance(r, dict) for r in payload):
        cols = sorted({k for r in payload for k in r})
        rows = [[_cell(r.get(c, "")) for c in cols] for r in payload]
        widths = [max(len(c), *(len(r[k]) for r in rows)) for k, c in enumerate(cols)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
        lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)) for r in rows]
        return "\n".join(lines)
    if isinstance(payload, dict):
        width = max((len(k) for k in payload), default=0)
        return "\n".join(f"{k.ljust(width)}  {_cell(payload[k])}" for k in sorted(payload))
    return _cell(payload)


# argument helpers --------------------------------------------------------------

def _common(p: argparse.ArgumentParser):
    p.add_argument("--cutoff", type=int, help="brute-force tuple cutoff (default 10^8)")
    p.add_argument("--threads", help="worker processes, integer or 'auto'")
    p.add_argument("--output", choices=("json", "table"), help="output format")


def _config(args) -> Config:
    threads = args.threads
    if threads is not None and threads != "auto":
        threads = int(threads)
    return Config.from_env(brute_force_cutoff=args.cutoff, threads=threads, output=args.output)


def _group(args):
    return load_group(args.group)


def _marks(g, text: Optional[str]) -> tuple:
    if not text:
        return ()
    return tuple(g.conj_class(t.strip()) for t in text.split(",") if t.strip())


# subcommands -------------------------------------------------------------------

def cmd_group(args, cfg):
    return _group(args).summary()


def cmd_covers_count(args, cfg):
    g = _group(args)
    image = None if args.image is None else g.subgroup_class(args.image)
    q = CoverCountQuery(g, args.genus, _marks(g, args.marks), image, args.up_to_conj)
    start = time.perf_counter()
    res = count_covers(q, args.method, cfg)
    out = {"count": res.count, "method": res.method, "group": g.label or args.group,
           "genus": args.genus, "marks": [g.class_names[c] for c in q.mark_types],
           "image": None if image is None else g.subgroup_class_names[image],
           "up_to_conjugation": args.up_to_conj}
    if args.timing:
        out["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return out


def cmd_gluing(args, cfg):
    g = _group(args)
    res = gluing_factors(NodeGluingQuery(g, g.conj_class(args.node)))
    return {"count": res.count, "elements": [g.names[x] for x in res.elements],
            "orbit_count": res.orbit_count}


def cmd_elliptic_orbits(args, cfg):
    g = _group(args)
    h = g.subgroup_class(args.image)
    classes = classes_with_image(g, h)
    orbits = aut_orbits(classes, AutAction(args.aut))
    return {"group": g.label or args.group, "image": g.subgroup_class_names[h], "aut": args.aut,
            "classes": [c.to_dict() for c in classes],
            "orbits": [{"size": o.size, "lifting": o.lifting,
                        "members": [c.to_dict() for c in o.members]} for o in orbits]}


def cmd_elliptic_genus(args, cfg):
    branch, degree = branch_data_RN()
    return {"degree": degree, "base_genus": 0,
            "total_ramification": sum(b.ramification for b in branch),
            "branch_data": [b.to_dict() for b in branch],
            "genus": genus_by_riemann_hurwitz(degree, 0, branch)}


def cmd_boundary_list(args, cfg):
    g = _group(args)
    comp = None if args.component is None else g.subgroup_class(args.component)
    labels = catalog(args.genus, g, comp, cfg, include_empty=args.include_empty)
    return [lab.to_dict() for lab in labels]


def cmd_canonical(args, cfg):
    return canonical_class(args.genus).to_json()


def cmd_pullback(args, cfg):
    if args.what == "lambda":
        return pullback_lambda(args.genus).to_json()
    if args.what == "ramification":
        return ramification_divisor(args.genus).to_json()
    if args.what == "class":
        base = DivisorClass.from_json(json.loads(args.json))
        return pullback(base).to_json()
    return pullback_delta(args.i, args.genus).to_json()


def cmd_pencil_numbers(args, cfg):
    return pencil_numbers(args.pencil, args.i).to_dict()


def cmd_pencil_check(args, cfg):
    return check(args.i, Fraction(args.a), Fraction(args.b0p), Fraction(args.b0c2))


def cmd_grr_ch1(args, cfg):
    g = _group(args)
    rep = representation(g, args.rep)
    c = ch1_pushforward(args.genus, rep, g, twist=args.twist, degree=args.degree)
    out = {"class": c.to_json()}
    if args.substitute_kappa:
        out["kappa1_substituted"] = kappa1_substitution(c).to_json()
    return out


def cmd_koszul_class(args, cfg):
    k = koszul_class(args.i)
    return {"i": args.i, "genus": 2 * args.i + 1, "prefactor": k.prefactor,
            "unit_class": k.unit_class.to_json(), "normalized": k.normalized.to_json()}


def cmd_koszul_rank(args, cfg):
    return {"i": args.i, "j": args.j, "b": args.b, "rank": rank_E(args.i, args.j, args.b)}


def cmd_kodaira(args, cfg):
    return verdict(args.genus)


def cmd_eigen(args, cfg):
    g = _group(args)
    rep = representation(g, args.rep)
    x = g.element(args.element)
    m = eigen_multiplicities(rep, x)
    return {"element": g.names[x], "rep": rep.name, "order": m.r, "multiplicities": list(m.w),
            "age": age(m), "quasireflection": is_quasireflection(m)}


def cmd_selftest(args, cfg):
    rows = acceptance.run_all()
    return {"passed": all(r[2] for r in rows),
            "criteria": [{"id": cid, "name": name, "passed": ok, "detail": detail}
                         for cid, name, ok, detail in rows]}


# parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gcover", description="Exact computations on "
                                     "moduli of G-covers of curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(subparsers, name, fn, help_text):
        p = subparsers.add_parser(name, help=help_text)
        _common(p)
        p.set_defaults(func=fn)
        return p

    p = leaf(sub, "group", cmd_group, "conjugacy and subgroup data of a group")
    p.add_argument("--group", default="S3")

    covers = sub.add_parser("covers", help="monodromy counts").add_subparsers(
        dest="action", required=True)
    p = leaf(covers, "count", cmd_covers_count, "count covers")
    p.add_argument("--group", required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--marks", help="comma-separated conjugacy classes")
    p.add_argument("--image", help="subgroup class of the image")
    p.add_argument("--up-to-conj", action="store_true")
    p.add_argument("--method", default="auto",
                   choices=("auto", "brute_force", "frobenius", "moebius"))
    p.add_argument("--timing", action="store_true", help="include elapsed_ms")
    p = leaf(covers, "gluing", cmd_gluing, "gluing factors at a node")
    p.add_argument("--group", required=True)
    p.add_argument("--node", required=True, help="conjugacy class of the local index")

    et = sub.add_parser("elliptic-tail", help="elliptic-tail automorphism orbits")
    et_sub = et.add_subparsers(dest="action", required=True)
    p = leaf(et_sub, "orbits", cmd_elliptic_orbits, "orbits of an automorphism on classes")
    p.add_argument("--group", default="S3")
    p.add_argument("--image", default="N")
    p.add_argument("--aut", type=int, choices=(4, 6), default=6)
    leaf(et_sub, "genus", cmd_elliptic_genus, "branch data and Riemann-Hurwitz genus")

    bd = sub.add_parser("boundary", help="boundary divisor catalog").add_subparsers(
        dest="action", required=True)
    p = leaf(bd, "list", cmd_boundary_list, "list boundary labels with verdicts")
    p.add_argument("--group", default="S3")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--component", help="restrict to a component class")
    p.add_argument("--include-empty", action="store_true")

    p = leaf(sub, "canonical", cmd_canonical, "canonical class")
    p.add_argument("--genus", type=int, required=True)

    p = leaf(sub, "pullback", cmd_pullback, "pullbacks from the moduli of curves")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--what", choices=("delta", "lambda", "ramification", "class"),
                   default="delta")
    p.add_argument("--json", help="class as JSON, for --what class")

    pen = sub.add_parser("pencil", help="test pencils").add_subparsers(
        dest="action", required=True)
    p = leaf(pen, "numbers", cmd_pencil_numbers, "intersection numbers of a pencil")
    p.add_argument("--pencil", choices=PENCILS, required=True)
    p.add_argument("--i", type=int, required=True)
    p = leaf(pen, "check", cmd_pencil_check, "effectivity bounds")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--a", default="13")
    p.add_argument("--b0p", default="2")
    p.add_argument("--b0c2", default="3")

    grr = sub.add_parser("grr", help="Grothendieck-Riemann-Roch").add_subparsers(
        dest="action", required=True)
    p = leaf(grr, "ch1", cmd_grr_ch1, "first Chern character of a pushforward")
    p.add_argument("--group", default="S3")
    p.add_argument("--rep", default="R")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--twist", type=int, default=0)
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--substitute-kappa", action="store_true")

    kz = sub.add_parser("koszul", help="Koszul divisor").add_subparsers(
        dest="action", required=True)
    p = leaf(kz, "class", cmd_koszul_class, "Koszul divisor class")
    p.add_argument("--i", type=int, required=True)
    p = leaf(kz, "rank", cmd_koszul_rank, "rank of E_{j,b}")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = leaf(sub, "kodaira", cmd_kodaira, "slope decomposition and verdict")
    p.add_argument("--genus", type=int, required=True)

    for name in ("eigen", "age"):
        p = leaf(sub, name, cmd_eigen, "eigenvalue multiplicities and age")
        p.add_argument("--group", default="S3")
        p.add_argument("--rep", default="R")
        p.add_argument("--element", required=True)

    leaf(sub, "selftest", cmd_selftest, "run the acceptance criteria")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        cfg = _config(args)
    except ValueError as exc:
        parser.error(str(exc))
    fmt = cfg.output
    try:
        payload = args.func(args, cfg)
    except GcoverError as exc:
        print(render({"error": exc.to_dict()}, "json"))
        return 1
    except (KeyError, ValueError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(render({"error": {"code": "UsageError", "message": str(msg)}}, "json"))
        return 2
    print(render(payload, fmt))
    if args.command == "selftest" and not payload["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
