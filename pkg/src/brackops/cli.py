"""Command-line front end: enumeration, composition, verification
suites, figure export, and the recorded witnesses.

All output is deterministic for a fixed seed and configuration; exact
rationals are rendered as "p/q" strings throughout."""

import argparse
import json
import os
import sys

from . import trees as T
from .trees import caterpillar, corolla, star
from .bracketings import (enumerate_bracketings, maximal_bracketings,
                          nerve_statistics, bracketing_to_obj)
from .operads import bo_from_obj, bo_to_obj, compose_BO
from .wconstruction import (w_from_obj, w_to_obj, normalize_W, compose_W,
                            psi)
from . import dendroidal as D
from .cacti import (cactus_from_obj, cactus_to_obj, cact1_compose,
                    validate_cactus, cactus_metric)
from .plmaps import pl_to_obj
from . import bo_action
from .algebras import TerminalAlgebra
from .figures import figure_data, figure_svg
from .suites import RunConfig, run_suite, nonassoc_witness
from .trees import frac_to_str


def _dump(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(obj):
    sys.stdout.write(_dump(obj) + "\n")


def _load(path):
    with open(path) as fh:
        return json.load(fh)


def _tree_from_arg(arg):
    """A tree argument: a JSON file path, or one of the shorthands
    caterpillar:N, star:N, corolla:N."""
    kind, sep, rest = arg.partition(":")
    if sep and kind in ("caterpillar", "star", "corolla"):
        n = int(rest)
        return {"caterpillar": caterpillar, "star": star,
                "corolla": corolla}[kind](n)
    return T.tree_from_obj(_load(arg))


# ---------------------------------------------------------------------------
# Subcommand handlers.

def cmd_brackets(args):
    tree = _tree_from_arg(args.tree)
    if args.fvector:
        fvec, chi = nerve_statistics(tree, limit=args.limit)
        _emit({"tree": T.tree_to_obj(tree), "fvector": list(fvec),
               "chi": chi})
        return 0
    items = maximal_bracketings(tree) if args.max else enumerate_bracketings(tree)
    objs = sorted(bracketing_to_obj(b) for b in items)
    _emit({"tree": T.tree_to_obj(tree), "count": len(objs),
           "bracketings": objs})
    return 0


def cmd_bo(args):
    a = bo_from_obj(_load(args.lhs))
    b = bo_from_obj(_load(args.rhs))
    _emit(bo_to_obj(compose_BO(a, args.slot, b)))
    return 0


def cmd_w(args):
    if args.action == "normalize":
        _emit(w_to_obj(normalize_W(w_from_obj(_load(args.input)))))
    elif args.action == "psi":
        _emit(bo_to_obj(psi(w_from_obj(_load(args.input)))))
    else:
        a = w_from_obj(_load(args.lhs))
        b = w_from_obj(_load(args.rhs))
        _emit(w_to_obj(compose_W(a, args.slot, b)))
    return 0


def cmd_omega(args):
    if args.action == "compose":
        g = D.tilde_from_obj(_load(args.lhs))
        f = D.tilde_from_obj(_load(args.rhs))
        _emit(D.tilde_to_obj(D.compose_omega_tilde(g, f)))
        return 0
    if args.action == "image":
        g = D.morphism_from_obj(_load(args.input))
        images = [D.corolla_image(g, v)
                  for v in range(T.num_vertices(g.source))]
        _emit({"vertices": [sorted(s) for s in images],
               "corollas": [T.tree_to_obj(T.restrict(g.target, s)) if s
                            else "eta" for s in images]})
        return 0
    tree = _tree_from_arg(args.tree)
    ok = D.segal_check(TerminalAlgebra(), tree)
    _emit({"tree": T.tree_to_obj(tree), "segal": bool(ok)})
    return 0 if ok else 1


def cmd_cacti(args):
    if args.action == "compose":
        x = cactus_from_obj(_load(args.lhs))
        y = cactus_from_obj(_load(args.rhs))
        _emit(cactus_to_obj(cact1_compose(x, args.slot, y)))
        return 0
    if args.action == "validate":
        obj = _load(args.input)
        try:
            cactus_from_obj(obj)
        except (ValueError, KeyError) as exc:
            _emit({"valid": False, "error": str(exc)})
            return 1
        _emit({"valid": True})
        return 0
    if args.action == "metric":
        x = cactus_from_obj(_load(args.lhs))
        y = cactus_from_obj(_load(args.rhs))
        _emit({"distance": frac_to_str(cactus_metric(x, y))})
        return 0
    return _print_witness()


def _print_witness():
    w = nonassoc_witness()
    _emit({"x": cactus_to_obj(w["x"]), "y": cactus_to_obj(w["y"]),
           "z": cactus_to_obj(w["z"]),
           "left": cactus_to_obj(w["left"]),
           "right": cactus_to_obj(w["right"]),
           "distance": frac_to_str(w["distance"])})
    return 0


def cmd_witness(args):
    if args.name != "nonassoc":
        raise SystemExit("unknown witness %r (try: nonassoc)" % args.name)
    return _print_witness()


def cmd_bo_action(args):
    elem = bo_from_obj(_load(args.element))
    inputs = [cactus_from_obj(o) for o in _load(args.inputs)]
    result = bo_action.lam(elem, inputs)
    out = {"result": cactus_to_obj(result)}
    if args.trace and not elem.base.tree.is_eta:
        aug, gs, hs = bo_action._assembly(elem.base, elem.weighted.weights,
                                          inputs)
        ms = bo_action._ms_action(elem.base, elem.weighted.weights, inputs)
        out["trace"] = {
            "g": [pl_to_obj(g) for g in gs],
            "h": [pl_to_obj(h) for h in hs],
            "brackets": [sorted(b) for b in aug.brackets],
            "ms": {"cactus": cactus_to_obj(ms.cactus),
                   "reparam": pl_to_obj(ms.reparam)},
        }
    _emit(out)
    return 0


def cmd_verify(args):
    cfg = RunConfig(seed=args.seed, limit=args.limit, samples=args.samples)
    try:
        report = run_suite(args.suite, cfg)
    except KeyError as exc:
        raise SystemExit(exc.args[0])
    if args.json:
        _emit(report)
    else:
        for c in report["checks"]:
            line = "%s: %s (%d cases)" % (c["id"],
                                          "pass" if c["passed"] else "FAIL",
                                          c["count"])
            if not c["passed"]:
                line += " first counterexample: %s" % c["counterexample"]
            print(line)
        print("%s: %s" % (report["suite"],
                          "PASS" if report["passed"] else "FAIL"))
    return 0 if report["passed"] else 1


def cmd_figure(args):
    try:
        data = figure_data(args.name)
    except KeyError as exc:
        raise SystemExit(exc.args[0])
    os.makedirs(args.out, exist_ok=True)
    jpath = os.path.join(args.out, args.name + ".json")
    spath = os.path.join(args.out, args.name + ".svg")
    with open(jpath, "w") as fh:
        fh.write(_dump(data) + "\n")
    with open(spath, "w") as fh:
        fh.write(figure_svg(data))
    print(jpath)
    print(spath)
    return 0


# ---------------------------------------------------------------------------
# Argument parsing.

def build_parser():
    p = argparse.ArgumentParser(
        prog="brackops",
        description="Exact-arithmetic operads of bracketed trees and "
                    "normalized cacti.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("brackets", help="bracketing enumeration")
    bs = b.add_subparsers(dest="action", required=True)
    be = bs.add_parser("enumerate")
    be.add_argument("--tree", required=True,
                    help="tree JSON file or caterpillar:N / star:N / corolla:N")
    be.add_argument("--max", action="store_true",
                    help="only maximal bracketings")
    be.add_argument("--fvector", action="store_true",
                    help="f-vector and Euler characteristic instead")
    be.add_argument("--limit", type=int, default=7)
    be.set_defaults(func=cmd_brackets)

    bo = sub.add_parser("bo", help="bracketed-tree operad")
    bos = bo.add_subparsers(dest="action", required=True)
    boc = bos.add_parser("compose")
    boc.add_argument("--lhs", required=True)
    boc.add_argument("--slot", type=int, required=True)
    boc.add_argument("--rhs", required=True)
    boc.set_defaults(func=cmd_bo)

    w = sub.add_parser("w", help="edge-length trees")
    ws = w.add_subparsers(dest="action", required=True)
    wn = ws.add_parser("normalize")
    wn.add_argument("--input", required=True)
    wn.set_defaults(func=cmd_w)
    wc = ws.add_parser("compose")
    wc.add_argument("--lhs", required=True)
    wc.add_argument("--slot", type=int, required=True)
    wc.add_argument("--rhs", required=True)
    wc.set_defaults(func=cmd_w)
    wp = ws.add_parser("psi")
    wp.add_argument("--input", required=True)
    wp.set_defaults(func=cmd_w)

    om = sub.add_parser("omega", help="tree-category morphisms")
    oms = om.add_subparsers(dest="action", required=True)
    omc = oms.add_parser("compose")
    omc.add_argument("--lhs", required=True, help="outer morphism JSON")
    omc.add_argument("--rhs", required=True, help="inner morphism JSON")
    omc.set_defaults(func=cmd_omega)
    omi = oms.add_parser("image")
    omi.add_argument("--input", required=True)
    omi.set_defaults(func=cmd_omega)
    omg = oms.add_parser("segal")
    omg.add_argument("--tree", required=True)
    omg.set_defaults(func=cmd_omega)

    c = sub.add_parser("cacti", help="normalized cacti")
    cs = c.add_subparsers(dest="action", required=True)
    cc = cs.add_parser("compose")
    cc.add_argument("--lhs", required=True)
    cc.add_argument("--slot", type=int, required=True)
    cc.add_argument("--rhs", required=True)
    cc.set_defaults(func=cmd_cacti)
    cv = cs.add_parser("validate")
    cv.add_argument("--input", required=True)
    cv.set_defaults(func=cmd_cacti)
    cm = cs.add_parser("metric")
    cm.add_argument("--lhs", required=True)
    cm.add_argument("--rhs", required=True)
    cm.set_defaults(func=cmd_cacti)
    cw = cs.add_parser("witness")
    cw.set_defaults(func=cmd_cacti)

    ba = sub.add_parser("bo-action", help="the action on cacti")
    bas = ba.add_subparsers(dest="action", required=True)
    bae = bas.add_parser("eval")
    bae.add_argument("--element", required=True)
    bae.add_argument("--inputs", required=True)
    bae.add_argument("--trace", action="store_true",
                     help="emit the intermediate scaling maps")
    bae.set_defaults(func=cmd_bo_action)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help="suite name or 'all'")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--limit", type=int, default=6)
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--json", action="store_true",
                   help="full JSON report instead of a summary")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("figure", help="export figure data")
    f.add_argument("name", help="pentagon | hexagon | cact-composition")
    f.add_argument("--out", default=".")
    f.set_defaults(func=cmd_figure)

    wi = sub.add_parser("witness", help="recorded counterexamples")
    wi.add_argument("name", help="nonassoc")
    wi.set_defaults(func=cmd_witness)

    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
