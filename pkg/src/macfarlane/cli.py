"""Command-line driver: check / convert / orbit / domain / render.

Exit codes: 0 success, 2 argument or JSON parse error (argparse default),
3 precondition failure, 4 success with undecided-membership warnings.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import dirichlet, render
from .exactnum import format_quad, format_rat, rat
from .hypmodel import (
    HypPoint, KleinPoint, UHSPoint, from_klein, from_uhs, to_klein, to_uhs,
)
from .quatalg import AlgebraDesc, GroupElem, is_macfarlane

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_UNDECIDED = 4


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print("error: cannot read %s: %s" % (path, exc), file=sys.stderr)
        sys.exit(EXIT_PARSE)


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_check(args):
    obj = _load_json(args.input)
    verdict = is_macfarlane(int(obj["d"]), rat(obj["a"]), rat(obj["b"]))
    doc = {"status": verdict.status}
    if verdict.desc is not None:
        doc["desc"] = verdict.desc.to_json()
    if verdict.reason:
        doc["reason"] = verdict.reason
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def cmd_convert(args):
    obj = _load_json(args.input)
    desc = AlgebraDesc.from_json(obj["desc"])
    dim = int(obj.get("dim", 3))
    src, dst = obj["from"], obj["to"]
    pt = obj["point"]
    if src == "hyperboloid":
        p = HypPoint.from_json(pt, desc, dim)
    elif src == "klein":
        k = KleinPoint(rat(pt["k1"]), rat(pt["k2"]), rat(pt.get("k3", 0)))
        p = from_klein(k, desc, dim)
    elif src == "uhs":
        p = from_uhs(UHSPoint(pt["u"], pt["v"], pt["h"]), desc, dim)
    else:
        raise ValueError("unknown source model %r" % src)
    if dst == "hyperboloid":
        doc = p.to_json()
    elif dst == "klein":
        k = to_klein(p)
        doc = {"k1": format_rat(k.k1), "k2": format_rat(k.k2), "k3": format_rat(k.k3)}
    elif dst == "uhs":
        u = to_uhs(p)
        doc = {"u": format_quad(u.u), "v": format_quad(u.v), "h": format_quad(u.h)}
    else:
        raise ValueError("unknown target model %r" % dst)
    _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_OK


def _run_domain(args):
    group = dirichlet.GroupInput.load(args.input)
    state = dirichlet.compute_domain(group, args.max_trace, args.bfs_depth)
    return group, state


def _center_check(group, depth):
    ident = GroupElem.identity(group.desc)
    for w in group.ball(depth):
        if w != ident and w.q * w.q.dagger() == ident.q:
            return False
    return True


def _ledger_table(rows):
    lines = ["trace  quaternion                     slope        orbit  dup"]
    for r in rows:
        q = r["quaternion"]
        qs = "%s+%si+%sj+%sz'" % (q["w"], q["x"], q["y"], q["zp"])
        lines.append(
            "%-6s %-30s %-12s %-6s %s"
            % (r["trace"], qs, r["slope"], "yes" if r["in_orbit"] else "no",
               "dup" if r["slope_duplicate"] else "")
        )
    return "\n".join(lines) + "\n"


def cmd_orbit(args):
    group, state = _run_domain(args)
    rows = dirichlet.ledger_json(state)
    if args.format == "table":
        _emit(_ledger_table(rows), args.output)
    else:
        _emit(json.dumps(rows, indent=2) + "\n", args.output)
    return EXIT_UNDECIDED if state.undecided else EXIT_OK


def cmd_domain(args):
    group, state = _run_domain(args)
    if args.center_check and not _center_check(group, args.bfs_depth):
        print("error: center stabilizer is nontrivial", file=sys.stderr)
        return EXIT_PRECONDITION
    doc = dirichlet.state_json(state)
    if args.format == "svg":
        _emit(render.render_svg(doc, args.precision), args.output)
    elif args.format == "table":
        lines = ["status            trace  route     plane"]
        for h in doc["halfspaces"]:
            lines.append(
                "%-17s %-6s %-9s %s . k <= %s"
                % (h["status"], h["trace"], h["route"],
                   h["plane"]["coeffs"], h["plane"]["rhs"])
            )
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return EXIT_UNDECIDED if state.undecided else EXIT_OK


def cmd_render(args):
    doc = _load_json(args.input)
    _emit(render.render_svg(doc, args.precision), args.output)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="macfarlane",
        description="Exact quaternion-hyperboloid toolkit: algebra checks, "
                    "model conversion, orbit ledgers and Dirichlet domains.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, domainish=False):
        sp.add_argument("input", help="input JSON path")
        sp.add_argument("--output", default=None, help="write result here instead of stdout")
        if domainish:
            sp.add_argument("--max-trace", type=int, default=18, dest="max_trace")
            sp.add_argument("--bfs-depth", type=int, default=6, dest="bfs_depth")
            sp.add_argument("--format", choices=["json", "svg", "table"], default="json")
            sp.add_argument("--precision", type=int, default=4)
            sp.add_argument("--center-check", action="store_true", dest="center_check")

    common(sub.add_parser("check", help="Macfarlane predicate on a descriptor"))
    common(sub.add_parser("convert", help="map a point between models"))
    common(sub.add_parser("orbit", help="trace-shell ledger"), domainish=True)
    common(sub.add_parser("domain", help="compute a Dirichlet domain"), domainish=True)
    rp = sub.add_parser("render", help="SVG from a domain JSON")
    common(rp)
    rp.add_argument("--precision", type=int, default=4)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "max_trace", 3) < 3:
        print("error: --max-trace must be at least 3", file=sys.stderr)
        return EXIT_PRECONDITION
    if getattr(args, "precision", 1) < 1:
        print("error: --precision must be at least 1", file=sys.stderr)
        return EXIT_PRECONDITION
    handler = {
        "check": cmd_check, "convert": cmd_convert, "orbit": cmd_orbit,
        "domain": cmd_domain, "render": cmd_render,
    }[args.cmd]
    try:
        return handler(args)
    except (ValueError, KeyError, AssertionError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
