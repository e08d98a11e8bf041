"""Command-line front end.

    qcg mpoly --lambda 1,0 --mu 3,0
    qcg qcg --n 2 --m 0 --level 1
    qcg paths --n 3 --m 2 --level 1 --end 1,0
    qcg spinon --target 0,0 --level 1 --depth 3
    qcg oracle tensor --n 2 --m 1
    qcg check appendix3

Every command accepts ``--json``. Exit status: 0 on success, 1 when a
regression check fails, 2 on bad arguments.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from . import golden
from .algebra import Weight, label, weyl_dim
from .fermionic import fermionic_M
from .fusion import UNRESTRICTED, conjecture1_check, enumerate_paths, parse_level, q_cg
from .oracle import affine_graded_branching, irrep_character, tensor_decomposition
from .spinon import GradedDecomposition, spinon_character


class UsageError(Exception):
    pass


def _weight(text: str) -> Weight:
    try:
        return Weight.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _dominant(text: str) -> Weight:
    w = _weight(text)
    if not w.dominant:
        raise argparse.ArgumentTypeError(f"{text} is not dominant")
    return w


def _level(text: str):
    try:
        return parse_level(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _count(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _level_json(level):
    return "inf" if level == UNRESTRICTED else level


def _table_rows(table) -> list[dict]:
    items = sorted(table.items(), key=lambda kv: (weyl_dim(kv[0]), kv[0]))
    return [{"label": label(w), "weight": [w.m1, w.m2], "polynomial": p.to_json(), "text": str(p)}
            for w, p in items]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = argparse.ArgumentParser(prog="qcg", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mpoly", parents=[common], help="fermionic q-multiplicity M_{lambda,mu}(q)")
    p.add_argument("--lambda", dest="lam", type=_dominant, required=True, metavar="M1,M2")
    p.add_argument("--mu", type=_dominant, required=True, metavar="N1,N2")

    p = sub.add_parser("qcg", parents=[common], help="crystal q-Clebsch-Gordan table")
    p.add_argument("--n", type=_count, required=True)
    p.add_argument("--m", type=_count, required=True)
    p.add_argument("--level", type=_level, default=UNRESTRICTED, help="positive integer or inf")

    p = sub.add_parser("paths", parents=[common], help="fusion paths with their energies")
    p.add_argument("--n", type=_count, required=True)
    p.add_argument("--m", type=_count, required=True)
    p.add_argument("--level", type=_level, default=UNRESTRICTED)
    p.add_argument("--end", type=_dominant, metavar="L1,L2")

    p = sub.add_parser("spinon", parents=[common], help="spinon character, graded by depth")
    p.add_argument("--target", type=_dominant, required=True, metavar="L1,L2")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--depth", type=_count, required=True)

    p = sub.add_parser("oracle", help="brute-force reference computations")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    o = osub.add_parser("tensor", parents=[common], help="decompose 4^n (x) 5^m")
    o.add_argument("--n", type=_count, required=True)
    o.add_argument("--m", type=_count, required=True)
    o = osub.add_parser("character", parents=[common], help="weight multiplicities of V(lambda)")
    o.add_argument("--lambda", dest="lam", type=_dominant, required=True, metavar="M1,M2")
    o = osub.add_parser("affine", parents=[common], help="graded branching of an integrable module")
    o.add_argument("--target", type=_dominant, required=True, metavar="L1,L2")
    o.add_argument("--level", type=int, required=True)
    o.add_argument("--depth", type=_count, required=True)

    p = sub.add_parser("check", help="regression suites")
    csub = p.add_subparsers(dest="suite", required=True)
    c = csub.add_parser("conjecture1", parents=[common], help="fermionic = unrestricted path polynomials")
    c.add_argument("--max", type=int, default=5, dest="max_particles")
    for name, text in (("appendix2", "level-1 restricted path tables"),
                       ("appendix3", "unrestricted q-Clebsch-Gordan tables"),
                       ("level1", "level-1 restricted q-Clebsch-Gordan tables"),
                       ("eq1", "graded content of the level-1 vacuum module")):
        csub.add_parser(name, parents=[common], help=text)
    return parser


def _dispatch(args) -> tuple[dict, object, list[str], int]:
    """Return (params, result, text lines, exit code) for the parsed command."""
    cmd = args.command
    if cmd == "mpoly":
        poly = fermionic_M(args.lam, args.mu)
        params = {"lambda": [args.lam.m1, args.lam.m2], "mu": [args.mu.m1, args.mu.m2]}
        return params, {"polynomial": poly.to_json(), "text": str(poly)}, [str(poly)], 0

    if cmd == "qcg":
        table = q_cg(args.n, args.m, args.level)
        rows = _table_rows(table)
        params = {"n": args.n, "m": args.m, "level": _level_json(args.level)}
        return params, rows, [f"{r['label']}: {r['text']}" for r in rows], 0

    if cmd == "paths":
        paths = enumerate_paths(args.n, args.m, args.level, args.end)
        params = {"n": args.n, "m": args.m, "level": _level_json(args.level),
                  "end": None if args.end is None else [args.end.m1, args.end.m2]}
        rows = [{"word": p.word, "energy": p.energy, "end": label(p.end)} for p in paths]
        lines = []
        current = None
        for p in paths:
            if args.end is None and p.end != current:
                current = p.end
                lines.append(f"# end {label(p.end)}")
            lines.append(str(p))
        return params, rows, lines, 0

    if cmd == "spinon":
        if args.target.level > args.level or args.level < 1:
            raise UsageError(f"target {args.target} does not fit at level {args.level}")
        dec = spinon_character(args.target, args.level, args.depth)
        params = {"target": [args.target.m1, args.target.m2], "level": args.level, "depth": args.depth}
        return params, dec.to_json(), dec.lines(), 0

    if cmd == "oracle":
        if args.oracle_command == "tensor":
            dec = tensor_decomposition(args.n, args.m)
            params = {"n": args.n, "m": args.m}
            rows = [{"label": label(w), "weight": [w.m1, w.m2], "multiplicity": k} for w, k in dec.items()]
            return params, rows, [f"{r['label']}: {r['multiplicity']}" for r in rows], 0
        if args.oracle_command == "character":
            table = irrep_character(args.lam)
            params = {"lambda": [args.lam.m1, args.lam.m2]}
            items = sorted(table.items(), reverse=True)
            rows = [{"weight": [w.m1, w.m2], "multiplicity": k} for w, k in items]
            return params, rows, [f"{w}: {k}" for w, k in items], 0
        if args.target.level > args.level or args.level < 1:
            raise UsageError(f"target {args.target} does not fit at level {args.level}")
        try:
            levels = affine_graded_branching(args.target, args.level, args.depth)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        dec = GradedDecomposition(args.depth, levels)
        params = {"target": [args.target.m1, args.target.m2], "level": args.level, "depth": args.depth}
        return params, dec.to_json(), dec.lines(), 0

    # check
    if args.suite == "conjecture1":
        if args.max_particles < 1:
            raise UsageError("--max must be at least 1")
        report = conjecture1_check(args.max_particles)
        rows = [{"n": c.n, "m": c.m, "lambda": label(c.lam), "crystal": str(c.crystal),
                 "fermionic": str(c.fermionic), "status": c.status}
                for c in report.cases if c.nontrivial]
        lines = [f"[{golden.format_content(r['n'], r['m'])}] {r['lambda']}: {r['crystal']} | {r['fermionic']} {r['status']}"
                 for r in rows]
        lines.append(f"{len(rows)} nonzero identities checked; verdict: {report.verdict}")
        result = {"cases": rows, "verdict": report.verdict}
        return {"max": args.max_particles}, result, lines, 0 if report.holds else 1

    runner = {"appendix2": golden.check_paths, "appendix3": golden.check_unrestricted,
              "level1": golden.check_level1, "eq1": golden.check_basic_module}[args.suite]
    res = runner()
    lines = [f"ok   {v}" for v in res.verified] + [f"FAIL {f}" for f in res.failures]
    lines.append(f"{res.name}: {len(res.verified)} verified, {len(res.failures)} failed")
    result = {"verified": res.verified, "failures": res.failures, "ok": res.ok}
    return {"golden_dir": str(golden.golden_dir())}, result, lines, 0 if res.ok else 1


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        params, result, lines, code = _dispatch(args)
    except UsageError as exc:
        print(f"qcg: error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        command = args.command
        sub = getattr(args, "oracle_command", None) or getattr(args, "suite", None)
        if sub:
            command = f"{command} {sub}"
        json.dump({"command": command, "params": params, "result": result}, out, ensure_ascii=False)
        out.write("\n")
    else:
        for line in lines:
            print(line, file=out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
