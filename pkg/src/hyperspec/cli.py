"""Command-line front end: ``hyperspec <subcommand>``.

Hypergraphs are read and written in the ``{"k", "n", "edges"}`` JSON format;
a missing FILE argument or ``-`` means stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verify as vf
from .canon import canonical_key
from .enumeration import EnumerationCapError, GenSpec, generate
from .families import PRESETS, FamilyError, FamilyParams, InfeasibleCase, build_family, preset
from .hypergraph import HypergraphError, loads
from .matching import matching_number
from .spectral import ConvergenceError, SolverConfig, principal_eigenpair
from .transforms import MoveSpec, SwitchSpec, move_edges, switch_edges

EXIT_ERROR = 1


def _read_graph(path: str | None):
    text = sys.stdin.read() if path in (None, "-") else Path(path).read_text()
    return loads(text)


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _solver(args) -> SolverConfig:
    return SolverConfig(tol=args.tol, max_iter=args.max_iter, shift=args.shift)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def cmd_family(args) -> int:
    if args.preset:
        if args.z is None:
            raise SystemExit("--preset needs --z")
        params = preset(args.preset, args.k, args.m, args.z)
    else:
        params = FamilyParams(args.k, args.m, args.f, args.r, args.s, args.t, args.w)
    _emit(json.dumps(build_family(params).to_dict()), args.out)
    return 0


def cmd_rho(args) -> int:
    pair = principal_eigenpair(_read_graph(args.file), _solver(args))
    _emit(pair.to_json(), args.out)
    return 0


def cmd_matching(args) -> int:
    _emit(json.dumps(matching_number(_read_graph(args.file)).to_dict()), args.out)
    return 0


def cmd_enumerate(args) -> int:
    spec = GenSpec(args.k, args.m, args.shape, args.max_cycle_len, args.cap)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        count = 0
        for h in generate(spec):
            (out / f"{canonical_key(h).hex()}.json").write_text(h.to_json() + "\n")
            count += 1
        print(count, file=sys.stderr)
    else:
        for h in generate(spec):
            print(h.to_json())
    return 0


def cmd_transform(args) -> int:
    h = _read_graph(args.file)
    if args.kind == "move":
        g = move_edges(h, MoveSpec(_ints(args.edges), _ints(args.from_), args.to))
    else:
        g = switch_edges(h, SwitchSpec(args.e, args.f, _ints(args.u1), _ints(args.v1)))
    _emit(g.to_json(), args.out)
    return 0


def _format_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in vf.sort_reports(reports)], indent=1)
    return vf.report_table(reports, fmt)


def cmd_verify(args) -> int:
    cfg = _solver(args)
    zs = [args.z] if args.z is not None else vf.feasible_cases(args.k, args.m)
    modes = ["atleast", "exact"] if args.mode == "both" else [args.mode]
    reports = [vf.verify_theorem(args.k, args.m, z, mode, cfg, cap=args.cap, jobs=args.jobs)
               for z in zs for mode in modes]
    _emit(_format_reports(reports, args.format), args.out)
    return vf.exit_code(reports)


def cmd_report(args) -> int:
    reports = []
    for path in args.files:
        data = json.loads(sys.stdin.read() if path == "-" else Path(path).read_text())
        if isinstance(data, dict):
            data = [data]
        reports.extend(vf.VerifyReport.from_dict(d) for d in data)
    _emit(_format_reports(reports, args.format), args.out)
    return vf.exit_code(reports)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def solver_flags(p):
        p.add_argument("--tol", type=float, default=1e-10)
        p.add_argument("--max-iter", type=int, default=1_000_000)
        p.add_argument("--shift", type=float, default=1.0)

    p = sub.add_parser("family", help="build U(n,k;f;r,s;t,w) or a G1-G6 preset")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--preset", choices=PRESETS)
    p.add_argument("--z", type=int)
    for name in "frstw":
        p.add_argument(f"--{name}", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("rho", help="spectral radius and principal eigenvector")
    p.add_argument("file", nargs="?")
    solver_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("matching", help="matching number with a witness")
    p.add_argument("file", nargs="?")
    p.add_argument("--out")
    p.set_defaults(func=cmd_matching)

    p = sub.add_parser("enumerate", help="all unicyclic hypergraphs (or supertrees) up to isomorphism")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--shape", choices=("unicyclic", "supertree"), default="unicyclic")
    p.add_argument("--max-cycle-len", type=int)
    p.add_argument("--cap", type=int, default=1_000_000)
    p.add_argument("--out", help="directory; one JSON file per class named by canonical key")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("transform", help="edge moving / edge switching")
    tsub = p.add_subparsers(dest="kind", required=True)
    mv = tsub.add_parser("move")
    mv.add_argument("--edges", required=True)
    mv.add_argument("--from", dest="from_", required=True)
    mv.add_argument("--to", type=int, required=True)
    sw = tsub.add_parser("switch")
    sw.add_argument("--e", type=int, required=True)
    sw.add_argument("--f", type=int, required=True)
    sw.add_argument("--u1", required=True)
    sw.add_argument("--v1", required=True)
    for q in (mv, sw):
        q.add_argument("file", nargs="?")
        q.add_argument("--out")
        q.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="exhaustive check of the extremal families")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--z", type=int, help="default: every z with a predicted family")
    p.add_argument("--mode", choices=("atleast", "exact", "both"), default="both")
    solver_flags(p)
    p.add_argument("--cap", type=int, default=1_000_000)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="tabulate saved verify reports")
    p.add_argument("files", nargs="+")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleCase as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return vf.EXIT_INFEASIBLE
    except (HypergraphError, FamilyError, EnumerationCapError, ConvergenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
