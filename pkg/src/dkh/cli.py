"""Command-line front end.

Every subcommand reads one diagram (a Gauss code, ``--file`` or
``--fixture``) and prints either a human-readable table or, with
``--json``, a JSON document.  Exit status is 0 on success, 1 when a
computation fails and 2 on usage errors (bad arguments or a malformed
Gauss code).
"""
from __future__ import annotations

import argparse
import json
import sys

from .complex import LEE, STANDARD, build_complex, build_reduced, dump_complex
from .diagram import VirtualLinkDiagram, parse_gauss_code
from .errors import DiagramError, DKhError
from .fixtures import FIXTURES, fixture
from .homology import (BigradedAbelianGroup, bracket_oracle, dkh, jones, lee_summary,
                       rasmussen, reduced_dkh)
from .obstructions import report

__all__ = ["main", "run", "render_grid", "build_parser"]


class UsageError(Exception):
    pass


def _cell(free: int, torsion: tuple) -> str:
    parts = ([f"Z^{free}" if free > 1 else "Z"] if free else [])
    parts += [f"Z_{t}" for t in torsion]
    return "+".join(parts)


def render_grid(h: BigradedAbelianGroup) -> str:
    """Grid with homological degree ``i`` across and quantum degree ``j`` down.

    Rows run from the largest ``j`` to the smallest; every ``j`` in range
    gets a row so the picture keeps its vertical spacing.
    """
    if not h.groups:
        return "0"
    i_vals = range(min(i for i, _ in h.groups), max(i for i, _ in h.groups) + 1)
    j_vals = range(max(j for _, j in h.groups), min(j for _, j in h.groups) - 1, -1)
    cells = {k: _cell(*v) for k, v in h.groups.items()}
    width = max([len(c) for c in cells.values()] + [len(str(i)) for i in i_vals] + [1])
    lab = max(len(str(j)) for j in j_vals) + 2
    head = "j\\i".rjust(lab) + " | " + " ".join(str(i).rjust(width) for i in i_vals)
    lines = [head, "-" * len(head)]
    for j in j_vals:
        row = " ".join(cells.get((i, j), "").rjust(width) for i in i_vals)
        lines.append(str(j).rjust(lab) + " | " + row.rstrip())
    return "\n".join(lines)


# ------------------------------------------------------------------ input

def _diagram(args) -> VirtualLinkDiagram:
    given = [x is not None for x in (args.code, args.file, args.fixture)]
    if sum(given) != 1:
        raise UsageError("give exactly one of a Gauss code, --file or --fixture")
    if args.fixture is not None:
        if args.fixture not in FIXTURES:
            raise UsageError(f"unknown fixture {args.fixture!r}; "
                             f"choose from {', '.join(FIXTURES)}")
        return fixture(args.fixture)
    if args.file is not None:
        with open(args.file) as fh:
            text = fh.read().strip()
    else:
        text = args.code
    try:
        return parse_gauss_code(text)
    except DiagramError as e:
        raise UsageError(f"malformed Gauss code: {e}") from e


def _ring(args) -> str:
    return args.ring.upper()


def _emit(args, data, text: str) -> None:
    print(json.dumps(data, indent=2, sort_keys=True) if args.json else text)


def _maybe_dump(args, d, variant) -> None:
    if args.dump_complex:
        sys.stderr.write(dump_complex(build_complex(d, variant, args.max_crossings)))


# --------------------------------------------------------------- commands

def cmd_dkh(args) -> None:
    d = _diagram(args)
    _maybe_dump(args, d, STANDARD)
    h = dkh(d, _ring(args), args.max_crossings)
    _emit(args, h.to_json(), render_grid(h))


def cmd_lee(args) -> None:
    d = _diagram(args)
    _maybe_dump(args, d, LEE)
    lee = lee_summary(d, args.max_crossings)
    lines = [f"i={i}: rank {r}, s-levels "
             + ", ".join(f"{k}" + (f" (x{m})" if m > 1 else "")
                         for k, m in sorted(lee.levels[i].items(), reverse=True))
             for i, r in sorted(lee.ranks.items()) if r]
    _emit(args, lee.to_json(), "\n".join(lines) if lines else "0")


def cmd_rasmussen(args) -> None:
    d = _diagram(args)
    r = rasmussen(d, args.max_crossings)
    _emit(args, r.to_json(), f"s1 = {r.s1}\ns2 = {r.s2}")


def cmd_jones(args) -> None:
    d = _diagram(args)
    v = jones(d, args.max_crossings)
    data = {"invariant": "jones", "coefficients": v.to_dict()}
    text = f"V = {v!r}"
    if args.oracle:
        w = bracket_oracle(d, args.max_crossings)
        data["oracle"] = w.to_dict()
        data["agree"] = v == w
        text += f"\nbracket oracle = {w!r}\n" + ("agree" if v == w else "DISAGREE")
    _emit(args, data, text)
    if args.oracle and v != w:
        raise DKhError("the two Jones computations disagree")


def cmd_classify(args) -> None:
    d = _diagram(args)
    if args.json:
        print(json.dumps(report(d, args.max_crossings).to_json(), indent=2, sort_keys=True))
        return
    rep = report(d, args.max_crossings)
    for name, v in rep.verdicts.items():
        print(f"{name}: {v.status} ({v.reason})")


def cmd_reduced(args) -> None:
    d = _diagram(args)
    basepoints = None
    if args.basepoint:
        try:
            basepoints = [int(x) for x in args.basepoint.split(",")]
        except ValueError:
            raise UsageError(f"--basepoint wants comma-separated gaps, got {args.basepoint!r}")
    if args.dump_complex:
        sub, _ = build_reduced(d, basepoints, args.max_crossings)
        sys.stderr.write(dump_complex(sub))
    h = reduced_dkh(d, basepoints, _ring(args), args.max_crossings)
    _emit(args, h.to_json(), render_grid(h))


def cmd_cobordism(args) -> None:
    from .cobordism import induced_map_on_lee, parse_presentation
    with open(args.presentation) as fh:
        p = parse_presentation(fh.read())
    m = induced_map_on_lee(p, args.max_crossings)
    data = m.to_json()
    data["counts"] = p.counts()
    data["genus"] = p.genus()
    lines = [f"moves: {p.counts()}",
             f"shared degrees: {sorted(m.shared)}",
             f"filtration degree {m.filtration_degree} (expected >= {m.expected_degree})",
             "induced map: " + ("nonzero" if m.nonzero else "zero")]
    for label, row in zip(m.target_basis, m.matrix):
        lines.append(f"  {label}: " + " ".join(str(x) for x in row))
    _emit(args, data, "\n".join(lines))


def cmd_selftest(args) -> int:
    from .acceptance import run_all
    results = run_all(echo=None if args.json else print)
    if args.json:
        print(json.dumps([{"criterion": c.number, "title": c.title, "passed": c.passed,
                           "details": c.details} for c in results], indent=2))
    return 0 if all(c.passed for c in results) else 1


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--ring", choices=("z", "q"), default="z", type=str.lower)
    common.add_argument("--max-crossings", type=int, default=None, metavar="N")
    common.add_argument("--dump-complex", action="store_true",
                        help="write the chain complex to stderr")
    diagram = argparse.ArgumentParser(add_help=False)
    diagram.add_argument("code", nargs="?", help="signed Gauss code, e.g. 'O1- O2- U1- U2-'")
    diagram.add_argument("--file", help="read the Gauss code from a file")
    diagram.add_argument("--fixture", metavar="NAME", help=", ".join(FIXTURES))

    p = argparse.ArgumentParser(prog="dkh", description="Doubled Khovanov homology of virtual links.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, f, help_ in [("dkh", cmd_dkh, "doubled Khovanov homology"),
                           ("lee", cmd_lee, "doubled Lee homology ranks and s-levels"),
                           ("rasmussen", cmd_rasmussen, "doubled Rasmussen invariant of a knot"),
                           ("jones", cmd_jones, "Jones polynomial"),
                           ("classify", cmd_classify, "non-classicality and concordance checks"),
                           ("reduced", cmd_reduced, "reduced doubled Khovanov homology")]:
        sp = sub.add_parser(name, parents=[common, diagram], help=help_)
        sp.set_defaults(func=f)
        if name == "jones":
            sp.add_argument("--oracle", action="store_true",
                            help="also evaluate the bracket state sum and compare")
        if name == "reduced":
            sp.add_argument("--basepoint", metavar="A,B,...",
                            help="one marked gap per component")
    sp = sub.add_parser("cobordism", parents=[common], help="map induced on doubled Lee homology")
    sp.add_argument("presentation", help="presentation file")
    sp.set_defaults(func=cmd_cobordism)
    sp = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        rc = args.func(args)
    except UsageError as e:
        print(f"dkh: usage error: {e}", file=sys.stderr)
        return 2
    except (DKhError, OSError, ArithmeticError) as e:
        print(f"dkh: error: {e}", file=sys.stderr)
        return 1
    return rc or 0


def run(argv) -> int:
    """Run one command line (without the program name) and return the exit code."""
    return main(list(argv))


if __name__ == "__main__":
    sys.exit(main())
