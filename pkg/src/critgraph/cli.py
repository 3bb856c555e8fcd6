"""Command-line interface.  Graphs travel as graph6 on stdout, tables go to stderr.

Exit codes: 0 success, 1 failed verification, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable

from . import corpus, detect, tripod
from .canon import canonical_graph
from .coloring import colorable, is_k_critical, is_k_vertex_critical
from .enumerator import CRITICAL, FEWEST, FIRST, VERTEX_CRITICAL, EnumProfile, run
from .graph import Graph, GraphError, read_graph6_lines, to_graph6

OK, FAILED, USAGE = 0, 1, 2

PATTERNS = {"p6": detect.PATH(6), "p7": detect.PATH(7), "diamond": detect.DIAMOND,
            "c4": detect.CYCLE(4), "c5": detect.CYCLE(5)}


class UsageError(Exception):
    pass


def property_predicate(text: str) -> Callable[[Graph], bool]:
    """``p6free``, ``colorable:3``, ``critical:4`` and so on."""
    name, _, arg = text.lower().partition(":")
    simple = {
        "p6free": lambda g: not detect.contains_induced(g, detect.PATH(6)),
        "p7free": lambda g: not detect.contains_induced(g, detect.PATH(7)),
        "diamondfree": lambda g: not detect.contains_induced(g, detect.DIAMOND),
        "tripod-extension": tripod.is_tripod_extension,
        "thmg": tripod.check_thmG_assumptions,
    }
    if name in simple:
        if arg:
            raise UsageError(f"property {name} takes no argument")
        return simple[name]
    withk = {"colorable": colorable, "critical": is_k_critical,
             "vertex-critical": is_k_vertex_critical}
    if name in withk:
        if not arg.isdigit() or int(arg) < 1:
            raise UsageError(f"property {name} needs a positive integer, e.g. {name}:4")
        k = int(arg)
        fn = withk[name]
        return lambda g: fn(g, k)
    raise UsageError(f"unknown property {text!r}")


def _pattern(text: str) -> detect.Pattern:
    try:
        return PATTERNS[text.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError("choose from P6, P7, diamond, C4, C5") from None


def _read_graphs(path: str | None) -> list[Graph]:
    if path is None or path == "-":
        return list(read_graph6_lines(sys.stdin))
    with open(path, encoding="ascii") as fh:
        return list(read_graph6_lines(fh))


def _emit(lines) -> None:
    for line in lines:
        sys.stdout.write(line + "\n")
    sys.stdout.flush()


def _table(title: str, columns: list[str], rows) -> None:
    print(title, file=sys.stderr)
    print("\t".join(columns), file=sys.stderr)
    for row in rows:
        print("\t".join(str(c) for c in row), file=sys.stderr)


def _progress(enabled: bool):
    if not enabled:
        return None

    def show(n, count):
        print(f"n={n}\t{count}", file=sys.stderr, flush=True)

    return show


# commands --------------------------------------------------------------------------------


def cmd_enumerate(args) -> int:
    seeds = _read_graphs(args.seeds) if args.seeds else None
    profile = EnumProfile(k=args.k, forbidden=args.forbid or [detect.PATH(6)],
                          max_n=args.max_n, mode=args.mode, seeds=seeds,
                          selection=args.selection)
    report = run(profile, progress=_progress(args.progress), workers=args.workers)
    _emit(report.found)
    found = report.found_per_order
    orders = sorted(set(found) | set(report.generated_per_order))
    _table(f"# {profile.mode} graphs per order"
           + ("" if report.exhaustive else f" (capped at {profile.max_n})"),
           ["n", "generated", profile.mode],
           [(n, report.generated_per_order.get(n, 0), found.get(n, 0)) for n in orders])
    return OK


def cmd_check(args) -> int:
    pred = property_predicate(args.property)
    for g in _read_graphs(args.file):
        print("true" if pred(g) else "false")
    return OK


def cmd_tripod_gen(args) -> int:
    t = args.forbid.order if args.forbid.kind == "path" else None
    if t not in (6, 7):
        raise UsageError("tripod-gen supports --forbid P6 or P7")
    profile = tripod.TripodProfile(t=t, max_n=args.max_n, lookahead=args.lookahead)
    show = None
    if args.progress:
        def show(done, found):
            print(f"start tuple {done}\tfound {found}", file=sys.stderr, flush=True)
    report = tripod.tripod_gen(profile, progress=show)
    _emit(report.found)
    found = report.found_per_order
    orders = sorted(set(found) | set(report.nonprunable_per_order))
    _table(f"# 1-vertex extensions of tripods (capped at {profile.max_n})",
           ["n", "non-prunable", "critical"],
           [(n, report.nonprunable_per_order.get(n, 0), found.get(n, 0)) for n in orders])
    if report.other_critical:
        print(f"# {len(report.other_critical)} other critical graphs reached", file=sys.stderr)
    return OK


def cmd_tripod_check(args) -> int:
    for g in _read_graphs(args.file):
        hit = tripod.find_tripod_extension(g)
        if hit is None:
            print("false")
        else:
            x, tr = hit
            classes = " | ".join(" ".join(map(str, sorted(_bits(c)))) for c in tr.classes)
            print(f"true\tapex {x}\t{classes}")
    return OK


def _bits(mask: int):
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def cmd_construct(args) -> int:
    try:
        g = corpus.pokrovskiy(args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit([to_graph6(g)])
    return OK


def verify_fixture(g: Graph) -> list[str]:
    """Names of the invariants a fixture fails."""
    bad = []
    p6 = detect.PATH(6)
    if detect.contains_induced(g, p6):
        bad.append("p6free")
    if not is_k_critical(g, 4, [p6]):
        bad.append("critical:4")
    if not is_k_vertex_critical(g, 4):
        bad.append("vertex-critical:4")
    if g.min_degree() < 3:
        bad.append("min-degree")
    if canonical_graph(g) != canonical_graph(canonical_graph(g).relabel(range(g.n)[::-1])):
        bad.append("canon")
    return bad


def cmd_fixtures(args) -> int:
    fixtures = corpus.load_fixtures()
    status = OK
    counts: dict[int, int] = {}
    for name, g in fixtures:
        bad = verify_fixture(g)
        if bad:
            status = FAILED
            print(f"FAIL {name} n={g.n}: {', '.join(bad)}")
        else:
            counts[g.n] = counts.get(g.n, 0) + 1
            print(f"PASS {name} n={g.n}")
    rows = []
    for n in sorted(set(counts) | set(corpus.CRITICAL_P6_COUNTS)):
        want = corpus.CRITICAL_P6_COUNTS.get(n, 0)
        got = counts.get(n, 0)
        if got != want:
            status = FAILED
        rows.append((n, want, got, "ok" if got == want else "MISMATCH"))
    _table("# 4-critical P6-free graphs per order", ["n", "expected", "fixtures", ""], rows)
    return status


def cmd_oracle(args) -> int:
    if not 1 <= args.max_n <= corpus.MAX_ORACLE_ORDER:
        raise UsageError(f"--max-n must be in 1..{corpus.MAX_ORACLE_ORDER}")
    pred = property_predicate(args.filter) if args.filter else None
    _emit(to_graph6(canonical_graph(g)) for g in corpus.oracle_enumerate(args.max_n, pred))
    return OK


def cmd_canon(args) -> int:
    _emit(to_graph6(canonical_graph(g)) for g in _read_graphs(args.file))
    return OK


# parser ----------------------------------------------------------------------------------


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="critgraph", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="generate critical graphs in a class")
    p.add_argument("--k", type=_positive, default=4)
    p.add_argument("--forbid", type=_pattern, action="append",
                   help="P6, P7, diamond, C4 or C5; repeatable; one must be a path")
    p.add_argument("--max-n", type=_positive)
    p.add_argument("--mode", choices=[CRITICAL, VERTEX_CRITICAL], default=CRITICAL)
    p.add_argument("--seeds", metavar="FILE.g6")
    p.add_argument("--selection", choices=[FEWEST, FIRST], default=FEWEST)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="test a property of each input graph")
    p.add_argument("--property", required=True)
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("tripod-gen", help="generate 1-vertex extensions of tripods")
    p.add_argument("--forbid", type=_pattern, default=detect.PATH(6))
    p.add_argument("--max-n", type=_positive, default=10)
    p.add_argument("--lookahead", action="store_true")
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=cmd_tripod_gen)

    p = sub.add_parser("tripod-check", help="find an apex and tripod for each input graph")
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_tripod_check)

    p = sub.add_parser("construct", help="build a named family member")
    p.add_argument("family", choices=["gr"])
    p.add_argument("--r", type=_positive, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("fixtures", help="check the bundled fixture graphs")
    p.add_argument("action", choices=["verify"])
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("oracle", help="brute-force enumeration of small graphs")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--filter")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("canon", help="canonical graph6 of each input graph")
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_canon)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "check":
            property_predicate(args.property)
        if args.command == "oracle" and args.filter:
            property_predicate(args.filter)
        return args.func(args)
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"critgraph: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
