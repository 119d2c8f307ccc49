"""Command-line surface: decide arrowing, run searches, stream generated
classes, verify the bundled fixtures, compute the small extremal numbers,
and canonicalize graph6 lines.

Exit codes: 0 success (for decide: arrows), 1 = decide verdict "does not
arrow", 2 = error (bad input, infeasible request, failed verification),
3 = search paused by wall-clock budget (checkpoint written).
Machine-readable output goes to stdout; diagnostics and progress to stderr.
"""

from __future__ import annotations

import argparse
import logging
import os
import re
import sys
from pathlib import Path

from .arrowing import (
    check_certificate,
    decide_arrowing_cycle,
    decide_arrowing_path,
    minimize_certificate,
    serialize_certificate,
)
from .canon import canonical_form
from .fixtures import (
    build_f7,
    build_fn_even,
    build_named,
    fixture_table,
    fn_even_path_host,
    refutation_certificate,
    turan_ex,
    verify_fixture,
    verify_lemma1,
)
from .generate import GenSpec, generate
from .graph6 import parse_graph6, stream_graphs, write_graph6
from .graphs import Graph, complement, contains_c4
from .search import (
    MAX_N,
    MIN_N,
    BudgetExhausted,
    compute_r_star,
    serialize_report,
    write_report,
)

EXIT_OK = 0
EXIT_NO_ARROW = 1
EXIT_ERROR = 2
EXIT_BUDGET = 3


def _parse_budget(text: str) -> float:
    """Wall-clock budget like '90s', '15m', '4h', or plain seconds."""
    match = re.fullmatch(r"(\d+(?:\.\d+)?)([smh]?)", text.strip())
    if not match:
        raise argparse.ArgumentTypeError(
            f"budget {text!r} is not <number>[s|m|h]")
    value = float(match.group(1))
    return value * {"": 1, "s": 1, "m": 60, "h": 3600}[match.group(2)]


def _graphs_from_input(value: str):
    """The argument is either a literal graph6 line or a path to a file of
    graph6 lines."""
    if os.path.exists(value):
        yield from stream_graphs(value)
    else:
        yield parse_graph6(value)


def cmd_decide(args) -> int:
    worst = EXIT_OK
    target_n = args.n
    for g in _graphs_from_input(args.graph):
        n = target_n if target_n is not None else g.order
        if args.target == "cycle":
            result = decide_arrowing_cycle(g, n, mode=args.mode)
        else:
            result = decide_arrowing_path(g, n, mode=args.mode)
        if result.arrows:
            print(f"arrows {write_graph6(g)}")
        else:
            cert = minimize_certificate(g, result.certificate)
            print(f"does-not-arrow {serialize_certificate(g, cert)}")
            worst = max(worst, EXIT_NO_ARROW)
    return worst


def cmd_search(args) -> int:
    source = args.source
    if source is None:
        if args.ingest is not None:
            source = "ingest"
        elif args.n >= 11 and not args.force_gen:
            print(f"n={args.n} needs --ingest FILE_OR_DIR (or --force-gen "
                  "to generate candidates in-process, which takes hours)",
                  file=sys.stderr)
            return EXIT_ERROR
        else:
            source = "generator"
    try:
        report = compute_r_star(
            args.n, mode=args.mode, source=source, ingest_path=args.ingest,
            workers=args.workers, budget_seconds=args.budget,
            checkpoint_path=args.checkpoint, chunk_size=args.chunk_size)
    except BudgetExhausted as exc:
        print(f"paused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    text = serialize_report(report)
    sys.stdout.write(text)
    if args.output:
        write_report(report, args.output)
        witness_path = Path(args.output).with_suffix(".witnesses.g6")
        witness_path.write_text("\n".join(report.witnesses) + "\n")
        print(f"report written to {args.output}, witnesses to {witness_path}",
              file=sys.stderr)
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = GenSpec(args.n, args.m, min_degree=args.min_deg,
                   require_biconnected=args.biconnected)
    count = 0
    for g in generate(spec):
        print(write_graph6(g))
        count += 1
    print(f"{count} classes", file=sys.stderr)
    return EXIT_OK


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


# check groups for verify-paper; aliases let shorthand like "thm5" work
_CHECK_GROUPS = ("fixtures", "turan", "even-family", "certificates",
                 "small-hosts")
_GROUP_ALIASES = {
    "thm1": "turan", "thm4": "small-hosts", "thm5": "even-family",
    "lemma1": "certificates", "table": "fixtures", "table1": "fixtures",
}


def _fail(name: str, detail: str) -> bool:
    print(f"FAIL {name}: {detail}")
    return False


def _pass(name: str, detail: str = "") -> bool:
    print(f"PASS {name}" + (f": {detail}" if detail else ""))
    return True


def _check_fixtures() -> bool:
    ok = True
    for f in fixture_table():
        failures = verify_fixture(f)
        if failures:
            ok = _fail(f"fixture {f.name}", "; ".join(failures))
        else:
            _pass(f"fixture {f.name}")
    return ok


def _check_turan() -> bool:
    value, extremal = turan_ex(7)
    if value != 9 or len(extremal) != 5:
        return _fail("turan", f"expected (9, 5 classes), got ({value}, "
                              f"{len(extremal)})")
    found = sorted(canonical_form(g) for g in extremal)
    named = sorted(canonical_form(build_named(f"G{i}")) for i in range(1, 6))
    if found != named:
        return _fail("turan", "extremal classes differ from the "
                              "transcribed five")
    return _pass("turan", "max C4-free edge count 9, five extremal classes "
                          "match")


def _check_even_family(orders) -> bool:
    ok = True
    for n in orders:
        if n % 2 or n < 12:
            ok = _fail(f"even-family n={n}", "order must be even and >= 12")
            continue
        g = build_fn_even(n)
        if g.edge_count != 2 * n - 2:
            ok = _fail(f"even-family n={n}",
                       f"expected {2 * n - 2} edges, got {g.edge_count}")
            continue
        if not decide_arrowing_cycle(g, n).arrows:
            ok = _fail(f"even-family n={n}", "construction does not arrow "
                                             "the cycle")
            continue
        p = fn_even_path_host(n)
        if p.edge_count != 2 * n - 3 or not decide_arrowing_path(p, n).arrows:
            ok = _fail(f"even-family n={n}", "path variant fails")
            continue
        ok = _pass(f"even-family n={n}",
                   f"{g.edge_count} edges arrow cycle; "
                   f"{p.edge_count} edges arrow path") and ok
    return ok


def _check_certificates() -> bool:
    ok = True
    for name in ("G4_bar", "G5_bar"):
        g = build_named(name)
        cert = refutation_certificate(name)
        if check_certificate(g, cert):
            ok = _pass(f"certificate {name}",
                       f"red {cert.red.sorted_edges()} refutes arrowing") and ok
        else:
            ok = _fail(f"certificate {name}", "transcribed matching does "
                                              "not refute")
    # a 12-edge host with a 4-cycle in the complement gets an automatic
    # chord certificate
    comp = Graph(7, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (0, 4),
                     (1, 5), (2, 6)])
    host = complement(comp)
    try:
        cert = verify_lemma1(host)
        ok = _pass("chord-certificate",
                   f"12-edge example refuted by red {cert.red.sorted_edges()}"
                   ) and ok
    except (ValueError, RuntimeError) as exc:
        ok = _fail("chord-certificate", str(exc))
    return ok


def _check_small_hosts() -> bool:
    """Exhaustive claim at order 7: no 12-edge candidate arrows; at 13
    edges the transcribed host does."""
    ok = True
    arrows_12 = [g for g in generate(GenSpec(7, 12))
                 if decide_arrowing_cycle(g, 7).arrows]
    if arrows_12:
        ok = _fail("small-hosts m=12", f"{len(arrows_12)} candidates arrow")
    else:
        ok = _pass("small-hosts m=12", "none of the candidates arrow") and ok
    f7 = build_f7()
    if not decide_arrowing_cycle(f7, 7).arrows:
        ok = _fail("small-hosts m=13", "the 13-edge host does not arrow")
    else:
        ok = _pass("small-hosts m=13", "13-edge host arrows") and ok
    # every 12-edge candidate whose complement holds a 4-cycle also gets a
    # constructive refutation
    for g in generate(GenSpec(7, 12)):
        if contains_c4(complement(g)):
            try:
                verify_lemma1(g)
            except (ValueError, RuntimeError) as exc:
                ok = _fail("small-hosts chord certificates", str(exc))
                break
    else:
        ok = _pass("small-hosts chord certificates",
                   "all 4-cycle-in-complement candidates refuted") and ok
    return ok


def cmd_verify_paper(args) -> int:
    groups = list(_CHECK_GROUPS)
    if args.only:
        requested = _GROUP_ALIASES.get(args.only, args.only)
        if requested not in _CHECK_GROUPS:
            print(f"unknown check group {args.only!r}; known: "
                  f"{', '.join(_CHECK_GROUPS)} "
                  f"(aliases: {', '.join(sorted(_GROUP_ALIASES))})",
                  file=sys.stderr)
            return EXIT_ERROR
        groups = [requested]
    orders = _parse_range(args.n) if args.n else [12, 14, 16, 18, 20]
    ok = True
    for group in groups:
        if group == "fixtures":
            ok = _check_fixtures() and ok
        elif group == "turan":
            ok = _check_turan() and ok
        elif group == "even-family":
            ok = _check_even_family([n for n in orders if n % 2 == 0]) and ok
        elif group == "certificates":
            ok = _check_certificates() and ok
        elif group == "small-hosts":
            ok = _check_small_hosts() and ok
    return EXIT_OK if ok else EXIT_ERROR


def cmd_turan(args) -> int:
    value, extremal = turan_ex(args.n)
    print(f"ex({args.n}) = {value}")
    for g in extremal:
        print(write_graph6(g))
    return EXIT_OK


def cmd_canon(args) -> int:
    for g in _graphs_from_input(args.graph):
        print(canonical_form(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p3ramsey",
        description="Arrowing decisions and minimum-edge searches for "
                    "(two-edge path, n-cycle) host graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide whether a graph arrows")
    p.add_argument("graph", help="graph6 line or path to a graph6 file")
    p.add_argument("--n", type=int, default=None,
                   help="cycle length (default: the graph's order)")
    p.add_argument("--mode", choices=("complete", "paper_window"),
                   default="complete")
    p.add_argument("--target", choices=("cycle", "path"), default="cycle")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("search", help="compute the minimum arrowing edge "
                                      "count and witness census")
    p.add_argument("--n", type=int, required=True,
                   help=f"host order ({MIN_N}..{MAX_N})")
    p.add_argument("--mode", choices=("complete", "paper_window"),
                   default="complete")
    p.add_argument("--source", choices=("generator", "ingest"), default=None,
                   help="candidate source (default: generator for n <= 10, "
                        "ingest required for n >= 11)")
    p.add_argument("--ingest", default=None,
                   help="graph6 file, or directory of n<order>_m<edges>.g6[.gz]")
    p.add_argument("--force-gen", action="store_true",
                   help="allow in-process generation for n >= 11")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--budget", type=_parse_budget, default=None,
                   help="wall-clock budget like 90s / 15m / 4h")
    p.add_argument("--checkpoint", default=None,
                   help="checkpoint file for resumable runs")
    p.add_argument("--chunk-size", type=int, default=2000)
    p.add_argument("--output", default=None, help="also write the report here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("gen", help="stream generated isomorphism classes "
                                   "as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--min-deg", type=int, default=3)
    p.add_argument("--biconnected", dest="biconnected", action="store_true",
                   default=True)
    p.add_argument("--no-biconnected", dest="biconnected",
                   action="store_false")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify-paper",
                       help="run every bundled fixture and theorem check")
    p.add_argument("--only", default=None,
                   help=f"restrict to one group: {', '.join(_CHECK_GROUPS)}")
    p.add_argument("--n", default=None,
                   help="order or range like 12..20 for the even-family "
                        "checks")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("turan", help="maximum 4-cycle-free edge count and "
                                     "extremal classes")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_turan)

    p = sub.add_parser("canon", help="canonical form of graph6 input")
    p.add_argument("graph", help="graph6 line or path to a graph6 file")
    p.set_defaults(func=cmd_canon)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
