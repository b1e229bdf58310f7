"""Command-line front end.

Six subcommands: gamma, classify, recognize, enumerate, search, verify.
Graph-input commands accept exactly one of --g6, --edges, or --stdin-g6;
the stream mode emits one JSON object per input line.  Output is JSON by
default or tab-separated rows with --tsv, and is byte-identical across
repeated runs and across --jobs settings.

Exit codes: 0 success, 1 usage error, 2 input format error, 3 budget
exceeded, 4 verification violations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classify_all, report_to_dict
from .enumeration import (
    ENUMERATION_MAX,
    TREE_ENUMERATION_MAX,
    enumerate_connected,
    enumerate_trees,
)
from .graph import Graph, GraphError, bits, parse_edge_list
from .graph6 import parse_graph6, write_graph6
from .recognize import class_flags, flags_to_dict
from .search import (
    SEARCH_MAX,
    SIGNATURE_FILTERS,
    SIGNATURES,
    search_signature,
    witness_directory,
    write_witness_file,
)
from .solve import gamma_exact
from .verify import VERIFY_MAX, verify_corpus

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_VIOLATIONS = 4


def _fail_usage(message: str) -> int:
    print(f"usage error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _print_json_line(obj) -> None:
    print(json.dumps(obj))


def _add_input_flags(sub: argparse.ArgumentParser) -> None:
    grp = sub.add_mutually_exclusive_group(required=True)
    grp.add_argument("--g6", metavar="STRING", help="graph6 string")
    grp.add_argument("--edges", metavar="FILE", help="edge-list file")
    grp.add_argument(
        "--stdin-g6",
        action="store_true",
        help="read graph6 lines from stdin, one report per line",
    )


def _read_single(args) -> Graph:
    if args.g6 is not None:
        return parse_graph6(args.g6)
    with open(args.edges) as fh:
        return parse_edge_list(fh.read())


def _stdin_graphs():
    for line in sys.stdin:
        text = line.strip()
        if text:
            yield text, parse_graph6(text)


def _gamma_payload(g: Graph) -> dict:
    report = gamma_exact(g)
    witness = sorted(bits(report.witness)) if report.witness is not None else []
    return {"n": g.n, "gamma": report.gamma, "witness": witness}


def _gamma_tsv(payload: dict, prefix: str) -> str:
    witness = ",".join(str(v) for v in payload["witness"])
    return f"{prefix}\t{payload['gamma']}\t{witness}"


def _cmd_gamma(args) -> int:
    if args.stdin_g6:
        for text, g in _stdin_graphs():
            payload = _gamma_payload(g)
            if args.tsv:
                print(_gamma_tsv(payload, text))
            else:
                _print_json_line({"graph6": text, **payload})
        return EXIT_OK
    g = _read_single(args)
    payload = _gamma_payload(g)
    if args.tsv:
        print(_gamma_tsv(payload, str(g.n)))
    else:
        _print_json(payload)
    return EXIT_OK


def _classify_tsv_rows(payload: dict, prefix: str):
    for vc in payload["vertices"]:
        yield f"{prefix}\t{vc['id']}\t{vc['removal']}\t{vc['membership']}"


def _cmd_classify(args) -> int:
    if args.stdin_g6:
        for text, g in _stdin_graphs():
            payload = report_to_dict(classify_all(g))
            if args.tsv:
                for row in _classify_tsv_rows(payload, text):
                    print(row)
            else:
                _print_json_line({"graph6": text, "n": g.n, **payload})
        return EXIT_OK
    g = _read_single(args)
    payload = report_to_dict(classify_all(g))
    if args.tsv:
        for row in _classify_tsv_rows(payload, str(g.n)):
            print(row)
    else:
        _print_json({"n": g.n, **payload})
    return EXIT_OK


def _recognize_tsv(flags_dict: dict, prefix: str) -> str:
    cells = [prefix]
    for key, value in flags_dict.items():
        if key == "contains":
            cells.extend(f"{name}={int(hit)}" for name, hit in value.items())
        else:
            cells.append(f"{key}={int(value)}")
    return "\t".join(cells)


def _cmd_recognize(args) -> int:
    if args.stdin_g6:
        for text, g in _stdin_graphs():
            payload = flags_to_dict(class_flags(g))
            if args.tsv:
                print(_recognize_tsv(payload, text))
            else:
                _print_json_line({"graph6": text, "n": g.n, "classes": payload})
        return EXIT_OK
    g = _read_single(args)
    payload = flags_to_dict(class_flags(g))
    if args.tsv:
        print(_recognize_tsv(payload, str(g.n)))
    else:
        _print_json({"n": g.n, "classes": payload})
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    cap = TREE_ENUMERATION_MAX if args.trees else ENUMERATION_MAX
    if not 1 <= args.n <= cap:
        return _fail_usage(f"--n must be between 1 and {cap}")
    stream = enumerate_trees(args.n) if args.trees else enumerate_connected(args.n)
    if args.count_only:
        count = sum(1 for _ in stream)
        if args.tsv:
            print(f"{args.n}\t{count}")
        else:
            _print_json({"n": args.n, "count": count})
        return EXIT_OK
    for g in stream:
        text = write_graph6(g)
        if args.tsv:
            print(f"{args.n}\t{text}")
        else:
            _print_json_line({"n": args.n, "graph6": text})
    return EXIT_OK


def _cmd_search(args) -> int:
    if args.signature not in SIGNATURES:
        known = ", ".join(sorted(SIGNATURES))
        return _fail_usage(f"unknown signature {args.signature!r}; known: {known}")
    if not 1 <= args.nmax <= SEARCH_MAX:
        return _fail_usage(f"--nmax must be between 1 and {SEARCH_MAX}")
    if args.jobs < 1:
        return _fail_usage("--jobs must be at least 1")
    if args.limit is not None and args.limit < 1:
        return _fail_usage("--limit must be at least 1")
    sig = SIGNATURES[args.signature]
    result = search_signature(
        args.nmax,
        sig,
        class_filter=SIGNATURE_FILTERS.get(args.signature),
        stop_at_first_order=not args.full,
        max_graphs=args.limit,
        jobs=args.jobs,
    )
    payload = result.to_dict()
    if result.witnesses:
        directory = args.witness_dir or witness_directory()
        payload["witness_file"] = write_witness_file(result, directory)
    if args.tsv:
        for scan in payload["scans"]:
            print(
                "scan\t{n}\t{graphs_scanned}\t{witness_count}\t{complete}".format(
                    **scan
                )
            )
        for w in payload["witnesses"]:
            print(f"witness\t{w['n']}\t{w['graph6']}")
    else:
        _print_json(payload)
    return EXIT_BUDGET if result.budget_exceeded else EXIT_OK


def _cmd_verify(args) -> int:
    if not 1 <= args.nmax <= VERIFY_MAX:
        return _fail_usage(f"--nmax must be between 1 and {VERIFY_MAX}")
    if args.jobs < 1:
        return _fail_usage("--jobs must be at least 1")
    report = verify_corpus(args.nmax, jobs=args.jobs)
    payload = report.to_dict()
    if args.tsv:
        for check in payload["checks"]:
            status = "pass" if check["violations"] == 0 else "FAIL"
            print(
                f"{check['name']}\t{check['graphs_checked']}"
                f"\t{check['violations']}\t{status}"
            )
    else:
        _print_json(payload)
    return EXIT_OK if report.all_pass else EXIT_VIOLATIONS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domcore",
        description="Exact domination analysis for small graphs.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("gamma", help="domination number and one witness set")
    _add_input_flags(p)
    p.add_argument("--tsv", action="store_true", help="tab-separated output")
    p.set_defaults(func=_cmd_gamma)

    p = subs.add_parser("classify", help="per-vertex removal and membership classes")
    _add_input_flags(p)
    p.add_argument("--tsv", action="store_true", help="tab-separated output")
    p.set_defaults(func=_cmd_classify)

    p = subs.add_parser("recognize", help="graph class flags and pattern hits")
    _add_input_flags(p)
    p.add_argument("--tsv", action="store_true", help="tab-separated output")
    p.set_defaults(func=_cmd_recognize)

    p = subs.add_parser("enumerate", help="stream connected graphs of one order")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--trees", action="store_true", help="trees only")
    p.add_argument("--count-only", action="store_true", help="print the count")
    p.add_argument("--tsv", action="store_true", help="tab-separated output")
    p.set_defaults(func=_cmd_enumerate)

    p = subs.add_parser("search", help="hunt for vertex-partition signatures")
    p.add_argument("--signature", required=True, help="registered signature name")
    p.add_argument("--nmax", type=int, required=True, help="largest order scanned")
    p.add_argument(
        "--full",
        action="store_true",
        help="scan every order up to --nmax instead of stopping at the first hit",
    )
    p.add_argument("--limit", type=int, default=None, help="cap on graphs examined")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--witness-dir", default=None, help="directory for witness files")
    p.add_argument("--tsv", action="store_true", help="tab-separated output")
    p.set_defaults(func=_cmd_search)

    p = subs.add_parser("verify", help="run the invariant suite over all graphs")
    p.add_argument("--nmax", type=int, required=True, help="largest order verified")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--tsv", action="store_true", help="tab-separated output")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        return EXIT_OK
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


__all__ = ["main", "run"]
