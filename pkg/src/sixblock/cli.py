"""Command-line entry point: certify, verify, oracle, gen, decompose."""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .certify import (
    CertifyConfig,
    Colored,
    InputInvalid,
    InternalError,
    Outcome,
    Subdivided,
    certify,
    color_bound,
    verify_certificate,
)
from .decompose import decompose
from .graph import Digraph, generate_strong_digraph
from .io import ParseError, coloring_from_json, dumps, parse_digraph, to_dot, to_edge_list, digraph_to_json
from .outtree import finalize, spanning_out_tree
from .subdivision import DEFAULT_BUDGET, CyclePattern, Status, SubdivisionWitness, find_subdivision_bruteforce

EXIT_OK = 0
EXIT_INVALID_CERTIFICATE = 1
EXIT_INPUT = 2
EXIT_INCOMPLETE = 3
EXIT_INTERNAL = 4


class _Usage(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path: str) -> Digraph:
    try:
        return parse_digraph(_read(path))
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None
    except ParseError as exc:
        raise _Usage(f"{path}: {exc}") from None


def _root_id(d: Digraph, name: str | None) -> int:
    if name is None:
        return 0
    for v in range(d.n):
        if d.name(v) == name:
            return v
    raise _Usage(f"root {name!r} is not a vertex")


def cmd_certify(args: argparse.Namespace) -> int:
    d = _load_graph(args.input)
    config = CertifyConfig(root=_root_id(d, args.root), budget=args.budget, allow_antiparallel=args.allow_antiparallel)
    started = time.perf_counter()
    try:
        report = certify(d, args.k, config)
    except InputInvalid as exc:
        raise _Usage(str(exc)) from None
    doc = report.to_json(d)
    if args.timing:
        doc["seconds"] = round(time.perf_counter() - started, 6)
    _emit(dumps(doc), args.out)
    if report.outcome is Outcome.INCOMPLETE:
        print(f"incomplete: {report.message}", file=sys.stderr)
        return EXIT_INCOMPLETE
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    d = _load_graph(args.input)
    try:
        doc = json.loads(_read(args.certificate))
        k = int(doc["k"])
        cert_doc = doc["certificate"]
        if cert_doc is None:
            print("invalid: report carries no certificate", file=sys.stderr)
            return EXIT_INVALID_CERTIFICATE
        if cert_doc["type"] == "coloring":
            cert = Colored(coloring_from_json(d, cert_doc), int(cert_doc.get("bound", color_bound(k))))
        elif cert_doc["type"] == "subdivision":
            pattern = CyclePattern(tuple(int(b) for b in cert_doc["pattern"]))
            cert = Subdivided(SubdivisionWitness.from_json(d, cert_doc), pattern)
        else:
            raise ValueError(f"unknown certificate type {cert_doc['type']!r}")
    except OSError as exc:
        raise _Usage(f"cannot read {args.certificate}: {exc.strerror}") from None
    except (KeyError, TypeError, ValueError) as exc:
        raise _Usage(f"malformed certificate: {exc}") from None
    if k < 1:
        raise _Usage("certificate has k < 1")
    if verify_certificate(d, cert, k):
        print("valid")
        return EXIT_OK
    print("invalid", file=sys.stderr)
    return EXIT_INVALID_CERTIFICATE


def cmd_oracle(args: argparse.Namespace) -> int:
    d = _load_graph(args.input)
    try:
        pattern = CyclePattern.parse(args.pattern)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    res = find_subdivision_bruteforce(d, pattern, args.budget)
    doc = {"status": res.status.value, "expansions": res.expansions}
    if res.found:
        doc["witness"] = res.value.to_json(d, pattern)
    _emit(dumps(doc), None)
    return EXIT_INCOMPLETE if res.status is Status.BUDGET_EXCEEDED else EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        d = generate_strong_digraph(args.n, args.density, args.seed, oriented=args.oriented)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    if args.format == "dot":
        text = to_dot(d)
    elif args.format == "json":
        text = dumps(digraph_to_json(d))
    else:
        text = to_edge_list(d)
    _emit(text, args.out)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    d = _load_graph(args.input)
    if args.k < 1:
        raise _Usage("k must be at least 1")
    root = _root_id(d, args.root)
    try:
        t = finalize(d, spanning_out_tree(d, root))
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    dec = decompose(d, t, args.k)
    _emit(dumps({"schema": 1, "tree": t.to_json(d), **dec.to_json(d)}), None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sixblock", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("certify", help="colour within the bound or produce a subdivision witness")
    c.add_argument("--input", required=True, help="edge list or DOT file ('-' for stdin)")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--root", help="name of the out-tree root (default: first vertex)")
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
    c.add_argument("--allow-antiparallel", action="store_true")
    c.add_argument("--out", help="report path (default: stdout)")
    c.add_argument("--timing", action="store_true", help="add wall-clock seconds to the report")
    c.set_defaults(func=cmd_certify)

    v = sub.add_parser("verify", help="check a certify report against its digraph")
    v.add_argument("--input", required=True)
    v.add_argument("--certificate", required=True)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive subdivision search")
    o.add_argument("--input", required=True)
    o.add_argument("--pattern", required=True, help="comma-separated block lengths, e.g. 2,1,1,1,1,1")
    o.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("gen", help="random strong digraph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--density", type=float, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--oriented", action="store_true", help="at most one arc per vertex pair")
    g.add_argument("--format", choices=("edges", "dot", "json"), default="edges")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    dc = sub.add_parser("decompose", help="level classes and arc split as JSON")
    dc.add_argument("--input", required=True)
    dc.add_argument("--k", type=int, required=True)
    dc.add_argument("--root")
    dc.set_defaults(func=cmd_decompose)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
