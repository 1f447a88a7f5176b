"""Command-line front end.

Exit codes: 0 path graph (or success), 1 not a path graph, 2 not chordal,
3 usage or input error, 4 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .chordal import NotChordalError, clique_separators, is_chordal, maximal_cliques
from .generators import MODELS, generate
from .graph import EdgeListError, SimpleGraph, connected_components, induced_subgraph, parse_edge_list, serialize_edge_list
from .oracle import CliqueCapError, oracle_is_path_graph
from .recognizer import NOT_CHORDAL, PATH_GRAPH, ForbiddenWitness, recognize, verify_certificate
from .selftest import SelftestConfig, run_all
from .separation import SeparatorError, build_profile, quotient_profile
from .templates import attachedness_graph

EXIT_PATH, EXIT_NOT_PATH, EXIT_NOT_CHORDAL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3, 4
EXIT_FOR = {PATH_GRAPH: EXIT_PATH, NOT_CHORDAL: EXIT_NOT_CHORDAL}

ENV_MAX_CLIQUES = "PATHGRAPHS_MAX_CLIQUES"
ENV_MAX_PARTS = "PATHGRAPHS_MAX_PARTS"

log = logging.getLogger("pathgraphs")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would read as "not chordal"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"{name} must be an integer, got {raw!r}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _read_graph(path: str) -> SimpleGraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_edge_list(text)


def _separators(G: SimpleGraph) -> list[tuple[SimpleGraph, frozenset[str]]]:
    out = []
    for comp in connected_components(G):
        H = induced_subgraph(G, comp)
        out += [(H, Q) for Q in clique_separators(H)]
    return out


def cmd_recognize(args) -> int:
    G = _read_graph(args.file)
    verdict = recognize(G, path_tree=True, max_oracle_cliques=args.max_cliques)
    print(f"verdict: {verdict.kind}")
    if verdict.hole is not None:
        print("hole: " + " - ".join(verdict.hole))
    for k, r in enumerate(verdict.separators):
        status = "ok" if r.ok else "FAILS"
        print(f"separator {k} {{{', '.join(sorted(r.separator))}}}: {len(r.profile.part_ids)} parts, {status}")
        if r.coloring is not None:
            print("  weak coloring: " + ", ".join(f"g{p}->{c}" for p, c in sorted(r.coloring.assignment.items())))
    w = verdict.witness
    if w is not None:
        if w.kind == "full_triple":
            a, b, c = w.triple.parts
            print(f"certificate: full antipodal triple g{a}, g{b}, g{c} at vertex {w.triple.witness_vertex}")
        else:
            emb = ", ".join(f"{t}=g{p}" for t, p in sorted(w.embedding.items()))
            print(f"certificate: {w.family} (parameter {w.param}) embedded as {emb}")
    if verdict.path_tree is not None:
        print("clique path tree:")
        sys.stdout.write("".join("  " + line + "\n" for line in verdict.path_tree.to_text().splitlines()))
    if args.certificate:
        print("--- machine ---")
        print(json.dumps(verdict.to_dict(), indent=2, sort_keys=True))
    if args.dot_dir:
        out = Path(args.dot_dir)
        out.mkdir(parents=True, exist_ok=True)
        for k, r in enumerate(verdict.separators):
            (out / f"separator_{k}.dot").write_text(r.profile.to_dot(f"separator_{k}"))
        if verdict.path_tree is not None:
            (out / "clique_path_tree.dot").write_text(verdict.path_tree.to_dot())
    return EXIT_FOR.get(verdict.kind, EXIT_NOT_PATH)


def cmd_verify(args) -> int:
    G = _read_graph(args.file)
    data = json.loads(Path(args.certificate).read_text())
    data = data.get("certificate", data)
    w = ForbiddenWitness.from_dict(data)
    H = next((H for H, Q in _separators(G) if Q == w.separator), None)
    if H is None:
        print("certificate separator is not a clique separator of the graph")
        return EXIT_NOT_PATH
    ok = verify_certificate(quotient_profile(build_profile(H, w.separator)), w)
    print("certificate verified" if ok else "certificate REJECTED")
    return EXIT_PATH if ok else EXIT_NOT_PATH


def cmd_oracle(args) -> int:
    G = _read_graph(args.file)
    chordal, hole = is_chordal(G)
    if not chordal:
        print("verdict: not_chordal\nhole: " + " - ".join(hole))
        return EXIT_NOT_CHORDAL
    res = oracle_is_path_graph(G, max_cliques=args.max_cliques)
    print(f"verdict: {'path_graph' if res else 'not_path_graph'} ({res.trees_examined} trees, {res.method})")
    if res.realization is not None:
        sys.stdout.write(res.realization.to_text())
    return EXIT_PATH if res else EXIT_NOT_PATH


def cmd_attachedness(args) -> int:
    G = _read_graph(args.file)
    chordal, hole = is_chordal(G)
    if not chordal:
        raise NotChordalError(hole)
    seps = _separators(G)
    if not 0 <= args.separator < len(seps):
        print(f"separator index {args.separator} out of range; the graph has {len(seps)}", file=sys.stderr)
        return EXIT_USAGE
    H, Q = seps[args.separator]
    p = build_profile(H, Q, maximal_cliques(H))
    if args.quotient:
        p = quotient_profile(p)
    if args.format == "dot":
        sys.stdout.write(p.to_dot(f"separator_{args.separator}"))
    elif args.format == "colored-dot":
        sys.stdout.write(attachedness_graph(p).to_dot(f"separator_{args.separator}"))
    else:
        print(json.dumps(p.to_dict(), indent=2))
    return 0


def cmd_gen(args) -> int:
    sys.stdout.write(serialize_edge_list(generate(args.model, args.n, args.seed)))
    return 0


def cmd_selftest(args) -> int:
    cfg = SelftestConfig(max_n=args.max_n, samples=args.samples, seed=args.seed,
                         max_cliques=args.max_cliques, max_parts=args.max_parts)
    if args.profiles is not None:
        cfg.profiles = args.profiles
    only = set(args.only) if args.only else None
    results = run_all(cfg, only=only, report=lambda r: print(r.line(), flush=True))
    for r in results:
        for msg in r.failures:
            print(f"  criterion {r.number}: {msg}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    max_cliques = _env_int(ENV_MAX_CLIQUES, 9)
    max_parts = _env_int(ENV_MAX_PARTS, 12)
    parser = _Parser(prog="pathgraphs", description="Path-graph recognition with certificates.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("recognize", help="decide membership and print evidence")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.add_argument("--certificate", action="store_true", help="also print the JSON machine block")
    p.add_argument("--dot-dir", help="write one DOT file per separator here")
    p.add_argument("--max-cliques", type=_positive, default=max_cliques,
                   help=f"clique cap for the path-tree oracle (env {ENV_MAX_CLIQUES})")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("verify", help="re-check a machine certificate against a graph")
    p.add_argument("file")
    p.add_argument("certificate", help="JSON written by recognize --certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force decision over clique trees")
    p.add_argument("file")
    p.add_argument("--max-cliques", type=_positive, default=max_cliques)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("attachedness", help="export one separator's attachedness graph")
    p.add_argument("file")
    p.add_argument("--separator", type=int, required=True, help="0-based index, in recognize's order")
    p.add_argument("--format", choices=("dot", "colored-dot", "json"), default="dot")
    p.add_argument("--quotient", action="store_true", help="merge mutually dominant parts first")
    p.set_defaults(func=cmd_attachedness)

    p = sub.add_parser("gen", help="print a random graph as an edge list")
    p.add_argument("--model", choices=MODELS, default="subtree")
    p.add_argument("--n", type=_positive, required=True, help="host tree size; also the vertex count")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("selftest", help="run the acceptance suites")
    p.add_argument("--max-n", type=int, default=6, help="exhaustive labeled graphs on this many vertices")
    p.add_argument("--samples", type=int, default=10_000, help="subtree-model graphs for the differential suite")
    p.add_argument("--profiles", type=int, help="random profiles for the coloring suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--only", type=int, nargs="+", choices=range(1, 9), metavar="K")
    p.add_argument("--max-cliques", type=_positive, default=max_cliques)
    p.add_argument("--max-parts", type=_positive, default=max_parts)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser()
    except SystemExit as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (OSError, EdgeListError, json.JSONDecodeError, KeyError, SeparatorError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotChordalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CHORDAL
    except CliqueCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
