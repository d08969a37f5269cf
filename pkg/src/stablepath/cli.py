"""Command-line interface.

Subcommands:

- ``gen``: emit a named family graph as an edge list.
- ``indpoly``: independence polynomial of a graph (text or JSON).
- ``spt`` / ``sigma-spt``: stable-path tree as DOT.
- ``dfs``: the depth-first spanning tree as an edge list.
- ``factors``: the factor decomposition with its product-identity status.
- ``realrooted``: Sturm verdict for a graph's polynomial or a JSON polynomial.
- ``verify``: run the verification suites.

Exit codes: 0 on success, 1 when a verification or certification check
fails, 2 on malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from .families import FAMILY_NAMES, generate
from .graph import Graph, format_edge_list, parse_edge_list
from .independence import independence_polynomial
from .pathtree import (
    DeepDecision,
    factor_decomposition,
    sigma_dfs_tree,
    sigma_stable_path_tree,
    stable_path_tree,
    to_dot,
    tree_indpoly,
)
from .poly import poly_from_json_dict, poly_to_json_dict, real_root_summary
from .verification import SUITE_NAMES, format_results, run_all, run_suite


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _read_graph(path: str) -> Graph:
    return parse_edge_list(_read_text(path))


def _decision(args, g: Graph) -> Optional[DeepDecision]:
    if getattr(args, "decision", "label-order") == "label-order":
        return None
    if args.edge_order == "lex":
        return DeepDecision.lexicographic(g)
    return DeepDecision.shuffled(g, random.Random(args.seed))


def _cmd_gen(args) -> int:
    fam = generate(args.family, args.n)
    comment = f"{fam.family} n={fam.n}"
    if fam.root is not None:
        comment += f" root={fam.root}"
    sys.stdout.write(format_edge_list(fam.graph, comments=(comment,)))
    return 0


def _cmd_indpoly(args) -> int:
    p = independence_polynomial(_read_graph(args.graph))
    if args.json:
        print(json.dumps(poly_to_json_dict(p)))
    else:
        print(p)
    return 0


def _cmd_spt(args) -> int:
    g = _read_graph(args.graph)
    t = stable_path_tree(g, args.root)
    sys.stdout.write(to_dot(t))
    return 0


def _cmd_sigma_spt(args) -> int:
    g = _read_graph(args.graph)
    t = sigma_stable_path_tree(g, args.root, _decision(args, g))
    sys.stdout.write(to_dot(t))
    return 0


def _cmd_dfs(args) -> int:
    g = _read_graph(args.graph)
    t = sigma_dfs_tree(g, args.root, _decision(args, g))
    tree = Graph.from_edges(
        t.edges_by_endpoint(), vertices=(p[-1] for p in t.paths)
    )
    sys.stdout.write(
        format_edge_list(tree, comments=(f"dfs spanning tree from {args.root}",))
    )
    return 0


def _cmd_factors(args) -> int:
    g = _read_graph(args.graph)
    sigma = _decision(args, g)
    factors = factor_decomposition(g, args.root, sigma)
    base = independence_polynomial(g)
    for subset, mult in factors:
        vertices = ",".join(str(v) for v in subset.labels)
        poly = independence_polynomial(subset.graph.induced_subgraph(subset))
        print(f"factor {{{vertices}}} multiplicity {mult}: {poly}")
    tree_poly = tree_indpoly(sigma_stable_path_tree(g, args.root, sigma))
    certified = factors.product_with(base) == tree_poly
    print(f"I(G) = {base}")
    print(f"I(T) = {tree_poly}")
    print(f"product identity: {'verified' if certified else 'FAILED'}")
    return 0 if certified else 1


def _cmd_realrooted(args) -> int:
    text = _read_text(args.input)
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        data = json.loads(text)
        if isinstance(data, list):
            data = {"coeffs": data}
        p = poly_from_json_dict(data)
        print(f"polynomial: {p}")
    else:
        g = parse_edge_list(text)
        p = independence_polynomial(g)
        print(f"I(G) = {p}")
    summary = real_root_summary(p)
    verdict = "real-rooted" if summary.real_rooted else "not real-rooted"
    print(
        f"{verdict}: degree {p.degree}, square-free degree "
        f"{summary.squarefree_degree}, distinct real roots "
        f"{summary.distinct_real_roots} (sign variations "
        f"{summary.variations_neg_inf} at -inf, "
        f"{summary.variations_pos_inf} at +inf)"
    )
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "all":
        results = run_all(ratio_count=args.count, seed=args.seed, n_max=args.n_max)
    elif args.suite == "ratio":
        results = run_suite("ratio", count=args.count, seed=args.seed)
    elif args.suite == "counterexample":
        results = run_suite("counterexample")
    elif args.suite == "families":
        kwargs = {}
        if args.n_max is not None:
            kwargs = dict(
                oracle_vertex_max=min(18, max(args.n_max, 9)),
                iso_nmax=min(14, args.n_max),
                identity_nmax=min(18, args.n_max),
                fib_product_nmax=min(12, args.n_max),
                sturm_nmax=min(18, args.n_max),
                fib_nmax=min(22, args.n_max),
                fib_exact_nmax=min(18, args.n_max),
            )
        results = run_suite("families", **kwargs)
    else:
        kwargs = {} if args.n_max is None else {"nmax": min(18, args.n_max)}
        results = run_suite("corollary", **kwargs)
    print(format_results(results))
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results)} checks, {failed} failed")
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablepath",
        description="Independence polynomials, stable-path trees, and exact "
        "certification of their identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a named family graph")
    gen.add_argument("--family", required=True, choices=FAMILY_NAMES)
    gen.add_argument("-n", type=int, default=9, help="family index")
    gen.set_defaults(func=_cmd_gen)

    indpoly = sub.add_parser("indpoly", help="independence polynomial of a graph")
    indpoly.add_argument("graph", help="edge-list file, or - for stdin")
    indpoly.add_argument("--json", action="store_true", help="emit JSON")
    indpoly.set_defaults(func=_cmd_indpoly)

    spt = sub.add_parser("spt", help="stable-path tree as DOT")
    spt.add_argument("graph", help="edge-list file, or - for stdin")
    spt.add_argument("--root", type=int, required=True)
    spt.set_defaults(func=_cmd_spt)

    def add_decision_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--decision",
            choices=("label-order", "edge-label"),
            default="label-order",
        )
        p.add_argument(
            "--edge-order",
            choices=("lex", "random"),
            default="lex",
            help="edge ranking for the edge-label decision",
        )
        p.add_argument("--seed", type=int, default=0, help="seed for random edge order")

    sspt = sub.add_parser("sigma-spt", help="deep-decision path tree as DOT")
    sspt.add_argument("graph", help="edge-list file, or - for stdin")
    sspt.add_argument("--root", type=int, required=True)
    add_decision_flags(sspt)
    sspt.set_defaults(func=_cmd_sigma_spt)

    dfs = sub.add_parser("dfs", help="depth-first spanning tree as edge list")
    dfs.add_argument("graph", help="edge-list file, or - for stdin")
    dfs.add_argument("--root", type=int, required=True)
    add_decision_flags(dfs)
    dfs.set_defaults(func=_cmd_dfs)

    factors = sub.add_parser("factors", help="factor decomposition of the path tree")
    factors.add_argument("graph", help="edge-list file, or - for stdin")
    factors.add_argument("--root", type=int, required=True)
    add_decision_flags(factors)
    factors.set_defaults(func=_cmd_factors)

    rr = sub.add_parser(
        "realrooted",
        help="Sturm verdict for a graph file or a JSON coefficient list",
    )
    rr.add_argument("input", help="edge-list or polynomial-JSON file, or - for stdin")
    rr.set_defaults(func=_cmd_realrooted)

    verify = sub.add_parser("verify", help="run the verification suites")
    verify.add_argument(
        "--suite", choices=SUITE_NAMES + ("all",), default="all"
    )
    verify.add_argument(
        "--count", type=int, default=500, help="random corpus size for the ratio suite"
    )
    verify.add_argument("--seed", type=int, default=20260814)
    verify.add_argument(
        "--n-max",
        "-n-max",
        dest="n_max",
        type=int,
        default=None,
        help="cap the family sizes (lowers runtime; caps never exceed defaults)",
    )
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
