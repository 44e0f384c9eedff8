"""Command-line front end.

Subcommands mirror the library: spectra, construct, quotient, factor,
certify, replay, and search.  Output is JSON by default (one document per
input graph, deterministic for a fixed invocation) or plain text with
--format text.  Exit codes: 0 for pass/consistent results, 1 when a scan or
certification finds a counterexample, 2 for usage or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import corpus
from .certify import (
    barrier_comparison,
    certify_fractional_deleted,
    certify_fractional_factor,
    certify_id_factor_critical,
    certify_k_factor,
    odd_clique_merge_comparison,
    search_counterexamples,
)
from .factors import (
    TooLargeError,
    component_stats,
    edge_threshold,
    fractional_ab_factor,
    half_integral_feasible,
    hall_check,
    has_k_factor,
    is_fractional_ab_deleted,
    is_id_factor_critical,
    max_matching,
    tutte_violator,
    fractional_pm_violator,
)
from .graphs import (
    Graph,
    Graph6Error,
    barrier_graph,
    complete_graph,
    empty_graph,
    extremal_graph,
    from_edge_list,
    from_graph6,
    graph_stats,
    join_odd_cliques,
    to_graph6,
)
from .quotient import (
    NotEquitableError,
    extremal_quotient_matrix,
    perron_ratio_report,
    quotient_matrix,
    radius_threshold_report,
    verify_quotient_equality,
)
from .spectra import (
    DisconnectedGraphError,
    all_pairs_distances,
    distance_matrix,
    dq_matrix,
    full_spectrum,
    spectral_radius,
    transmission_report,
)

SPECTRAL_TOLERANCES = {"rayleigh_quotient_rel": 1e-12, "perron_agreement": 1e-8}


class UsageError(Exception):
    pass


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, sort_keys=True))
    else:
        for key, value in sorted(doc.items()):
            print(f"{key}: {value}")
        print()


def _load_graphs(args) -> list[Graph]:
    if args.graph6:
        return [from_graph6(args.graph6)]
    if args.input:
        with open(args.input) as fh:
            text = fh.read()
    elif args.stdin:
        text = sys.stdin.read()
    else:
        raise UsageError("provide a graph via --graph6, --input, or --stdin")
    stripped = [line for line in text.splitlines() if line.strip()]
    if stripped and any(" " in line.strip() or line.strip().isdigit() for line in stripped):
        return [from_edge_list(text)]
    return corpus.read_graph6_lines(text)


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_spectra(args) -> int:
    for g in _load_graphs(args):
        data = all_pairs_distances(g)
        lam = spectral_radius(distance_matrix(g))
        mu = spectral_radius(dq_matrix(g))
        bounds = transmission_report(g)
        if args.matrix and args.format == "text":
            for row in data.dist:
                print(" ".join(str(int(v)) for v in row))
            print()
        doc = {
            "graph6": to_graph6(g),
            "n": g.n,
            "edge_count": g.edge_count,
            "transmissions": list(data.transmissions),
            "wiener_index": data.sigma,
            "diameter": data.diameter,
            "distance_radius": lam.value,
            "distance_radius_residual": lam.residual,
            "dsl_radius": mu.value,
            "dsl_radius_residual": mu.residual,
            "two_wiener_over_n": bounds.two_wiener_over_n,
            "four_sigma_over_n": bounds.four_sigma_over_n,
            "transmission_regular": bounds.transmission_regular,
            "sigma_lower_bound": bounds.sigma_lower_bound,
            "complement_connected": bounds.complement_connected,
            "complement_sigma": bounds.complement_sigma,
            "tolerances": SPECTRAL_TOLERANCES,
        }
        if args.matrix and args.format == "json":
            doc["distance_matrix"] = [[int(v) for v in row] for row in data.dist]
            doc["dsl_matrix"] = [[int(v) for v in row] for row in dq_matrix(g)]
        if args.full_spectrum:
            doc["distance_spectrum"] = [float(v) for v in full_spectrum(distance_matrix(g))]
        _emit(doc, args.format)
    return 0


def _cmd_construct(args) -> int:
    if args.family == "extremal":
        g, layout = extremal_graph(args.n, args.r)
        extra = {"layout": list(layout.sizes)}
    elif args.family == "barrier":
        if args.s is None:
            raise UsageError("barrier family needs --s")
        g, layout = barrier_graph(args.n, args.r, args.s)
        extra = {"layout": list(layout.sizes)}
    elif args.family == "odd-cliques":
        if not args.parts:
            raise UsageError("odd-cliques family needs --parts")
        parts = [int(p) for p in args.parts.split(",")]
        g = join_odd_cliques(args.r, args.s if args.s is not None else 0, parts)
        extra = {"parts": parts}
    elif args.family == "complete":
        g, extra = complete_graph(args.n), {}
    elif args.family == "independent":
        g, extra = empty_graph(args.n), {}
    else:
        raise UsageError(f"unknown family {args.family!r}")
    if args.format == "json":
        stats = graph_stats(g)
        doc = {
            "family": args.family,
            "graph6": to_graph6(g),
            "n": g.n,
            "edge_count": g.edge_count,
            "connected": stats.connected,
            "min_degree": stats.min_degree,
            **extra,
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        print(to_graph6(g))
    return 0


def _cmd_quotient(args) -> int:
    quot = extremal_quotient_matrix(args.n, args.r)
    g, layout = extremal_graph(args.n, args.r)
    computed = quotient_matrix(distance_matrix(g), layout.blocks())
    equality = verify_quotient_equality(distance_matrix(g), layout.blocks())
    ratio = perron_ratio_report(args.n, args.r)
    threshold = radius_threshold_report(args.n, args.r) if args.n >= 7 * args.r + 4 else None
    doc = {
        "n": args.n,
        "r": args.r,
        "quotient": [[int(v) for v in row] for row in quot],
        "computed_matches": bool((computed.matrix == quot).all()),
        "equitable": computed.equitable,
        "perron_full": equality.perron_full,
        "perron_quotient": equality.perron_quotient,
        "perron_match": equality.perron_match,
        "quotient_eigenvalues": list(equality.quotient_eigenvalues),
        "eigen_containment": equality.eigen_containment,
        "ratio": ratio.ratio,
        "ratio_predicted": ratio.predicted,
        "ratio_ok": ratio.ok,
        "tolerances": {"perron": 1e-8, "containment": 1e-7, "ratio": 1e-8},
    }
    if threshold is not None:
        doc["threshold_applicable"] = threshold.applicable
        doc["threshold"] = threshold.threshold
        doc["row_sum_sufficient"] = threshold.row_sum_sufficient
        doc["radius_sufficient"] = threshold.radius_sufficient
    _emit(doc, args.format)
    return 0


def _cmd_factor(args) -> int:
    for g in _load_graphs(args):
        if args.oracle == "matching":
            witness = max_matching(g)
        elif args.oracle == "tutte":
            witness = tutte_violator(g)
        elif args.oracle == "fractional-pm":
            witness = fractional_pm_violator(g)
        elif args.oracle == "fractional":
            witness = fractional_ab_factor(g, args.a, args.b)
        elif args.oracle == "half-integral":
            witness = half_integral_feasible(g, args.a, args.b)
        elif args.oracle == "deleted":
            witness = is_fractional_ab_deleted(g, args.a, args.b)
        elif args.oracle == "hall":
            if not args.side_a:
                raise UsageError("hall oracle needs --side-a with comma-separated labels")
            side_a = [int(v) for v in args.side_a.split(",")]
            side_b = [v for v in range(g.n) if v not in set(side_a)]
            witness = hall_check(g, side_a, side_b)
        elif args.oracle == "kfactor":
            witness = has_k_factor(g, args.k)
        elif args.oracle == "id":
            witness = is_id_factor_critical(g)
        elif args.oracle == "components":
            stats = component_stats(g)
            _emit({"graph6": to_graph6(g), "components": stats.components,
                   "odd_components": stats.odd_components,
                   "isolated": stats.isolated}, args.format)
            continue
        else:
            raise UsageError(f"unknown oracle {args.oracle!r}")
        doc = {"graph6": to_graph6(g), **witness.to_json()}
        _emit(doc, args.format)
    return 0


def _cmd_threshold(args) -> int:
    report = edge_threshold(args.kind, args.n, args.a_or_k, args.b)
    doc = {
        "kind": report.kind,
        "n": report.n,
        "threshold": _fraction_str(report.threshold),
        "threshold_float": float(report.threshold),
        "strict": report.strict,
        "min_edge_count": report.min_edge_count,
        "min_degree_required": report.min_degree_required,
        "min_order": report.min_order,
        "parity_note": report.parity_note,
    }
    _emit(doc, args.format)
    return 0


def _cmd_certify(args) -> int:
    exit_code = 0
    for g in _load_graphs(args):
        if args.theorem == "id":
            report = certify_id_factor_critical(g, args.r, evaluate_conclusion=args.conclusion)
        elif args.theorem == "fractional":
            report = certify_fractional_factor(g, args.a, args.b, evaluate_conclusion=args.conclusion)
        elif args.theorem == "deleted":
            report = certify_fractional_deleted(g, args.a, args.b, evaluate_conclusion=args.conclusion)
        elif args.theorem == "kfactor":
            report = certify_k_factor(g, args.k, evaluate_conclusion=args.conclusion)
        else:
            raise UsageError(f"unknown theorem {args.theorem!r}")
        doc = {"graph6": to_graph6(g), **report.to_json()}
        _emit(doc, args.format)
        if report.verdict == "counterexample":
            exit_code = 1
    return exit_code


def _cmd_replay(args) -> int:
    report = barrier_comparison(args.n, args.r, args.s)
    _emit(report.to_json(), args.format)
    return 0


def _cmd_merge(args) -> int:
    parts = [int(p) for p in args.parts.split(",")]
    report = odd_clique_merge_comparison(args.s, parts)
    _emit(report.to_json(), args.format)
    return 0


def _cmd_search(args) -> int:
    if args.corpus.startswith("exhaustive:"):
        n = int(args.corpus.split(":")[1])
        graphs = corpus.connected_graphs(n)
    elif args.corpus.startswith("sampled:"):
        fields = args.corpus.split(":")
        if len(fields) != 4:
            raise UsageError("sampled corpus takes the form sampled:N:COUNT:SEED")
        graphs = corpus.sample_connected_graphs(int(fields[1]), int(fields[2]), int(fields[3]))
    elif args.input:
        with open(args.input) as fh:
            graphs = corpus.read_graph6_lines(fh.read())
    else:
        raise UsageError("provide --corpus exhaustive:N | sampled:N:COUNT:SEED or --input FILE")

    params = {}
    if args.theorem == "id":
        params["r"] = args.r
    elif args.theorem in ("fractional", "deleted"):
        params["a"], params["b"] = args.a, args.b
    elif args.theorem == "kfactor":
        params["k"] = args.k
    else:
        raise UsageError(f"unknown theorem {args.theorem!r}")
    theorem_key = {"id": "id", "fractional": "fractional",
                   "deleted": "deleted", "kfactor": "k_factor"}[args.theorem]

    emit_each = None
    if args.per_graph:
        def emit_each(g, report):
            print(json.dumps({"graph6": to_graph6(g), **report.to_json()}, sort_keys=True))

    report = search_counterexamples(graphs, theorem_key, params, on_report=emit_each)
    doc = {"corpus": args.corpus if not args.input else args.input, **report.to_json()}
    _emit(doc, args.format)
    return 1 if report.counterexamples else 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="inline graph6 string")
    p.add_argument("--input", help="file of graph6 lines or a whitespace edge list")
    p.add_argument("--stdin", action="store_true", help="read graphs from standard input")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distfactor",
        description="Distance-spectral factor conditions with exact combinatorial oracles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectra", help="distance data, radii, and lower bounds")
    _add_graph_source(p)
    _add_format(p)
    p.add_argument("--full-spectrum", action="store_true")
    p.add_argument("--matrix", action="store_true", help="include matrix dumps")
    p.set_defaults(func=_cmd_spectra)

    p = sub.add_parser("construct", help="build named graph families as graph6")
    p.add_argument("family", choices=("extremal", "barrier", "odd-cliques", "complete", "independent"))
    p.add_argument("-n", type=int, default=0)
    p.add_argument("-r", type=int, default=1)
    p.add_argument("-s", type=int, default=None)
    p.add_argument("--parts", help="comma-separated odd clique sizes")
    _add_format(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("quotient", help="extremal quotient matrix and its checks")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("factor", help="run a factor oracle, emitting the witness")
    p.add_argument("oracle", choices=("matching", "tutte", "hall", "fractional-pm", "fractional",
                                      "half-integral", "deleted", "kfactor", "id", "components"))
    _add_graph_source(p)
    _add_format(p)
    p.add_argument("-a", type=int, default=1)
    p.add_argument("-b", type=int, default=1)
    p.add_argument("-k", type=int, default=1)
    p.add_argument("--side-a", help="bipartition side for the hall oracle")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("threshold", help="edge-count threshold forcing a factor")
    p.add_argument("kind", choices=("fractional", "deleted", "k_factor"))
    p.add_argument("-n", type=int, required=True)
    p.add_argument("a_or_k", type=int)
    p.add_argument("-b", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("certify", help="evaluate a theorem on one or more graphs")
    p.add_argument("theorem", choices=("id", "fractional", "deleted", "kfactor"))
    _add_graph_source(p)
    _add_format(p)
    p.add_argument("-r", type=int, default=1)
    p.add_argument("-a", type=int, default=1)
    p.add_argument("-b", type=int, default=1)
    p.add_argument("-k", type=int, default=1)
    p.add_argument("--conclusion", choices=("auto", "always"), default="auto")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("replay", help="replay the widened-barrier radius comparison")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_replay)

    p = sub.add_parser("merge", help="odd-clique merge radius comparison")
    p.add_argument("-s", type=int, required=True)
    p.add_argument("--parts", required=True, help="comma-separated clique sizes")
    _add_format(p)
    p.set_defaults(func=_cmd_merge)

    p = sub.add_parser("search", help="scan a corpus for counterexamples")
    p.add_argument("theorem", choices=("id", "fractional", "deleted", "kfactor"))
    p.add_argument("--corpus", default="", help="exhaustive:N or sampled:N:COUNT:SEED")
    p.add_argument("--input", help="file of graph6 lines")
    p.add_argument("--per-graph", action="store_true", help="emit one JSON line per graph")
    _add_format(p)
    p.add_argument("-r", type=int, default=1)
    p.add_argument("-a", type=int, default=1)
    p.add_argument("-b", type=int, default=1)
    p.add_argument("-k", type=int, default=1)
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, Graph6Error, DisconnectedGraphError, NotEquitableError,
            TooLargeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
