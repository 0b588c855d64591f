"""Command-line front end.

Subcommands: ``analyze`` (graph predicates and decompositions), ``ideal``
(cover/edge ideals and their powers), ``check-cl`` (componentwise linearity
with a certificate), ``construct`` (layered graphs and derived bipartite
subgraphs), ``gen`` (parameterized families), and ``verify`` (the suites).

Graphs come from edge-list files ("label1 label2" per line, '#' comments) or,
with --graph6, from graph6 strings one per line; "-" reads standard input.
Exit codes: 0 pass/true, 1 fail/false, 2 error, 3 undecided within budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decomp import (
    bg_family_vd_report,
    build_bg,
    build_gk,
    is_vertex_decomposable,
    is_w_graph,
    shedding_decomposition,
)
from .families import make_family
from .graph_io import from_edge_text, from_graph6, to_edge_text, to_graph6
from .graphs import (
    Graph,
    is_bipartite,
    is_chordal,
    is_connected,
    is_forest,
    is_simplicial_vertex,
)
from .ideals import (
    cover_ideal,
    edge_ideal,
    ideal_to_json,
    ideal_to_text,
    monomial_to_text,
    power,
    symbolic_power_via_gk,
    truncation,
)
from .resolution import (
    FIELDS,
    BudgetExceededError,
    has_linear_quotients,
    has_linear_resolution,
)
from .verify import run_suite, suite_names

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2
EXIT_UNKNOWN = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graphs(args) -> list[Graph]:
    text = _read_text(args.input)
    if args.graph6:
        return [from_graph6(line.strip()) for line in text.splitlines() if line.strip()]
    return [from_edge_text(text)]


def _load_single(args) -> Graph:
    graphs = _load_graphs(args)
    if len(graphs) != 1:
        raise ValueError(f"expected exactly one graph on input, got {len(graphs)}")
    return graphs[0]


def _emit(args, text: str, payload) -> None:
    sys.stdout.write(text)
    if getattr(args, "json", None):
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


# --- analyze --------------------------------------------------------------------


def _label_pairs(g: Graph) -> list[list[str]]:
    return sorted(sorted(pair) for pair in g.edge_labels())


def _analyze_record(g: Graph) -> dict:
    vd = is_vertex_decomposable(g)
    record = {
        "vertices": list(g.labels),
        "edges": _label_pairs(g),
        "connected": is_connected(g),
        "bipartite": is_bipartite(g),
        "chordal": is_chordal(g),
        "forest": is_forest(g),
        "simplicial_vertices": sorted(
            g.labels[v] for v in g.vertices() if is_simplicial_vertex(g, v)
        ),
        "vertex_decomposable": vd,
        "w_graph": is_w_graph(g),
    }
    if vd:
        decomposition = shedding_decomposition(g)
        b = build_bg(decomposition)
        family = bg_family_vd_report(g)
        record.update(
            {
                "shedding_order": [g.labels[v] for v in decomposition.shedding_order],
                "i_order": [g.labels[v] for v in decomposition.i_order],
                "bg_edges": _label_pairs(b),
                "bg_vertex_decomposable": is_vertex_decomposable(b),
                "bg_family_vd": family.verdict,
                "bg_family_witness": (
                    None
                    if family.witness is None
                    else sorted(g.labels[v] for v in family.witness)
                ),
            }
        )
    return record


def _format_record(record: dict) -> str:
    lines = []
    for key, value in record.items():
        if value is None:
            shown = "-"
        elif isinstance(value, list) and value and isinstance(value[0], list):
            shown = ", ".join("-".join(pair) for pair in value)
        elif isinstance(value, list):
            shown = ", ".join(value) if value else "(empty)"
        else:
            shown = str(value)
        lines.append(f"{key}: {shown}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    records = [_analyze_record(g) for g in _load_graphs(args)]
    text = "\n".join(_format_record(r) for r in records)
    _emit(args, text, records)
    return EXIT_PASS


# --- ideal ----------------------------------------------------------------------


def cmd_ideal(args) -> int:
    g = _load_single(args)
    if args.kind == "cover":
        ideal = cover_ideal(g)
    elif args.kind == "edge":
        ideal = edge_ideal(g)
    elif args.kind == "symbolic":
        ideal = symbolic_power_via_gk(g, args.k)
    else:
        ideal = power(cover_ideal(g), args.k)
    text = ideal_to_text(ideal)
    sys.stdout.write(text)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(ideal_to_json(ideal) + "\n")
    return EXIT_PASS


# --- check-cl -------------------------------------------------------------------


def _check_cl(ideal, field: str, method: str, budget: int | None, cap: int | None):
    """Return (verdict, trace): True/False when decided, None when undecided."""
    trace: list[str] = []
    if method in ("auto", "quotients"):
        lq = has_linear_quotients(ideal, budget)
        if lq.status == "found":
            order = ", ".join(
                monomial_to_text(ideal.gens[i], ideal.variables) for i in lq.order
            )
            trace.append(f"linear quotients order: {order}")
            return True, trace
        trace.append(f"linear quotients search: {lq.status}")
        if method == "quotients":
            return None, trace
    try:
        for d in range(ideal.min_degree(), ideal.max_degree() + 1):
            trunc = truncation(ideal, d)
            if cap is not None and len(trunc.gens) > cap:
                raise BudgetExceededError(
                    f"{len(trunc.gens)} generators in degree {d} exceed the cap {cap}"
                )
            linear = has_linear_resolution(trunc, field)
            trace.append(
                f"degree {d}: {'linear' if linear else 'not linear'} "
                f"({len(trunc.gens)} generators)"
            )
            if not linear:
                return False, trace
        return True, trace
    except BudgetExceededError as exc:
        trace.append(f"undecided: {exc}")
        return None, trace


def cmd_check_cl(args) -> int:
    g = _load_single(args)
    if args.power:
        ideal = power(cover_ideal(g), args.k)
    else:
        ideal = symbolic_power_via_gk(g, args.k)
    verdict, trace = _check_cl(ideal, args.field, args.method, args.budget, args.cap)
    word = {True: "componentwise linear", False: "not componentwise linear", None: "undecided"}
    text = "\n".join(trace + [word[verdict]]) + "\n"
    payload = {"k": args.k, "route": "power" if args.power else "symbolic",
               "verdict": verdict, "trace": trace}
    _emit(args, text, payload)
    if verdict is None:
        return EXIT_UNKNOWN
    return EXIT_PASS if verdict else EXIT_FAIL


# --- construct ------------------------------------------------------------------


def cmd_construct(args) -> int:
    g = _load_single(args)
    if args.what == "gk":
        out = build_gk(g, args.k).graph
    else:
        decomposition = shedding_decomposition(g)
        out = build_bg(decomposition)
        sys.stdout.write(
            "# shedding order: "
            + " ".join(g.labels[v] for v in decomposition.shedding_order)
            + "\n# isolated order: "
            + " ".join(g.labels[v] for v in decomposition.i_order)
            + "\n"
        )
    sys.stdout.write(to_graph6(out) + "\n" if args.graph6_out else to_edge_text(out))
    return EXIT_PASS


# --- gen ------------------------------------------------------------------------


def cmd_gen(args) -> int:
    g = make_family(args.family, args.params, args.seed)
    sys.stdout.write(to_graph6(g) + "\n" if args.graph6_out else to_edge_text(g))
    return EXIT_PASS


# --- verify ---------------------------------------------------------------------


def cmd_verify(args) -> int:
    report = run_suite(
        args.suite,
        max_n=args.max_n,
        max_k=args.max_k,
        field=args.field,
        seed=args.seed,
        budget=args.budget,
    )
    sys.stdout.write(report.summary_line() + "\n")
    for failure in report.failures:
        sys.stdout.write(f"  failure: {json.dumps(failure, sort_keys=True)}\n")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json(stable=True))
    return EXIT_PASS if report.ok else EXIT_FAIL


# --- parser ---------------------------------------------------------------------


def _add_input(sub) -> None:
    sub.add_argument("input", help="edge-list file, or - for standard input")
    sub.add_argument(
        "--graph6", action="store_true", help="input holds graph6 strings, one per line"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverlab",
        description="cover ideals of graphs: decompositions, powers, linearity",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="graph predicates and decomposition")
    _add_input(analyze)
    analyze.add_argument("--json", metavar="FILE", help="also write a JSON report")
    analyze.set_defaults(fn=cmd_analyze)

    ideal = commands.add_parser("ideal", help="print an ideal attached to a graph")
    _add_input(ideal)
    ideal.add_argument(
        "--kind", choices=("cover", "edge", "symbolic", "power"), default="cover"
    )
    ideal.add_argument("-k", type=int, default=1, help="power for symbolic/power kinds")
    ideal.add_argument("--json", metavar="FILE", help="also write the ideal as JSON")
    ideal.set_defaults(fn=cmd_ideal)

    check = commands.add_parser("check-cl", help="componentwise linearity verdict")
    _add_input(check)
    check.add_argument("-k", type=int, default=2)
    check.add_argument(
        "--power", action="store_true", help="use the ordinary power instead of the symbolic one"
    )
    check.add_argument("--method", choices=("auto", "betti", "quotients"), default="auto")
    check.add_argument("--field", choices=FIELDS, default="f2")
    check.add_argument("--budget", type=int, default=200_000)
    check.add_argument("--cap", type=int, default=None, help="generator cap per truncation")
    check.add_argument("--json", metavar="FILE", help="also write the verdict as JSON")
    check.set_defaults(fn=cmd_check_cl)

    construct = commands.add_parser("construct", help="derived graphs")
    construct.add_argument("what", choices=("gk", "bg"))
    _add_input(construct)
    construct.add_argument("-k", type=int, default=2, help="layer count for gk")
    construct.add_argument(
        "--graph6-out", action="store_true", help="emit graph6 instead of edge text"
    )
    construct.set_defaults(fn=cmd_construct)

    gen = commands.add_parser("gen", help="generate a parameterized family member")
    gen.add_argument(
        "family",
        help="path | cycle | complete | star-complete | n-clique | random-tree | random-graph",
    )
    gen.add_argument("params", nargs="*", help="family parameters")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument(
        "--graph6-out", action="store_true", help="emit graph6 instead of edge text"
    )
    gen.set_defaults(fn=cmd_gen)

    verify = commands.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=suite_names())
    verify.add_argument("--max-n", type=int, default=None)
    verify.add_argument("--max-k", type=int, default=None)
    verify.add_argument("--field", choices=FIELDS, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--budget", type=int, default=None)
    verify.add_argument("--json", metavar="FILE", help="also write the report as JSON")
    verify.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
