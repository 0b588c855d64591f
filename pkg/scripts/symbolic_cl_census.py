"""Census of small graphs: decomposability conditions vs linearity of powers.

For every connected vertex-decomposable graph up to --max-n vertices, record

  * whether it has the simplicial-remainder property (W column),
  * whether every closed-neighborhood remainder has a vertex-decomposable
    derived bipartite subgraph (family column),
  * componentwise linearity of the symbolic powers J^(2).. J^(max-k).

The family condition is necessary for all powers to be componentwise linear,
and sufficient when the W column holds.  Whether it is sufficient in general
is open; this census only records evidence and never fails.  Rows where the
family condition and the observed verdicts diverge are flagged with '!'.
"""

import argparse
import sys

from coverlab import (
    bg_family_vd,
    enumerate_graphs,
    is_componentwise_linear,
    is_vertex_decomposable,
    is_w_graph,
    symbolic_power_bruteforce,
    to_graph6,
)
from coverlab.resolution import BudgetExceededError


def cl_or_unknown(graph, k: int):
    try:
        return is_componentwise_linear(
            symbolic_power_bruteforce(graph, k), max_trunc_gens=350
        )
    except BudgetExceededError:
        return None


def mark(value) -> str:
    return {True: "yes", False: "no", None: "?"}[value]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--max-k", type=int, default=3)
    args = parser.parse_args(argv)

    header = ["graph6", "n", "W", "family"] + [
        f"CL(J^({k}))" for k in range(2, args.max_k + 1)
    ]
    widths = [8, 2, 4, 6] + [9] * (args.max_k - 1)
    print("  ".join(f"{h:<{w}}" for h, w in zip(header, widths)))

    rows = 0
    family_true = 0
    agreements = 0
    divergent = []
    for n in range(2, args.max_n + 1):
        for g in enumerate_graphs(n, connected=True):
            if not is_vertex_decomposable(g):
                continue
            rows += 1
            family = bg_family_vd(g)
            verdicts = [cl_or_unknown(g, k) for k in range(2, args.max_k + 1)]
            decided = [v for v in verdicts if v is not None]
            all_linear = bool(decided) and all(decided)
            agree = family == all_linear or len(decided) < len(verdicts)
            if family:
                family_true += 1
            if agree:
                agreements += 1
            else:
                divergent.append(to_graph6(g))
            cells = [to_graph6(g), str(n), mark(is_w_graph(g)), mark(family)]
            cells += [mark(v) for v in verdicts]
            flag = "" if agree else "  !"
            print("  ".join(f"{c:<{w}}" for c, w in zip(cells, widths)) + flag)

    print()
    print(
        f"{rows} decomposable graphs; family condition holds for {family_true}; "
        f"condition and verdicts agree on {agreements}"
    )
    if divergent:
        print("divergent instances: " + " ".join(divergent))
    else:
        print("no divergence between the family condition and the observed powers")
    return 0


if __name__ == "__main__":
    sys.exit(main())
