"""γ_pR★ tables for K_n and K_{m,n}, for eyeballing patterns.

    python scripts/open_problem_tables.py [--complete-max 6] [--bipartite-max 8]
"""

import argparse

from middleroman.graph import family
from middleroman.middle import open_problem_table


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--complete-max", type=int, default=6)
    ap.add_argument("--bipartite-max", type=int, default=8)
    ap.add_argument("--guard", type=int, default=40)
    args = ap.parse_args()

    print("graph\tn\tm\tgamma_pr_star\tgamma_pr_star - n")
    for kind, top in (("complete", args.complete_max), ("complete_bipartite", args.bipartite_max)):
        for params, value in open_problem_table(kind, top, args.guard):
            g = family(kind, *params)
            name = "K_" + ",".join(map(str, params))
            print(f"{name}\t{g.n}\t{g.m}\t{value}\t{value - g.n}")


if __name__ == "__main__":
    main()
