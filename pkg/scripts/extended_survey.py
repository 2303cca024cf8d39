"""Kim invariant and the equality characterization on every connected graph up to 7 vertices.

Goes one order past the acceptance run (which stops the characterization at 6).

    python scripts/extended_survey.py [--max-n 7] [--out survey.tsv]
"""

import argparse
import sys
import time
from collections import Counter

from middleroman.cli import survey_row
from middleroman.corpus import connected_graphs
from middleroman.graph import to_graph6


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--guard", type=int, default=28)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    start = time.perf_counter()
    rows, violations = [], []
    equal_by_n = Counter()
    total_by_n = Counter()
    for g in connected_graphs(args.max_n):
        row, problems = survey_row(g, ("kim", "theorem", "order"), args.guard)
        rows.append((to_graph6(g), row, problems))
        total_by_n[g.n] += 1
        equal_by_n[g.n] += row["equal"]
        if problems:
            violations.append((to_graph6(g), problems))

    if args.out:
        with open(args.out, "w") as fh:
            fh.write("graph6\tn\tm\tgamma_r_star\tgamma_pr_star\tequal\twitness\n")
            for code, r, _ in rows:
                fh.write(f"{code}\t{r['n']}\t{r['m']}\t{r['gamma_r_star']}\t"
                         f"{r['gamma_pr_star']}\t{r['equal']}\t{r['witness']}\n")

    print("n\tgraphs\tequal")
    for n in sorted(total_by_n):
        print(f"{n}\t{total_by_n[n]}\t{equal_by_n[n]}")
    print(f"violations: {len(violations)}  ({time.perf_counter() - start:.1f}s)")
    for code, problems in violations:
        print(f"  {code}: {'; '.join(problems)}")
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
