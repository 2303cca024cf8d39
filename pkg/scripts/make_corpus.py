"""Regenerate the bundled graph6 corpus of connected graphs on 1..7 vertices.

    python scripts/make_corpus.py [OUT]
"""

import sys
from pathlib import Path

from middleroman.corpus import atlas_graphs
from middleroman.graph import to_graph6

DEFAULT_OUT = Path(__file__).resolve().parent.parent / "src/middleroman/data/connected_n1_7.g6"


def main() -> None:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else DEFAULT_OUT
    graphs = atlas_graphs(1, 7, connected_only=True)
    out.write_text("".join(to_graph6(g) + "\n" for g in graphs))
    print(f"wrote {len(graphs)} graphs to {out}")


if __name__ == "__main__":
    main()
