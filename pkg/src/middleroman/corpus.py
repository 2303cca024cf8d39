"""Test corpora: the bundled graph6 enumeration and seeded random graphs."""

from __future__ import annotations

import random
from importlib import resources
from itertools import combinations

import networkx as nx

from .graph import Graph, components, disjoint_union, parse_graph6

CONNECTED_FILE = "connected_n1_7.g6"
EDGE_PROBABILITIES = (0.2, 0.5, 0.8)


def connected_graphs(max_n: int = 7) -> list[Graph]:
    """All connected graphs on 1..max_n vertices up to isomorphism (max_n <= 7).

    Counts per order are 1, 1, 2, 6, 21, 112, 853.
    """
    if max_n > 7:
        raise ValueError("bundled corpus stops at 7 vertices")
    text = resources.files("middleroman.data").joinpath(CONNECTED_FILE).read_text()
    graphs = [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]
    return [g for g in graphs if g.n <= max_n]


def atlas_graphs(min_n: int = 0, max_n: int = 7, connected_only: bool = False) -> list[Graph]:
    """Every graph in the networkx atlas (all graphs up to 7 vertices)."""
    out = []
    for h in nx.graph_atlas_g():
        k = h.number_of_nodes()
        if not (min_n <= k <= max_n):
            continue
        if connected_only and (k == 0 or not nx.is_connected(h)):
            continue
        out.append(Graph.from_edges(k, h.edges()))
    return out


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_graphs(count: int, max_n: int, seed: int, min_n: int = 1) -> list[Graph]:
    """Erdős–Rényi graphs; the i-th uses p = EDGE_PROBABILITIES[i % 3]."""
    rng = random.Random(seed)
    return [
        gnp(rng.randint(min_n, max_n), EDGE_PROBABILITIES[i % 3], rng)
        for i in range(count)
    ]


def random_trees(count: int, min_n: int, max_n: int, seed: int) -> list[Graph]:
    """Uniform labelled trees via random Prüfer sequences."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        seq = [rng.randrange(n) for _ in range(n - 2)]
        t = nx.from_prufer_sequence(seq)
        out.append(Graph.from_edges(n, t.edges()))
    return out


def random_disconnected(count: int, seed: int, max_part: int = 5) -> list[Graph]:
    """Disjoint unions of 2 or 3 random graphs; at least two components each."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        parts = [
            gnp(rng.randint(1, max_part), rng.choice(EDGE_PROBABILITIES), rng)
            for _ in range(rng.randint(2, 3))
        ]
        g = disjoint_union(*parts)
        if len(components(g)) >= 2:
            out.append(g)
    return out
