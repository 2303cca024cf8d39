"""Roman labelings of V(G) ∪ E(G) and the equality test for middle graphs.

A labeling of the vertices and edges of G is the same thing as a labeling of
the vertices of M(G): vertex ``v`` is M(G)-vertex ``v`` and canonical edge
``k`` is M(G)-vertex ``n + k``. The predicates below work directly on G so
they can be cross-checked against the generic ones applied to M(G).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, MiddleGraph, build_middle_graph, family
from .roman import (
    DomainError,
    Labeling,
    SolveResult,
    enumerate_optimal_two_sets,
    forced_completion,
    solve,
)

CLAIMS = (
    "no_vertex_labelled_2",
    "no_edge_labelled_1",
    "two_edges_have_zero_endpoints",
    "two_edges_only_meet_zero_edges",
    "two_edge_endpoints_see_only_ones",
    "rest_is_edgeless",
)


@dataclass(frozen=True)
class MixedLabeling:
    graph: Graph = field(repr=False)
    vertex_values: tuple[int, ...]
    edge_values: tuple[int, ...]
    weight: int = field(init=False)

    def __post_init__(self) -> None:
        vv = tuple(int(x) for x in self.vertex_values)
        ev = tuple(int(x) for x in self.edge_values)
        if len(vv) != self.graph.n or len(ev) != self.graph.m:
            raise DomainError(
                f"labeling covers {len(vv)} vertices / {len(ev)} edges, "
                f"graph has {self.graph.n} / {self.graph.m}"
            )
        if any(x not in (0, 1, 2) for x in vv + ev):
            raise DomainError("labels must be 0, 1 or 2")
        object.__setattr__(self, "vertex_values", vv)
        object.__setattr__(self, "edge_values", ev)
        object.__setattr__(self, "weight", sum(vv) + sum(ev))

    @classmethod
    def build(cls, g: Graph, vertices: dict[int, int] | None = None,
              edges: dict[tuple[int, int], int] | None = None) -> "MixedLabeling":
        """Labels default to 0; ``edges`` is keyed by endpoint pair in either order."""
        vv = [0] * g.n
        ev = [0] * g.m
        for v, x in (vertices or {}).items():
            vv[v] = x
        for (u, v), x in (edges or {}).items():
            if not g.has_edge(u, v):
                raise DomainError(f"({u}, {v}) is not an edge")
            ev[g.edge_index(u, v)] = x
        return cls(g, tuple(vv), tuple(ev))

    @property
    def values(self) -> tuple[int, ...]:
        """Flat labels in M(G) vertex order."""
        return self.vertex_values + self.edge_values

    def vertices_with(self, i: int) -> frozenset[int]:
        return frozenset(v for v, x in enumerate(self.vertex_values) if x == i)

    def edges_with(self, i: int) -> list[tuple[int, int]]:
        return [e for e, x in zip(self.graph.edges, self.edge_values) if x == i]

    def to_json(self) -> dict:
        return {
            "vertex_labels": list(self.vertex_values),
            "edge_labels": [
                {"u": u, "v": v, "label": x}
                for (u, v), x in zip(self.graph.edges, self.edge_values)
            ],
            "weight": self.weight,
        }


def to_middle_labeling(mg: MiddleGraph, f: MixedLabeling) -> Labeling:
    if f.graph != mg.source:
        raise DomainError("mixed labeling belongs to a different source graph")
    return Labeling(f.values)


def from_middle_labeling(mg: MiddleGraph, l: Labeling) -> MixedLabeling:
    n = mg.source.n
    if len(l) != mg.graph.n:
        raise DomainError(f"labeling has {len(l)} values, M(G) has {mg.graph.n} vertices")
    return MixedLabeling(mg.source, l.values[:n], l.values[n:])


def _twos_seen(g: Graph, f: MixedLabeling) -> tuple[list[int], list[int]]:
    """Count 2-labelled M(G)-neighbours of every vertex and every edge of G."""
    ev = f.edge_values
    vv = f.vertex_values
    incident = [[] for _ in range(g.n)]
    for k, (u, v) in enumerate(g.edges):
        incident[u].append(k)
        incident[v].append(k)
    at_vertex = [sum(1 for k in incident[v] if ev[k] == 2) for v in range(g.n)]
    at_edge = []
    for k, (u, v) in enumerate(g.edges):
        c = (vv[u] == 2) + (vv[v] == 2)
        # edges sharing an endpoint with k, excluding k itself
        c += at_vertex[u] + at_vertex[v] - 2 * (ev[k] == 2)
        at_edge.append(c)
    return at_vertex, at_edge


def _check(g: Graph, f: MixedLabeling) -> None:
    if f.graph != g:
        raise DomainError("mixed labeling belongs to a different graph")


def is_mrdf(g: Graph, f: MixedLabeling) -> bool:
    _check(g, f)
    at_vertex, at_edge = _twos_seen(g, f)
    return all(c >= 1 for x, c in zip(f.vertex_values, at_vertex) if x == 0) and all(
        c >= 1 for x, c in zip(f.edge_values, at_edge) if x == 0
    )


def is_pmrdf(g: Graph, f: MixedLabeling) -> bool:
    _check(g, f)
    at_vertex, at_edge = _twos_seen(g, f)
    return all(c == 1 for x, c in zip(f.vertex_values, at_vertex) if x == 0) and all(
        c == 1 for x, c in zip(f.edge_values, at_edge) if x == 0
    )


def _solve_star(g: Graph, perfect: bool, guard: int | None) -> SolveResult:
    mg = build_middle_graph(g)
    res = solve(mg.graph, perfect, guard)
    return SolveResult(res.optimum, from_middle_labeling(mg, res.witness), res.two_set)


def gamma_r_star(g: Graph, guard: int | None = None) -> SolveResult:
    """Minimum weight of a Roman labeling of V ∪ E; witness is a MixedLabeling."""
    return _solve_star(g, False, guard)


def gamma_pr_star(g: Graph, guard: int | None = None) -> SolveResult:
    return _solve_star(g, True, guard)


def characterization_holds(g: Graph, f: MixedLabeling) -> bool:
    """Both equality conditions for ``f``.

    (i) for each 2-edge ``uv``, every other neighbour of ``u`` and of ``v``
    carries label 1; (ii) removing the endpoints of all 2-edges leaves no edge.
    """
    _check(g, f)
    ones = f.vertices_with(1)
    two_edges = f.edges_with(2)
    for u, v in two_edges:
        if not (g.neighbors(u) - {v}) <= ones or not (g.neighbors(v) - {u}) <= ones:
            return False
    ends = {x for e in two_edges for x in e}
    return g.remove_vertices(ends).m == 0


def claims_audit(g: Graph, f: MixedLabeling, optimum: int | None = None) -> dict[str, bool]:
    """Evaluate the six structural claims on ``f``.

    The result also carries ``hypothesis_met``: whether ``f`` is a PMRDF of
    minimum MRDF weight (``optimum``, computed when not given). The claims are
    evaluated regardless so a failed hypothesis is reported, not raised.
    """
    _check(g, f)
    if optimum is None:
        optimum = gamma_r_star(g).optimum
    v0, v1, v2 = (f.vertices_with(i) for i in range(3))
    e2 = f.edges_with(2)
    e2_set = set(e2)
    e0_set = set(f.edges_with(0))

    def adjacent_edges(u: int, v: int):
        for x in (u, v):
            for w in g.neighbors(x):
                e = (min(x, w), max(x, w))
                if e != (u, v):
                    yield e

    out = {
        "hypothesis_met": is_pmrdf(g, f) and f.weight == optimum,
        "no_vertex_labelled_2": not v2,
        "no_edge_labelled_1": not f.edges_with(1),
        "two_edges_have_zero_endpoints": all(u in v0 and v in v0 for u, v in e2),
        "two_edges_only_meet_zero_edges": all(
            e in e0_set and e not in e2_set for u, v in e2 for e in adjacent_edges(u, v)
        ),
        "two_edge_endpoints_see_only_ones": all(
            (g.neighbors(u) - {v}) <= v1 and (g.neighbors(v) - {u}) <= v1 for u, v in e2
        ),
        "rest_is_edgeless": g.remove_vertices({x for e in e2 for x in e}).m == 0,
    }
    return out


@dataclass
class ClaimsSummary:
    """Outcome of the claims over every minimum-weight PMRDF examined.

    ``for_all`` and ``exists`` only count functions meeting the hypothesis.
    """

    examined: int
    hypothesis_met: int
    for_all: dict[str, bool]
    exists_all_pass: bool

    def to_json(self) -> dict:
        return {
            "examined": self.examined,
            "hypothesis_met": self.hypothesis_met,
            "for_all": dict(self.for_all),
            "exists_all_pass": self.exists_all_pass,
        }


@dataclass
class CharacterizationReport:
    gamma_r_star: int
    gamma_pr_star: int
    equal: bool
    witness: MixedLabeling | None
    claims_audit: ClaimsSummary
    theorem_consistent: bool
    optimal_functions: int = 0

    def to_json(self) -> dict:
        return {
            "gamma_r_star": self.gamma_r_star,
            "gamma_pr_star": self.gamma_pr_star,
            "equal": self.equal,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "claims_audit": self.claims_audit.to_json(),
            "theorem_consistent": self.theorem_consistent,
            "optimal_functions": self.optimal_functions,
        }


def check_theorem1(g: Graph, guard: int | None = None) -> CharacterizationReport:
    """Compare γ_R★ and γ_pR★ against the existence of a conforming optimal MRDF.

    Every minimum-weight MRDF is the forced completion of exactly one optimal
    2-set of M(G), so scanning those 2-sets covers all of them.
    """
    mg = build_middle_graph(g)
    h = mg.graph
    r_sets = enumerate_optimal_two_sets(h, False, guard)
    p_sets = enumerate_optimal_two_sets(h, True, guard)
    r_opt = forced_completion(h, r_sets[0], False).weight
    p_opt = forced_completion(h, p_sets[0], True).weight

    witness = None
    for s in r_sets:
        f = from_middle_labeling(mg, forced_completion(h, s, False))
        if characterization_holds(g, f):
            witness = f
            break

    for_all = {c: True for c in CLAIMS}
    met = 0
    exists = False
    for s in p_sets:
        f = from_middle_labeling(mg, forced_completion(h, s, True))
        audit = claims_audit(g, f, r_opt)
        if not audit["hypothesis_met"]:
            continue
        met += 1
        for c in CLAIMS:
            for_all[c] = for_all[c] and audit[c]
        exists = exists or all(audit[c] for c in CLAIMS)
    if met == 0:
        for_all = {c: False for c in CLAIMS}

    equal = r_opt == p_opt
    return CharacterizationReport(
        gamma_r_star=r_opt,
        gamma_pr_star=p_opt,
        equal=equal,
        witness=witness,
        claims_audit=ClaimsSummary(len(p_sets), met, for_all, exists),
        theorem_consistent=equal == (witness is not None),
        optimal_functions=len(r_sets),
    )


def _path_labels(n: int) -> tuple[dict[int, int], dict[tuple[int, int], int]]:
    """Vertex and edge labels (0-based) for the path v1..vn, n >= 1."""
    verts: dict[int, int] = {}
    edges: dict[tuple[int, int], int] = {}
    r = n % 3
    if r == 0 or r == 1:
        # v_{3i+1} -> 1, v_{3i+2}v_{3i+3} -> 2
        for i in range((n - 3 if r == 0 else n - 4) // 3 + 1):
            verts[3 * i] = 1
            edges[(3 * i + 1, 3 * i + 2)] = 2
        if r == 1:
            verts[n - 1] = 1
    else:
        # v_{3i+1}v_{3i+2} -> 2, v_{3i+3} -> 1, closing with v_{n-1}v_n -> 2
        for i in range((n - 5) // 3 + 1):
            edges[(3 * i, 3 * i + 1)] = 2
            verts[3 * i + 2] = 1
        edges[(n - 2, n - 1)] = 2
    return verts, edges


class ConstructionError(ValueError):
    pass


def construct_pmrdf_path(n: int) -> MixedLabeling:
    """Weight-n perfect labeling of P_n built from the residue of n mod 3."""
    if n < 2:
        raise ConstructionError("path construction needs n >= 2")
    g = family("path", n)
    verts, edges = _path_labels(n)
    f = MixedLabeling.build(g, verts, edges)
    if not is_pmrdf(g, f) or f.weight != n:
        raise ConstructionError(f"path construction failed validation at n={n}")
    return f


def construct_pmrdf_cycle(n: int) -> MixedLabeling:
    """Perfect labeling of C_n of weight n when 3 divides n, else n + 1."""
    if n < 3:
        raise ConstructionError("cycle construction needs n >= 3")
    g = family("cycle", n)
    if n % 3 == 0:
        # path labeling on v1..v_{n-2} (length ≡ 1 mod 3) plus v_{n-1}v_n -> 2
        verts, edges = _path_labels(n - 2)
        edges[(n - 2, n - 1)] = 2
        target = n
    else:
        verts, edges = _path_labels(n)
        edges[(0, n - 1)] = 1
        target = n + 1
    f = MixedLabeling.build(g, verts, edges)
    if not is_pmrdf(g, f) or f.weight != target:
        raise ConstructionError(f"cycle construction failed validation at n={n}")
    return f


def open_problem_table(kind: str, max_size: int, guard: int | None = None) -> list[tuple[tuple[int, ...], int]]:
    """γ_pR★ for K_n (2 <= n <= max_size) or K_{a,b} (1 <= a <= b, a + b <= max_size)."""
    if kind == "complete":
        params = [(n,) for n in range(2, max_size + 1)]
    elif kind == "complete_bipartite":
        params = [(a, s - a) for s in range(2, max_size + 1) for a in range(1, s // 2 + 1)]
    else:
        raise ValueError(f"unknown open-problem family {kind!r}")
    return [(p, gamma_pr_star(family(kind, *p), guard).optimum) for p in params]
