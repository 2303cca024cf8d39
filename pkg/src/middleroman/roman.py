"""Roman and perfect Roman domination: validity predicates and exact solvers.

The solvers search over the set ``S`` of vertices labelled 2. Once ``S`` is
fixed, the cheapest valid labeling is forced: a vertex outside ``S`` gets 0
when the domination condition already holds for it (at least one, resp.
exactly one, neighbour in ``S``) and 1 otherwise. Searching over ``S`` alone
is therefore exact, and ``brute_force_oracle`` checks that claim over all
``3**n`` labelings.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .graph import Graph, components

DEFAULT_SIZE_GUARD = 26
ORACLE_LIMIT = 12


class SizeGuardError(RuntimeError):
    pass


class DomainError(ValueError):
    """A labeling does not match the vertex set of its graph."""


def size_guard(guard: int | None = None) -> int:
    if guard is not None:
        return guard
    env = os.environ.get("MR_SIZE_GUARD")
    return int(env) if env else DEFAULT_SIZE_GUARD


@dataclass(frozen=True)
class Labeling:
    values: tuple[int, ...]
    weight: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        if any(x not in (0, 1, 2) for x in self.values):
            raise DomainError(f"labels must be 0, 1 or 2: {self.values}")
        object.__setattr__(self, "weight", sum(self.values))

    def __len__(self) -> int:
        return len(self.values)

    def level(self, i: int) -> frozenset[int]:
        """Vertices carrying label ``i`` (the sets V0, V1, V2)."""
        return frozenset(v for v, x in enumerate(self.values) if x == i)


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: Labeling
    two_set: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "optimum": self.optimum,
            "two_set": list(self.two_set),
            "labels": list(self.witness.values),
        }


def _check_domain(g: Graph, f: Labeling) -> None:
    if len(f) != g.n:
        raise DomainError(f"labeling has {len(f)} values, graph has {g.n} vertices")


def _two_counts(g: Graph, f: Labeling) -> list[int]:
    return [sum(1 for w in g.adjacency[v] if f.values[w] == 2) for v in range(g.n)]


def is_rdf(g: Graph, f: Labeling) -> bool:
    _check_domain(g, f)
    counts = _two_counts(g, f)
    return all(c >= 1 for v, c in enumerate(counts) if f.values[v] == 0)


def is_prdf(g: Graph, f: Labeling) -> bool:
    _check_domain(g, f)
    counts = _two_counts(g, f)
    return all(c == 1 for v, c in enumerate(counts) if f.values[v] == 0)


def forced_completion(g: Graph, two_set: Iterable[int], perfect: bool) -> Labeling:
    """Minimum-weight labeling whose 2-set is exactly ``two_set``."""
    s = set(two_set)
    values = []
    for v in range(g.n):
        if v in s:
            values.append(2)
            continue
        hits = len(g.adjacency[v] & s)
        ok = hits == 1 if perfect else hits >= 1
        values.append(0 if ok else 1)
    return Labeling(tuple(values))


def _popcount(x: int) -> int:
    return x.bit_count()


class _SubsetSearch:
    """Cardinality-ordered DFS over 2-sets with a neighbourhood-size bound.

    For a partial 2-set with ``r`` picks still to make, every vertex that ends
    at 0 is adjacent to the final 2-set, so the zero count is at most the
    current neighbourhood union plus ``r * maxdeg``.
    """

    def __init__(self, g: Graph, perfect: bool) -> None:
        self.n = g.n
        self.masks = g.masks
        self.perfect = perfect
        self.maxdeg = max((len(a) for a in g.adjacency), default=0)

    def weight(self, smask: int, once: int, twice: int, k: int) -> int:
        if self.perfect:
            zeros = once & ~twice & ~smask
        else:
            zeros = once & ~smask
        return 2 * k + (self.n - k) - _popcount(zeros)

    def level(self, k: int, limit: int, strict: bool):
        """Yield ``(weight, chosen)`` for every k-subset whose bound beats ``limit``.

        With ``strict`` the bound must be ``< limit``, otherwise ``<= limit``.
        Subsets are produced in lexicographic order.
        """
        n, masks, maxdeg = self.n, self.masks, self.maxdeg
        base = 2 * k + (n - k)
        chosen: list[int] = []

        def prunable(once: int, remaining: int) -> bool:
            bound = base - _popcount(once) - remaining * maxdeg
            return bound >= limit if strict else bound > limit

        def rec(start: int, smask: int, once: int, twice: int):
            depth = len(chosen)
            if depth == k:
                yield self.weight(smask, once, twice, k), tuple(chosen)
                return
            remaining = k - depth
            if prunable(once, remaining):
                return
            for v in range(start, n - remaining + 1):
                mv = masks[v]
                chosen.append(v)
                yield from rec(v + 1, smask | (1 << v), once | mv, twice | (once & mv))
                chosen.pop()

        yield from rec(0, 0, 0, 0)


def _guard(g: Graph, guard: int | None) -> None:
    limit = size_guard(guard)
    if g.n > limit:
        raise SizeGuardError(
            f"subset search refuses {g.n} elements (guard {limit}); "
            "raise it with MR_SIZE_GUARD or --size-guard"
        )


def _solve(g: Graph, perfect: bool, guard: int | None) -> SolveResult:
    _guard(g, guard)
    search = _SubsetSearch(g, perfect)
    best, best_set = g.n, ()
    k = 1
    while 2 * k < best and k <= g.n:
        for w, s in search.level(k, best, strict=True):
            if w < best:
                best, best_set = w, s
        k += 1
    witness = forced_completion(g, best_set, perfect)
    assert witness.weight == best
    return SolveResult(best, witness, best_set)


def gamma_r(g: Graph, guard: int | None = None) -> SolveResult:
    """Roman domination number with a deterministic witness.

    Among optimal 2-sets the smallest, then lexicographically first, is used.
    """
    return _solve(g, False, guard)


def gamma_pr(g: Graph, guard: int | None = None) -> SolveResult:
    return _solve(g, True, guard)


def solve(g: Graph, perfect: bool, guard: int | None = None) -> SolveResult:
    return _solve(g, perfect, guard)


def enumerate_optimal_two_sets(
    g: Graph, perfect: bool, guard: int | None = None
) -> list[tuple[int, ...]]:
    """All 2-sets whose forced completion has minimum weight, in (size, lex) order."""
    opt = _solve(g, perfect, guard).optimum
    search = _SubsetSearch(g, perfect)
    found = []
    k = 0
    while 2 * k <= opt and k <= g.n:
        for w, s in search.level(k, opt, strict=False):
            if w == opt:
                found.append(s)
        k += 1
    return found


def brute_force_oracle(g: Graph, perfect: bool) -> int:
    """Minimum weight over every labeling in ``{0,1,2}**n``."""
    n = g.n
    if n > ORACLE_LIMIT:
        raise SizeGuardError(f"oracle enumerates 3**n labelings; n={n} > {ORACLE_LIMIT}")
    if n == 0:
        return 0
    idx = np.arange(3**n, dtype=np.int64)
    labels = np.stack([(idx // 3**i) % 3 for i in range(n)], axis=1).astype(np.int8)
    adj = np.zeros((n, n), dtype=np.int16)
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = 1
    twos = (labels == 2).astype(np.int16) @ adj
    dominated = twos == 1 if perfect else twos >= 1
    valid = ((labels != 0) | dominated).all(axis=1)
    return int(labels.sum(axis=1, dtype=np.int64)[valid].min())


def solve_by_components(g: Graph, perfect: bool, guard: int | None = None) -> SolveResult:
    """Solve each connected component separately and sum the optima."""
    values = [0] * g.n
    two_set: list[int] = []
    total = 0
    for sub, back in components(g):
        res = _solve(sub, perfect, guard)
        total += res.optimum
        for i, x in enumerate(res.witness.values):
            values[back[i]] = x
        two_set.extend(back[i] for i in res.two_set)
    return SolveResult(total, Labeling(tuple(values)), tuple(sorted(two_set)))

