"""Ground truth: the disagreement objective, exhaustive optima and approximation reports."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _kernels
from .algorithm import run_cc
from .cycles import triangle_condition_check
from .errors import PartitionMismatch, TooLarge
from .graph import NEGATIVE, POSITIVE, Clustering, Edge, SignedGraph
from .patterns import forbidden_subgraph_scan

DEFAULT_ORACLE_LIMIT = 12
DEFAULT_EDGE_LIMIT = 20


@dataclass(frozen=True)
class DisagreementReport:
    total: int
    negative_inside: tuple[Edge, ...]
    positive_across: tuple[Edge, ...]

    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.negative_inside + self.positive_across))


@dataclass(frozen=True)
class OptimumCertificate:
    disagreements: int
    clustering: Clustering
    deletion_set: tuple[Edge, ...]


def count_disagreements(g: SignedGraph, c: Clustering) -> DisagreementReport:
    if c.n != g.n:
        raise PartitionMismatch(f"clustering covers {c.n} vertices, graph has {g.n}")
    lab = c.assignment
    inside = tuple(e for e, s in g.signs.items() if s == NEGATIVE and lab[e[0]] == lab[e[1]])
    across = tuple(e for e, s in g.signs.items() if s == POSITIVE and lab[e[0]] != lab[e[1]])
    return DisagreementReport(len(inside) + len(across), inside, across)


def brute_force_optimum(g: SignedGraph, limit: int = DEFAULT_ORACLE_LIMIT) -> OptimumCertificate:
    """Minimum-disagreement clustering over all set partitions.

    Ties resolve to the lexicographically least restricted growth string.
    """
    if g.n > limit:
        raise TooLarge(f"n={g.n} exceeds oracle limit {limit}")
    cost, labels = _kernels.best_partition(g.sign_matrix)
    clustering = Clustering.from_labels(labels.tolist())
    report = count_disagreements(g, clustering)
    assert report.total == cost
    return OptimumCertificate(int(cost), clustering, report.edges())


def _clusterable_without(n: int, edges: list[tuple[int, int, int]]) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, s in edges:
        if s == POSITIVE:
            parent[find(u)] = find(v)
    return all(find(u) != find(v) for u, v, s in edges if s == NEGATIVE)


def min_deletion_set(g: SignedGraph, limit: int | None = DEFAULT_EDGE_LIMIT) -> tuple[Edge, ...]:
    """Smallest edge set whose removal leaves no weakly negative cycle.

    Subsets are tried by increasing size in canonical order, so the result is
    the lexicographically least minimum set.
    """
    if limit is not None and g.m > limit:
        raise TooLarge(f"|E|={g.m} exceeds deletion-set limit {limit}")
    edges = g.edges()
    for size in range(len(edges) + 1):
        for drop in combinations(range(len(edges)), size):
            dropped = set(drop)
            kept = [e for i, e in enumerate(edges) if i not in dropped]
            if _clusterable_without(g.n, kept):
                return tuple((edges[i][0], edges[i][1]) for i in drop)
    raise AssertionError("removing every edge always succeeds")


@dataclass(frozen=True)
class ApproximationReport:
    sol: int
    opt: int
    ratio: float | None
    triangle_condition: bool
    forbidden_hits: int
    clustering: Clustering
    failure: str | None = None

    @property
    def in_subclass(self) -> bool:
        return self.triangle_condition and self.forbidden_hits == 0

    @property
    def within_factor_two(self) -> bool:
        return self.sol <= 2 * self.opt


def approximation_report(g: SignedGraph, limit: int = DEFAULT_ORACLE_LIMIT) -> ApproximationReport:
    opt = brute_force_optimum(g, limit).disagreements
    clustering, _ = run_cc(g)
    sol = count_disagreements(g, clustering).total
    failure = None
    if opt == 0:
        ratio = 1.0 if sol == 0 else None
        if sol:
            failure = f"clusterable input left {sol} disagreements"
    else:
        ratio = sol / opt
    tri_ok, _ = triangle_condition_check(g)
    hits = len(forbidden_subgraph_scan(g))
    return ApproximationReport(sol, opt, ratio, tri_ok, hits, clustering, failure)
