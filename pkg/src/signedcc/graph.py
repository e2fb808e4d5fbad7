"""Signed graph data model: construction, sign filters, degrees and subgraphs."""
from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    DuplicateEdge,
    OverlappingSets,
    PartitionMismatch,
    SelfLoop,
    VertexOutOfRange,
)

POSITIVE = 1
NEGATIVE = -1

Edge = tuple[int, int]


def norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class SignedGraph:
    """Undirected simple graph on vertices ``0..n-1`` with a +1/-1 sign per edge.

    Instances are treated as immutable; every derived structure is cached.
    """

    def __init__(self, n: int, signs: Mapping[Edge, int]):
        self.n = n
        self._signs = dict(sorted(signs.items()))

    @classmethod
    def from_edges(cls, n: int, edge_list: Iterable[tuple[int, int, int]]) -> SignedGraph:
        return build_graph(n, edge_list)

    # -- basic access ---------------------------------------------------
    @property
    def signs(self) -> Mapping[Edge, int]:
        return self._signs

    def edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, s) for (u, v), s in self._signs.items()]

    @property
    def m(self) -> int:
        return len(self._signs)

    def sign(self, u: int, v: int) -> int:
        """Sign of edge ``uv`` or 0 when absent."""
        return self._signs.get(norm(u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        return norm(u, v) in self._signs

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self._signs:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def positive_neighbors(self) -> tuple[frozenset[int], ...]:
        return self._filtered_adjacency(POSITIVE)

    @cached_property
    def negative_neighbors(self) -> tuple[frozenset[int], ...]:
        return self._filtered_adjacency(NEGATIVE)

    def _filtered_adjacency(self, which: int) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for (u, v), s in self._signs.items():
            if s == which:
                adj[u].add(v)
                adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def sign_matrix(self) -> np.ndarray:
        """Dense ``n x n`` int8 matrix with entries in {-1, 0, +1}."""
        mat = np.zeros((self.n, self.n), dtype=np.int8)
        for (u, v), s in self._signs.items():
            mat[u, v] = mat[v, u] = s
        return mat

    @cached_property
    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Parallel ``(u, v, sign)`` int64 arrays in canonical edge order."""
        if not self._signs:
            empty = np.zeros(0, dtype=np.int64)
            return empty, empty.copy(), empty.copy()
        arr = np.array([(u, v, s) for (u, v), s in self._signs.items()], dtype=np.int64)
        return arr[:, 0].copy(), arr[:, 1].copy(), arr[:, 2].copy()

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")

    # -- value semantics --------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.n == other.n and self._signs == other._signs

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._signs.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{u}{v}{'+' if s > 0 else '-'}" for (u, v), s in self._signs.items())
        return f"SignedGraph(n={self.n}, [{body}])"


def build_graph(n: int, edge_list: Iterable[tuple[int, int, int]]) -> SignedGraph:
    """Validate ``(u, v, sign)`` triples and return the canonical graph."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    signs: dict[Edge, int] = {}
    for entry in edge_list:
        u, v, s = entry
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge {entry!r}: endpoint outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"edge {entry!r}: self-loop at vertex {u}")
        if s not in (POSITIVE, NEGATIVE):
            raise ValueError(f"edge {entry!r}: sign must be +1 or -1")
        key = norm(u, v)
        if key in signs:
            raise DuplicateEdge(f"edge {entry!r}: pair {key} already present")
        signs[key] = int(s)
    return SignedGraph(n, signs)


def sign_subgraph(g: SignedGraph, which: str | int) -> SignedGraph:
    """Spanning subgraph keeping only positive or only negative edges."""
    want = {"positive": POSITIVE, "+": POSITIVE, "negative": NEGATIVE, "-": NEGATIVE}.get(which, which)
    if want not in (POSITIVE, NEGATIVE):
        raise ValueError(f"unknown sign selector {which!r}")
    return SignedGraph(g.n, {e: s for e, s in g.signs.items() if s == want})


def degrees(g: SignedGraph, v: int) -> tuple[int, int, int]:
    """Return ``(underlying, positive, negative)`` degree of ``v``."""
    g._check_vertex(v)
    pos = len(g.positive_neighbors[v])
    neg = len(g.negative_neighbors[v])
    return pos + neg, pos, neg


def set_pair_degree(g: SignedGraph, a: Iterable[int], b: Iterable[int]) -> tuple[int, int]:
    """Count positive and negative edges with one end in ``a`` and the other in ``b``."""
    a, b = set(a), set(b)
    if a & b:
        raise OverlappingSets(f"sets share vertices {sorted(a & b)}")
    for v in a | b:
        g._check_vertex(v)
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    d_plus = d_minus = 0
    for u in small:
        d_plus += len(g.positive_neighbors[u] & large)
        d_minus += len(g.negative_neighbors[u] & large)
    return d_plus, d_minus


def induced_subgraph(g: SignedGraph, s: Iterable[int]) -> tuple[SignedGraph, tuple[int, ...]]:
    """Restrict ``g`` to ``s``.

    Returns the reindexed subgraph and ``ids`` with ``ids[new] == old``.
    """
    ids = tuple(sorted(set(s)))
    for v in ids:
        g._check_vertex(v)
    local = {old: new for new, old in enumerate(ids)}
    signs = {}
    for old in ids:
        for w in g.neighbors[old]:
            if old < w and w in local:
                signs[(local[old], local[w])] = g.signs[(old, w)]
    return SignedGraph(len(ids), signs), ids


def positive_components(g: SignedGraph) -> list[frozenset[int]]:
    """Connected components of the positive subgraph, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack, comp = [root], [root]
        while stack:
            u = stack.pop()
            for w in g.positive_neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    comp.append(w)
        comps.append(frozenset(comp))
    return comps


def disjoint_union(*graphs: SignedGraph) -> SignedGraph:
    signs: dict[Edge, int] = {}
    offset = 0
    for h in graphs:
        for (u, v), s in h.signs.items():
            signs[(u + offset, v + offset)] = s
        offset += h.n
    return SignedGraph(offset, signs)


def relabel(g: SignedGraph, perm: Sequence[int]) -> SignedGraph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return SignedGraph(g.n, {norm(perm[u], perm[v]): s for (u, v), s in g.signs.items()})


@dataclass(frozen=True)
class Clustering:
    """Partition of ``0..n-1``; ``assignment[v]`` is the cluster id of ``v``.

    Cluster ids are dense ``0..k-1``.
    """

    assignment: tuple[int, ...]

    def __post_init__(self):
        labels = set(self.assignment)
        if labels != set(range(len(labels))):
            raise PartitionMismatch(f"cluster ids must be 0..k-1, got {sorted(labels)}")

    @classmethod
    def from_clusters(cls, n: int, clusters: Iterable[Iterable[int]]) -> Clustering:
        assignment = [-1] * n
        k = 0
        for members in clusters:
            members = list(members)
            if not members:
                continue
            for v in members:
                if not 0 <= v < n:
                    raise PartitionMismatch(f"vertex {v} outside 0..{n - 1}")
                if assignment[v] != -1:
                    raise PartitionMismatch(f"vertex {v} appears in two clusters")
                assignment[v] = k
            k += 1
        missing = [v for v, c in enumerate(assignment) if c == -1]
        if missing:
            raise PartitionMismatch(f"vertices {missing} not covered")
        return cls(tuple(assignment))

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> Clustering:
        """Relabel arbitrary labels into first-appearance order (a restricted growth string)."""
        remap: dict[int, int] = {}
        return cls(tuple(remap.setdefault(int(x), len(remap)) for x in labels))

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def k(self) -> int:
        return len(set(self.assignment))

    @cached_property
    def clusters(self) -> tuple[frozenset[int], ...]:
        groups: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            groups[c].append(v)
        return tuple(frozenset(grp) for grp in groups)

    def canonical(self) -> Clustering:
        return Clustering.from_labels(self.assignment)

    def same_partition(self, other: Clustering) -> bool:
        return self.canonical().assignment == other.canonical().assignment
