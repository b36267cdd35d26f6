"""Graph, coloring, weighting, and matching data model.

Vertices are dense integer ids 0..n-1. Edges are stored as an ordered list
of tuples with endpoints normalized so that u < v; the id of an edge is its
position in that list and never changes. A matching is a sorted tuple of
edge ids. All types are immutable after construction and all functions here
are pure, so values can be shared freely between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Union

RED = "r"
BLUE = "b"

Matching = tuple[int, ...]


@dataclass(frozen=True)
class ColoredGraph:
    """Simple undirected graph with a red/blue label per edge.

    edges holds (u, v, color) triples with color one of RED or BLUE.
    """

    n: int
    edges: tuple[tuple[int, int, str], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))

    @cached_property
    def colors(self) -> tuple[str, ...]:
        return tuple(e[2] for e in self.edges)

    @cached_property
    def red_edge_ids(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.edges) if e[2] == RED)

    @property
    def num_red(self) -> int:
        return len(self.red_edge_ids)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the incident (edge id, other endpoint) pairs in
        ascending edge-id order."""
        return _build_adjacency(self.n, self.edges)


@dataclass(frozen=True)
class WeightedGraph:
    """Simple undirected graph with a non-negative integer weight per edge."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))

    @cached_property
    def weights(self) -> tuple[int, ...]:
        return tuple(e[2] for e in self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        return _build_adjacency(self.n, self.edges)


Graph = Union[ColoredGraph, WeightedGraph]


@dataclass(frozen=True)
class EmInstance:
    """An exact-matching question: does some perfect matching of the colored
    graph contain exactly k red edges?"""

    graph: ColoredGraph
    k: int


@dataclass(frozen=True)
class TkpmInstance:
    """A top-k perfect matching question: maximize the summed weight of the
    k heaviest edges over all perfect matchings."""

    graph: WeightedGraph
    k: int


def _build_adjacency(n, edges):
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, e in enumerate(edges):
        u, v = e[0], e[1]
        adj[u].append((i, v))
        adj[v].append((i, u))
    return tuple(tuple(a) for a in adj)


def validate(graph: Graph) -> Optional[str]:
    """Check all structural invariants of a graph.

    Returns None when the graph is well formed, otherwise a message naming
    the first violated invariant and the offending edge. Callers decide
    whether a violation is fatal.
    """
    n = graph.n
    if n < 0:
        return "negative vertex count"
    is_colored = isinstance(graph, ColoredGraph)
    seen: dict[tuple[int, int], int] = {}
    for i, e in enumerate(graph.edges):
        if len(e) != 3:
            return f"edge {i} is not a (u, v, {'color' if is_colored else 'weight'}) triple"
        u, v, payload = e
        if not isinstance(u, int) or not isinstance(v, int):
            return f"non-integer endpoint at edge {i}"
        if u == v:
            return f"self-loop at edge {i}"
        if u > v:
            return f"endpoints out of order at edge {i} (expected u < v)"
        if u < 0 or v >= n:
            return f"vertex id out of range at edge {i}"
        if (u, v) in seen:
            return f"parallel edge at edge {i} (duplicate of edge {seen[(u, v)]})"
        seen[(u, v)] = i
        if is_colored:
            if payload not in (RED, BLUE):
                return f"unknown color {payload!r} at edge {i}"
        else:
            if not isinstance(payload, int) or payload < 0:
                return f"negative or non-integer weight at edge {i}"
    return None


def validate_instance(instance: Union[EmInstance, TkpmInstance]) -> Optional[str]:
    """Check instance invariants: the graph must be well formed and k must
    be in range (0 <= k <= n/2 for exact matching, 0 <= k for top-k)."""
    report = validate(instance.graph)
    if report is not None:
        return report
    if instance.k < 0:
        return f"negative k ({instance.k})"
    if isinstance(instance, EmInstance) and instance.k > instance.graph.n // 2:
        return f"k ({instance.k}) exceeds maximum matching size ({instance.graph.n // 2})"
    return None


def as_matching(edge_ids: Iterable[int]) -> Matching:
    """Normalize an iterable of edge ids to a sorted duplicate-free tuple."""
    return tuple(sorted(set(edge_ids)))


def _check_edge_ids(graph: Graph, matching: Iterable[int]) -> Matching:
    m = tuple(matching)
    num_edges = len(graph.edges)
    for eid in m:
        if not 0 <= eid < num_edges:
            raise ValueError(f"edge id {eid} out of range for graph with {num_edges} edges")
    return m


def is_perfect_matching(graph: Graph, matching: Iterable[int]) -> bool:
    """True iff the edges are pairwise vertex-disjoint and cover all vertices.

    Raises ValueError when the matching refers to a nonexistent edge id.
    """
    m = set(_check_edge_ids(graph, matching))
    covered: set[int] = set()
    for eid in m:
        e = graph.edges[eid]
        u, v = e[0], e[1]
        if u in covered or v in covered:
            return False
        covered.add(u)
        covered.add(v)
    return len(covered) == graph.n


def red_count(graph: ColoredGraph, matching: Iterable[int]) -> int:
    """Number of red edges in a matching of a colored graph."""
    m = _check_edge_ids(graph, matching)
    colors = graph.colors
    return sum(1 for eid in set(m) if colors[eid] == RED)


def top_k_weight(weights, edge_ids: Iterable[int], k: int) -> int:
    """Sum of the k largest weights among the given edge ids.

    When k exceeds the number of edges, all weights are summed. Ties between
    equal weights cannot affect the value.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    chosen = sorted((weights[eid] for eid in edge_ids), reverse=True)
    return sum(chosen[:k])
