"""Finite simple undirected graphs over contiguous vertex ids.

Graphs are immutable after construction and hashable, so every algorithm
in this package is a pure function and results may be cached or computed
concurrently without coordination.  Disconnected, edgeless and trivial
graphs are all first-class; only the empty graph (n = 0) is rejected by
the analysis operations that need at least one vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    ``edges`` is a sorted tuple of (u, v) pairs with u < v and no
    duplicates; ``adjacency`` holds a sorted neighbour tuple per vertex.
    Use :func:`build_graph` instead of the raw constructor so the
    invariants are validated.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def closed_neighbourhood(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adjacency[v] + (v,)))

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no degrees")
        return min(len(a) for a in self.adjacency)

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no degrees")
        return max(len(a) for a in self.adjacency)

    def __repr__(self) -> str:  # compact, deterministic
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and build a :class:`Graph`.

    Duplicate edges (in either orientation) are collapsed.  Self-loops and
    endpoints outside 0..n-1 are rejected.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    seen: set[tuple[int, int]] = set()
    for e in edges:
        u, v = e
        if u == v:
            raise ValueError(f"self-loop at vertex {u} is not allowed in a simple graph")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        seen.add((u, v) if u < v else (v, u))
    edge_tuple = tuple(sorted(seen))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edge_tuple:
        adj[u].append(v)
        adj[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    return Graph(n=n, edges=edge_tuple, adjacency=adjacency)


def complement(g: Graph) -> Graph:
    """Complement graph on the same vertex set."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return build_graph(g.n, edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``vertices``, relabelled 0..k-1 in ascending
    parent order.  Returns the subgraph and the parent-id tuple."""
    verts = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(verts)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return build_graph(len(verts), edges), verts


def is_connected(g: Graph) -> bool:
    """True for graphs with at most one vertex and for connected graphs."""
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.adjacency[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


@dataclass(frozen=True)
class ComponentDecomposition:
    """Partition of a graph into maximal connected subgraphs.

    ``components[i]`` is the i-th component with local vertex ids;
    ``vertices[i]`` lists its parent vertex ids in ascending order (the
    local id of ``vertices[i][j]`` is j); ``vertex_map[v]`` gives
    (component index, local id) for parent vertex v.  Components are
    ordered by their smallest parent vertex id.
    """

    parent: Graph
    components: tuple[Graph, ...]
    vertices: tuple[tuple[int, ...], ...]
    vertex_map: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.components)

    def to_parent(self, comp_index: int, local: int) -> int:
        return self.vertices[comp_index][local]


def decompose(g: Graph) -> ComponentDecomposition:
    """Split ``g`` into connected components, deterministically ordered."""
    unvisited = set(range(g.n))
    groups: list[tuple[int, ...]] = []
    while unvisited:
        start = min(unvisited)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        unvisited -= seen
        groups.append(tuple(sorted(seen)))
    groups.sort(key=lambda grp: grp[0])
    comps = []
    vmap: list[tuple[int, int]] = [(-1, -1)] * g.n
    for ci, grp in enumerate(groups):
        sub, verts = induced_subgraph(g, grp)
        comps.append(sub)
        for li, pv in enumerate(verts):
            vmap[pv] = (ci, li)
    return ComponentDecomposition(
        parent=g,
        components=tuple(comps),
        vertices=tuple(groups),
        vertex_map=tuple(vmap),
    )


@dataclass(frozen=True)
class DegreeProfile:
    delta: int
    Delta: int
    pendants: frozenset[int]
    internal: frozenset[int]


def degree_profile(g: Graph) -> DegreeProfile:
    """Minimum/maximum degree plus the pendant (degree 1) and internal
    (degree >= 2) vertex sets.  Isolated vertices are neither."""
    if g.n == 0:
        raise ValueError("degree profile of the empty graph is undefined")
    degs = [g.degree(v) for v in range(g.n)]
    return DegreeProfile(
        delta=min(degs),
        Delta=max(degs),
        pendants=frozenset(v for v, d in enumerate(degs) if d == 1),
        internal=frozenset(v for v, d in enumerate(degs) if d >= 2),
    )


def simple_cycle_lengths(g: Graph) -> frozenset[int]:
    """Lengths of all simple cycles in ``g``.

    Each cycle is enumerated once: its smallest vertex is the root and the
    two traversal directions are collapsed by requiring the second vertex
    to be smaller than the last.  Intended for desk-scale graphs.
    """
    lengths: set[int] = set()
    for root in range(g.n):
        # path[0] == root, every other path vertex > root
        stack: list[tuple[int, tuple[int, ...]]] = [(root, (root,))]
        while stack:
            v, path = stack.pop()
            for u in g.adjacency[v]:
                if u == root and len(path) >= 3 and path[1] < path[-1]:
                    lengths.add(len(path))
                elif u > root and u not in path:
                    stack.append((u, path + (u,)))
    return frozenset(lengths)


def has_cycle_length_multiple(g: Graph, k: int) -> bool:
    """True when some simple cycle of ``g`` has length divisible by ``k``."""
    return any(length % k == 0 for length in simple_cycle_lengths(g))
