"""Simple undirected graphs stored as adjacency bitrows.

Row ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
Python ints are unbounded, so the same carrier serves the n <= 64
enumeration path and the larger parameter sweeps.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def edge_order(n: int) -> list[tuple[int, int]]:
    """Pairs (i, j), i < j, in graph6 column order: j ascending, then i.

    Bit ``e`` of an edge mask refers to ``edge_order(n)[e]``.
    """
    return [(i, j) for j in range(1, n) for i in range(j)]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Graph:
        """Decode an edge mask over :func:`edge_order`."""
        return cls.from_edges(n, (p for e, p in enumerate(edge_order(n)) if mask >> e & 1))

    @classmethod
    def from_matrix(cls, a) -> Graph:
        a = np.asarray(a)
        n = a.shape[0]
        return cls.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]))

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    def to_mask(self) -> int:
        return sum(1 << e for e, (i, j) in enumerate(edge_order(self.n)) if self.adj[i] >> j & 1)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def add_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def relabel(self, perm) -> Graph:
        """Vertex ``v`` becomes ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as vertex masks, ordered by least vertex."""
    remaining = (1 << g.n) - 1 if within is None else within
    comps = []
    while remaining:
        seed = remaining & -remaining
        reach = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & remaining & ~reach
            reach |= frontier
        comps.append(reach)
        remaining &= ~reach
    return comps


def is_connected(g: Graph, within: int | None = None) -> bool:
    if g.n == 0:
        return True
    return len(component_masks(g, within)) <= 1


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    verts = sorted(set(s))
    if not verts:
        raise ValueError("induced subgraph needs a non-empty vertex set")
    if verts[0] < 0 or verts[-1] >= g.n:
        raise ValueError(f"vertex set {verts} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(verts)}
    return Graph.from_edges(
        len(verts), ((index[u], index[v]) for u, v in g.edges() if u in index and v in index)
    )


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    m = to_mask(s)
    return all((g.adj[v] | 1 << v) & m == m for v in bits(m))


@dataclass(frozen=True)
class VertexCut:
    vertices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.vertices)


def _local_connectivity(g: Graph, s: int, t: int, limit: int) -> tuple[int, set[int]]:
    """Max number of internally disjoint s-t paths, capped at ``limit``.

    Unit-capacity max-flow on the split digraph: vertex v becomes
    v_in = 2v -> v_out = 2v + 1 with capacity 1 (infinite for s and t),
    every edge uv becomes u_out -> v_in and v_out -> u_in.
    Returns the flow value and, when the flow is below ``limit``, the
    vertices whose in-to-out arc crosses the minimum cut.
    """
    n = g.n
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int):
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
        cap[(a, b)] += c

    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            cut = {v for v in range(n) if 2 * v in parent and 2 * v + 1 not in parent}
            return flow, cut
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow, set()


def vertex_connectivity(g: Graph) -> tuple[int, VertexCut]:
    """Exact vertex connectivity with a minimum separating set.

    K_n returns ``(n - 1, empty cut)``. Uses Even's reduction: some vertex
    among the first kappa + 1 lies outside any minimum cut, so only those
    need to act as flow sources.
    """
    if not is_connected(g):
        raise ValueError("vertex connectivity is undefined for a disconnected graph")
    n = g.n
    full = (1 << n) - 1
    best = n - 1
    best_cut: set[int] = set()
    i = 0
    while i <= best and i < n:
        for j in range(n):
            if j == i or g.has_edge(i, j):
                continue
            k, cut = _local_connectivity(g, i, j, best)
            if k < best:
                best, best_cut = k, cut
        i += 1
    if best_cut:
        assert not is_connected(g, full & ~to_mask(best_cut))
    return best, VertexCut(frozenset(best_cut))
