"""Mutable undirected simple graph with O(1) edge removal and LIFO rollback.

Edges and vertices carry dense integer ids that stay stable across
removal: removing hides an edge from its endpoints' adjacency lists
without renumbering anything, and a rollback relinks the hidden list
nodes in reverse order (dancing-links style), restoring the exact
adjacency structure.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdge,
    EdgeNotAlive,
    SelfLoop,
    StaleMark,
    UnknownEdge,
    VertexNotAlive,
)

# A matching is a sequence of edge ids; solutions are emitted as tuples.
Matching = Sequence[int]

# An undo mark is a position in the removal log.
UndoMark = int


class DynamicGraph:
    """Undirected simple graph over dense vertex ids 0..n-1.

    Adjacency is kept as one intrusive doubly-linked list per vertex
    over "arcs" (edge endpoints): edge e owns arcs 2e and 2e+1.  Edge
    removal unlinks both arcs in O(1); restoration relinks them using
    their retained prev/next fields, which is correct because removals
    are undone in LIFO order.
    """

    __slots__ = (
        "n",
        "m",
        "eu",
        "ev",
        "head",
        "nxt",
        "prv",
        "alive_edge",
        "alive_vertex",
        "degree",
        "undo_log",
        "live_edge_count",
        "labels",
        "listener",
    )

    def __init__(self, n: int, edges: Sequence[tuple[int, int]], labels=None):
        self.n = n
        self.m = len(edges)
        self.eu = [u for u, _ in edges]
        self.ev = [v for _, v in edges]
        self.labels = labels if labels is not None else list(range(n))
        self.head = [-1] * n
        self.nxt = [-1] * (2 * self.m)
        self.prv = [0] * (2 * self.m)
        self.alive_edge = bytearray([1]) * self.m
        self.alive_vertex = bytearray([1]) * n
        self.degree = [0] * n
        self.undo_log: list[int] = []
        self.live_edge_count = self.m
        self.listener = None
        for e in range(self.m):
            self._link_front(2 * e, self.eu[e])
            self._link_front(2 * e + 1, self.ev[e])
            self.degree[self.eu[e]] += 1
            self.degree[self.ev[e]] += 1

    def _link_front(self, arc: int, v: int) -> None:
        h = self.head[v]
        self.nxt[arc] = h
        self.prv[arc] = -(v + 1)
        if h != -1:
            self.prv[h] = arc
        self.head[v] = arc

    # -- queries ------------------------------------------------------

    def edge(self, e: int) -> tuple[int, int]:
        return self.eu[e], self.ev[e]

    def iter_incident(self, v: int) -> Iterator[tuple[int, int]]:
        """Yield (edge id, other endpoint) for every alive edge at v."""
        a = self.head[v]
        nxt, eu, ev = self.nxt, self.eu, self.ev
        while a != -1:
            e = a >> 1
            yield e, (ev[e] if a & 1 == 0 else eu[e])
            a = nxt[a]

    def live_edges(self) -> list[int]:
        return [e for e in range(self.m) if self.alive_edge[e]]

    def adjacency_sets(self) -> list[set[int]]:
        """Current alive adjacency as vertex sets (test/inspection aid)."""
        return [
            {e for e, _ in self.iter_incident(v)} if self.alive_vertex[v] else set()
            for v in range(self.n)
        ]

    # -- mutation -----------------------------------------------------

    def remove_edge(self, e: int) -> None:
        if not (0 <= e < self.m) or not self.alive_edge[e]:
            raise EdgeNotAlive(f"edge {e} is not alive")
        self._unlink_edge(e)
        self.undo_log.append(e)

    def _unlink_edge(self, e: int) -> None:
        nxt, prv, head = self.nxt, self.prv, self.head
        for arc in (2 * e, 2 * e + 1):
            p, n = prv[arc], nxt[arc]
            if p < 0:
                head[-p - 1] = n
            else:
                nxt[p] = n
            if n != -1:
                prv[n] = p
        self.alive_edge[e] = 0
        self.live_edge_count -= 1
        u, v = self.eu[e], self.ev[e]
        du = self.degree[u]
        dv = self.degree[v]
        self.degree[u] = du - 1
        self.degree[v] = dv - 1
        if self.listener is not None:
            self.listener.on_degree_change(u, du, du - 1)
            self.listener.on_degree_change(v, dv, dv - 1)

    def _relink_edge(self, e: int) -> None:
        nxt, prv, head = self.nxt, self.prv, self.head
        for arc in (2 * e + 1, 2 * e):
            p, n = prv[arc], nxt[arc]
            if p < 0:
                head[-p - 1] = arc
            else:
                nxt[p] = arc
            if n != -1:
                prv[n] = arc
        self.alive_edge[e] = 1
        self.live_edge_count += 1
        u, v = self.eu[e], self.ev[e]
        du = self.degree[u]
        dv = self.degree[v]
        self.degree[u] = du + 1
        self.degree[v] = dv + 1
        if self.listener is not None:
            self.listener.on_degree_change(u, du, du + 1)
            self.listener.on_degree_change(v, dv, dv + 1)

    def remove_vertex(self, v: int) -> None:
        if not (0 <= v < self.n) or not self.alive_vertex[v]:
            raise VertexNotAlive(f"vertex {v} is not alive")
        while self.head[v] != -1:
            self.remove_edge(self.head[v] >> 1)
        self.alive_vertex[v] = 0
        self.undo_log.append(-(v + 1))
        if self.listener is not None:
            self.listener.on_vertex_dead(v)

    def mark(self) -> UndoMark:
        return len(self.undo_log)

    def rollback(self, m: UndoMark) -> None:
        log = self.undo_log
        if m > len(log):
            raise StaleMark(f"mark {m} is past the current log end {len(log)}")
        while len(log) > m:
            rec = log.pop()
            if rec >= 0:
                self._relink_edge(rec)
            else:
                v = -rec - 1
                self.alive_vertex[v] = 1
                if self.listener is not None:
                    self.listener.on_vertex_alive(v)


def build_graph(edge_pairs: Iterable[tuple[Hashable, Hashable]]) -> DynamicGraph:
    """Build a graph from labelled endpoint pairs.

    Labels map to dense vertex ids in first-appearance order; edge ids
    follow input order.  Raises SelfLoop / DuplicateEdge on bad input.
    """
    ids: dict[Hashable, int] = {}
    edges: list[tuple[int, int]] = []
    seen: set[frozenset] = set()
    for a, b in edge_pairs:
        if a == b:
            raise SelfLoop(f"edge ({a!r}, {b!r}) is a self-loop")
        key = frozenset((a, b))
        if key in seen:
            raise DuplicateEdge(f"edge ({a!r}, {b!r}) repeats an earlier pair")
        seen.add(key)
        u = ids.setdefault(a, len(ids))
        v = ids.setdefault(b, len(ids))
        edges.append((u, v))
    labels = list(ids)
    return DynamicGraph(len(labels), edges, labels)


def is_induced_matching(g: DynamicGraph, matching: Matching) -> bool:
    """Check the induced-matching predicate against the original graph.

    True iff the edges of `matching` have pairwise distinct endpoints
    and no edge of g connects endpoints of two distinct matching edges
    (edge-to-edge distance >= 2 for every pair).
    """
    owner: dict[int, int] = {}
    for i, e in enumerate(matching):
        if not 0 <= e < g.m:
            raise UnknownEdge(f"edge id {e} out of range")
        for x in (g.eu[e], g.ev[e]):
            if x in owner:
                return False
            owner[x] = i
    if not owner:
        return True
    for u, v in zip(g.eu, g.ev):
        iu = owner.get(u)
        if iu is None:
            continue
        iv = owner.get(v)
        if iv is not None and iv != iu:
            return False
    return True


def edge_distance_at_most(g: DynamicGraph, e: int, f: int, k: int) -> bool:
    """True iff dist(e, f) <= k in the current live graph, k in {0, 1, 2}."""
    for x in (e, f):
        if not (0 <= x < g.m) or not g.alive_edge[x]:
            raise EdgeNotAlive(f"edge {x} is not alive")
    if k not in (0, 1, 2):
        raise ValueError("k must be 0, 1, or 2")
    targets = {g.eu[f], g.ev[f]}
    frontier = [g.eu[e], g.ev[e]]
    seen = set(frontier)
    for _ in range(k + 1):
        if any(x in targets for x in frontier):
            return True
        nxt = []
        for x in frontier:
            for _, w in g.iter_incident(x):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return False
