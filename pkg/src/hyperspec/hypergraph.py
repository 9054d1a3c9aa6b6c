"""k-uniform hypergraph data model, structural predicates and the JSON format."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class HypergraphError(ValueError):
    """Raised for malformed hypergraphs. ``edge`` names the offending edge if any."""

    def __init__(self, message: str, edge: Sequence[int] | None = None):
        super().__init__(message)
        self.edge = tuple(edge) if edge is not None else None


class DisconnectedError(HypergraphError):
    pass


Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """A simple k-uniform hypergraph on the dense vertex set ``range(n)``.

    Edges are strictly ascending k-tuples, stored in lexicographic order.
    Use :meth:`from_edges` to build one from unsorted input.
    """

    k: int
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.k < 2:
            raise HypergraphError(f"uniformity k must be >= 2, got {self.k}")
        if self.n < self.k:
            raise HypergraphError(f"vertex count n={self.n} is smaller than k={self.k}")
        if not self.edges:
            raise HypergraphError("a hypergraph needs at least one edge")
        prev = None
        seen = set()
        for e in self.edges:
            if len(e) != self.k:
                raise HypergraphError(f"edge {list(e)} has {len(e)} vertices, expected {self.k}", e)
            for v in e:
                if not (0 <= v < self.n):
                    raise HypergraphError(f"edge {list(e)} has vertex {v} outside [0, {self.n})", e)
            if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
                raise HypergraphError(f"edge {list(e)} is not strictly ascending", e)
            if e in seen:
                raise HypergraphError(f"duplicate edge {list(e)}", e)
            if prev is not None and e < prev:
                raise HypergraphError(f"edge {list(e)} breaks lexicographic edge order", e)
            seen.add(e)
            prev = e
        covered = set().union(*map(set, self.edges))
        if len(covered) != self.n:
            missing = min(set(range(self.n)) - covered)
            raise HypergraphError(f"vertex {missing} is isolated")

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], k: int | None = None, n: int | None = None) -> Hypergraph:
        """Normalize ``edges`` into canonical storage order and build the hypergraph.

        ``k`` and ``n`` default to the edge size and ``max vertex + 1``.
        Duplicate vertices inside an edge or duplicate edges are rejected,
        not merged.
        """
        norm = []
        for e in edges:
            e = list(e)
            s = tuple(sorted(e))
            if len(set(s)) != len(s):
                raise HypergraphError(f"edge {e} repeats a vertex", s)
            norm.append(s)
        if not norm:
            raise HypergraphError("a hypergraph needs at least one edge")
        if k is None:
            k = len(norm[0])
        if n is None:
            n = max(max(e) for e in norm) + 1
        if len(set(norm)) != len(norm):
            dup = next(e for e in norm if norm.count(e) > 1)
            raise HypergraphError(f"duplicate edge {list(dup)}", dup)
        return cls(k, n, tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident with each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    def relabel(self, perm: Sequence[int]) -> Hypergraph:
        """Image of the hypergraph under the vertex map ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise HypergraphError("relabeling must be a permutation of range(n)")
        return Hypergraph.from_edges(([perm[v] for v in e] for e in self.edges), self.k, self.n)

    def replace_edges(self, drop: Iterable[int], add: Iterable[Iterable[int]]) -> Hypergraph:
        drop = set(drop)
        kept = [e for j, e in enumerate(self.edges) if j not in drop]
        return Hypergraph.from_edges(kept + [list(e) for e in add], self.k, self.n)

    def edge_index(self, edge: Iterable[int]) -> int:
        return self.edges.index(tuple(sorted(edge)))

    def to_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def from_dict(data: dict) -> Hypergraph:
    """Strict reader for the ``{"k", "n", "edges"}`` format: no silent normalization."""
    try:
        k, n, edges = data["k"], data["n"], data["edges"]
    except (KeyError, TypeError) as exc:
        raise HypergraphError(f"missing field in hypergraph JSON: {exc}") from None
    if not isinstance(k, int) or not isinstance(n, int) or isinstance(k, bool) or isinstance(n, bool):
        raise HypergraphError("k and n must be integers")
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise HypergraphError("edges must be a list of lists")
    for e in edges:
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in e):
            raise HypergraphError(f"edge {e} contains a non-integer vertex id", None)
    return Hypergraph(k, n, tuple(tuple(e) for e in edges))


def loads(text: str) -> Hypergraph:
    return from_dict(json.loads(text))


@dataclass(frozen=True)
class Cycle:
    """Alternating cycle ``v0 e0 v1 e1 ... v_{q-1} e_{q-1} v0``; ``edges[i]`` holds ``vertices[i]`` and ``vertices[i+1]``."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": list(self.edges)}


@dataclass(frozen=True)
class StructureReport:
    connected: bool
    cyclomatic_r: int
    cycle: Cycle | None
    degree_min: int
    degree_max: int
    pendant_edges: frozenset[int] = field(default_factory=frozenset)
    pp_vertices: frozenset[int] = field(default_factory=frozenset)

    @property
    def unicyclic(self) -> bool:
        return self.connected and self.cyclomatic_r == 1

    @property
    def supertree(self) -> bool:
        return self.connected and self.cyclomatic_r == 0


def components(h: Hypergraph) -> list[list[int]]:
    seen = [False] * h.n
    comps = []
    for s in range(h.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for j in h.incidence[v]:
                for u in h.edges[j]:
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        queue.append(u)
        comps.append(sorted(comp))
    return comps


def is_connected(h: Hypergraph) -> bool:
    return len(components(h)) == 1


def pendant_edges(h: Hypergraph) -> frozenset[int]:
    deg = h.degrees
    return frozenset(j for j, e in enumerate(h.edges) if sum(deg[v] > 1 for v in e) == 1)


def _normalize_cycle(vs: list[int], es: list[int]) -> Cycle:
    q = len(es)
    best = None
    for i in range(q):
        fwd = (tuple(vs[(i + j) % q] for j in range(q)), tuple(es[(i + j) % q] for j in range(q)))
        rev = (tuple(vs[(i - j) % q] for j in range(q)), tuple(es[(i - j - 1) % q] for j in range(q)))
        for cand in (fwd, rev):
            if best is None or cand < best:
                best = cand
    return Cycle(*best)


def find_cycles(h: Hypergraph, length: int) -> list[Cycle]:
    """All cycles of exactly ``length`` edges, each in normalized form."""
    found = set()

    def dfs(start, v, vs, es):
        if len(es) == length - 1:
            for j in h.incidence[v]:
                if j not in es and start in h.edges[j]:
                    found.add(_normalize_cycle(vs, es + [j]))
            return
        for j in h.incidence[v]:
            if j in es:
                continue
            for u in h.edges[j]:
                # start is the smallest cycle vertex
                if u > start and u not in vs:
                    dfs(start, u, vs + [u], es + [j])

    for s in range(h.n):
        dfs(s, s, [s], [])
    return sorted(found, key=lambda c: (c.vertices, c.edges))


def shortest_cycle(h: Hypergraph) -> Cycle | None:
    """Lexicographically least cycle among those of minimum length."""
    for q in range(2, min(h.n, h.m) + 1):
        cycles = find_cycles(h, q)
        if cycles:
            return cycles[0]
    return None


def validate(h: Hypergraph) -> StructureReport:
    comps = components(h)
    connected = len(comps) == 1
    # cyclomatic number of the vertex/edge incidence graph
    r = (h.k - 1) * h.m - (h.n - len(comps))
    cycle = shortest_cycle(h) if r > 0 else None
    pend = pendant_edges(h)
    deg = h.degrees
    pp = frozenset(v for j in pend for v in h.edges[j] if deg[v] == 1)
    return StructureReport(connected, r, cycle, min(deg), max(deg), pend, pp)


def distance(h: Hypergraph, u: int, v: int) -> int:
    """Length of a shortest alternating vertex/edge path from ``u`` to ``v``."""
    if not is_connected(h):
        raise DisconnectedError("distance is only defined on connected hypergraphs")
    for w in (u, v):
        if not (0 <= w < h.n):
            raise HypergraphError(f"vertex {w} outside [0, {h.n})")
    dist = {u: 0}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == v:
            return dist[a]
        for j in h.incidence[a]:
            for b in h.edges[j]:
                if b not in dist:
                    dist[b] = dist[a] + 1
                    queue.append(b)
    raise DisconnectedError(f"no path from {u} to {v}")
