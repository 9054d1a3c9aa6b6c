"""Canonical labeling and automorphism orbits by refinement plus backtracking.

The search tree is the usual individualize/refine tree over vertex colorings.
Leaves are discrete colorings; the canonical form is the lexicographically
least relabeled edge list over all leaves. Leaves that reproduce the first or
the current best form yield automorphisms, which prune sibling branches and
give the orbit partition.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from functools import total_ordering

from .hypergraph import Hypergraph

Form = tuple[tuple[int, ...], ...]


@total_ordering
@dataclass(frozen=True)
class CanonicalKey:
    """Isomorphism-invariant fingerprint: equal keys iff isomorphic hypergraphs."""

    data: bytes

    def hex(self) -> str:
        return self.data.hex()

    @classmethod
    def fromhex(cls, text: str) -> CanonicalKey:
        return cls(bytes.fromhex(text))

    def __lt__(self, other: CanonicalKey) -> bool:
        return self.data < other.data

    def __str__(self) -> str:
        return self.hex()


def _encode(k: int, n: int, form: Form) -> bytes:
    flat = [k, n, len(form)] + [v for e in form for v in e]
    return struct.pack(f">{len(flat)}H", *flat)


def _rank(signatures: list) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [order[s] for s in signatures]


def _refine(h: Hypergraph, colors: list[int]) -> list[int]:
    ncls = len(set(colors))
    while True:
        sig = []
        for v in range(h.n):
            around = sorted(
                tuple(sorted(colors[u] for u in h.edges[j] if u != v)) for j in h.incidence[v]
            )
            sig.append((colors[v], tuple(around)))
        colors = _rank(sig)
        new = len(set(colors))
        if new == ncls:
            return colors
        ncls = new


def _individualize(h: Hypergraph, colors: list[int], v: int) -> list[int]:
    return _refine(h, _rank([(c, u != v) for u, c in enumerate(colors)]))


def _target_cell(colors: list[int]) -> list[int] | None:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


class _Search:
    def __init__(self, h: Hypergraph):
        self.h = h
        self.first: tuple[Form, list[int], list[int]] | None = None
        self.best: tuple[Form, list[int], list[int]] | None = None
        self.generators: list[tuple[int, ...]] = []

    def run(self):
        self._visit(_refine(self.h, [0] * self.h.n), [])

    def _form(self, labels: list[int]) -> Form:
        return tuple(sorted(tuple(sorted(labels[v] for v in e)) for e in self.h.edges))

    def _automorphism(self, ref_labels: list[int], labels: list[int]) -> tuple[int, ...]:
        inv = [0] * self.h.n
        for v, c in enumerate(ref_labels):
            inv[c] = v
        return tuple(inv[labels[v]] for v in range(self.h.n))

    @staticmethod
    def _common(a: list[int], b: list[int]) -> int:
        i = 0
        while i < min(len(a), len(b)) and a[i] == b[i]:
            i += 1
        return i

    def _leaf(self, labels: list[int], path: list[int]) -> int | None:
        form = self._form(labels)
        if self.first is None:
            self.first = self.best = (form, labels, path)
            return None
        if form == self.first[0]:
            gen = self._automorphism(self.first[1], labels)
            self.generators.append(gen)
            return self._common(path, self.first[2])
        if form == self.best[0]:
            gen = self._automorphism(self.best[1], labels)
            self.generators.append(gen)
            return self._common(path, self.best[2])
        if form < self.best[0]:
            self.best = (form, labels, path)
        return None

    def _stabilizer_orbits(self, path: list[int]) -> _UnionFind:
        uf = _UnionFind(self.h.n)
        for g in self.generators:
            if all(g[v] == v for v in path):
                for v, w in enumerate(g):
                    uf.union(v, w)
        return uf

    def _visit(self, colors: list[int], path: list[int]) -> int | None:
        cell = _target_cell(colors)
        if cell is None:
            return self._leaf(colors, path)
        depth = len(path)
        explored: list[int] = []
        for v in cell:
            if explored:
                uf = self._stabilizer_orbits(path)
                if any(uf.find(v) == uf.find(w) for w in explored):
                    continue
            jump = self._visit(_individualize(self.h, colors, v), path + [v])
            explored.append(v)
            if jump is not None and jump < depth:
                return jump
        return None


@dataclass(frozen=True)
class Canonical:
    key: CanonicalKey
    labeling: tuple[int, ...]  # vertex v gets canonical label labeling[v]
    generators: tuple[tuple[int, ...], ...]

    def orbits(self) -> tuple[frozenset[int], ...]:
        n = len(self.labeling)
        uf = _UnionFind(n)
        for g in self.generators:
            for v, w in enumerate(g):
                uf.union(v, w)
        blocks: dict[int, set[int]] = {}
        for v in range(n):
            blocks.setdefault(uf.find(v), set()).add(v)
        return tuple(sorted((frozenset(b) for b in blocks.values()), key=min))


def canonicalize(h: Hypergraph) -> Canonical:
    s = _Search(h)
    s.run()
    form, labels, _ = s.best
    return Canonical(CanonicalKey(_encode(h.k, h.n, form)), tuple(labels), tuple(s.generators))


def canonical_key(h: Hypergraph) -> CanonicalKey:
    return canonicalize(h).key


def canonical_form(h: Hypergraph) -> Hypergraph:
    """The canonical representative of the isomorphism class of ``h``."""
    return h.relabel(canonicalize(h).labeling)


def automorphism_orbits(h: Hypergraph) -> tuple[frozenset[int], ...]:
    return canonicalize(h).orbits()


def is_isomorphic(a: Hypergraph, b: Hypergraph) -> bool:
    return canonical_key(a) == canonical_key(b)
