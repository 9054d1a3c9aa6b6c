"""Isomorph-free generation of connected unicyclic hypergraphs and supertrees.

Every unicyclic hypergraph peels down to its cycle by removing leaf edges, so
growing cycle seeds by leaf edges (one old anchor vertex plus k-1 fresh ones)
reaches every class; duplicates are dropped by canonical key.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from .canon import CanonicalKey, canonicalize
from .hypergraph import Hypergraph


class EnumerationCapError(RuntimeError):
    def __init__(self, message: str, partial_count: int):
        super().__init__(message)
        self.partial_count = partial_count


@dataclass(frozen=True)
class GenSpec:
    k: int
    m: int
    shape: Literal["unicyclic", "supertree"] = "unicyclic"
    max_cycle_len: int | None = None
    cap: int = 1_000_000

    def __post_init__(self):
        if self.k < 3:
            raise ValueError("k must be at least 3")
        if self.shape not in ("unicyclic", "supertree"):
            raise ValueError(f"unknown shape {self.shape!r}")
        if self.m < (2 if self.shape == "unicyclic" else 1):
            raise ValueError(f"m={self.m} is too small for shape {self.shape}")


def cycle_seed(k: int, q: int) -> Hypergraph:
    """The bare q-cycle: two edges sharing two vertices for q=2, else a linear cycle."""
    if q == 2:
        edges = [list(range(k)), [0, 1] + list(range(k, 2 * k - 2))]
    else:
        edges = []
        nxt = q
        for i in range(q):
            edges.append([i, (i + 1) % q] + list(range(nxt, nxt + k - 2)))
            nxt += k - 2
    return Hypergraph.from_edges(edges, k)


def attach_leaf_edge(h: Hypergraph, anchor: int) -> Hypergraph:
    new = [anchor] + list(range(h.n, h.n + h.k - 1))
    return Hypergraph.from_edges([*h.edges, new], h.k, h.n + h.k - 1)


def _canonical(h: Hypergraph) -> tuple[CanonicalKey, Hypergraph]:
    c = canonicalize(h)
    return c.key, h.relabel(c.labeling)


def generate(spec: GenSpec) -> Iterator[Hypergraph]:
    """Yield one canonical representative per isomorphism class, in key order."""
    k = spec.k
    if spec.shape == "supertree":
        seeds = {1: [Hypergraph.from_edges([range(k)], k)]}
    else:
        qmax = min(spec.m, spec.max_cycle_len or spec.m)
        seeds = {q: [cycle_seed(k, q)] for q in range(2, qmax + 1)}
    seen = 0
    level: dict[CanonicalKey, Hypergraph] = {}
    for size in range(min(seeds), spec.m + 1):
        nxt: dict[CanonicalKey, Hypergraph] = {}
        candidates = list(seeds.get(size, []))
        for g in level.values():
            candidates.extend(attach_leaf_edge(g, v) for v in range(g.n))
        for g in candidates:
            key, rep = _canonical(g)
            if key not in nxt:
                nxt[key] = rep
                seen += 1
                if seen > spec.cap:
                    raise EnumerationCapError(
                        f"instance cap {spec.cap} exceeded at {size} edges", seen - 1)
        level = nxt
    for key in sorted(level):
        yield level[key]


def count(spec: GenSpec) -> int:
    return sum(1 for _ in generate(spec))
