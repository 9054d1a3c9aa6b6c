"""Exact matching number by branch and bound over vertex bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .hypergraph import Hypergraph, is_connected


@dataclass(frozen=True)
class MatchingResult:
    alpha: int
    witness: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"alpha": self.alpha, "witness": list(self.witness)}


def _masks(h: Hypergraph) -> list[int]:
    return [sum(1 << v for v in e) for e in h.edges]


def _max_packing(masks: list[int], k: int, candidates: list[int], used: int = 0) -> int:
    """Size of a largest pairwise-disjoint subfamily of ``candidates`` avoiding ``used``."""
    best = 0

    def rec(cands: list[int], used: int, size: int):
        nonlocal best
        if size > best:
            best = size
        if not cands:
            return
        free = 0
        for j in cands:
            free |= masks[j]
        bound = size + min(len(cands), bin(free & ~used).count("1") // k)
        if bound <= best:
            return
        head, rest = cands[0], cands[1:]
        rec([j for j in rest if not masks[j] & masks[head]], used | masks[head], size + 1)
        rec(rest, used, size)

    rec([j for j in candidates if not masks[j] & used], used, 0)
    return best


def matching_number(h: Hypergraph) -> MatchingResult:
    """Matching number with the lexicographically least maximum matching as witness."""
    masks = _masks(h)
    deg = h.degrees
    order = sorted(range(h.m), key=lambda j: (sum(deg[v] for v in h.edges[j]), j))
    alpha = _max_packing(masks, h.k, order)

    witness: list[int] = []
    used = 0
    for j in range(h.m):
        if len(witness) == alpha:
            break
        if masks[j] & used:
            continue
        rest = [i for i in order if i > j]
        if len(witness) + 1 + _max_packing(masks, h.k, rest, used | masks[j]) == alpha:
            witness.append(j)
            used |= masks[j]
    return MatchingResult(alpha, tuple(witness))


def class_filter(h: Hypergraph, z: int, mode: Literal["atleast", "exact"] = "atleast") -> bool:
    """Membership in the unicyclic classes with matching number >= z or == z."""
    if mode not in ("atleast", "exact"):
        raise ValueError(f"unknown mode {mode!r}")
    if not is_connected(h) or (h.k - 1) * h.m - (h.n - 1) != 1:
        return False
    alpha = matching_number(h).alpha
    return alpha >= z if mode == "atleast" else alpha == z
