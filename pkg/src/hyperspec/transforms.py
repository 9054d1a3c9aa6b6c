"""Edge-moving and edge-switching surgeries, with the eigenvector hypotheses
under which they raise the spectral radius."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .hypergraph import Hypergraph, HypergraphError
from .spectral import EigenPair


class TransformError(HypergraphError):
    pass


@dataclass(frozen=True)
class MoveSpec:
    """Move edge ``edge_indices[i]`` off ``from_vertices[i]`` onto ``target_u``."""

    edge_indices: tuple[int, ...]
    from_vertices: tuple[int, ...]
    target_u: int

    def __init__(self, edge_indices: Sequence[int], from_vertices: Sequence[int], target_u: int):
        object.__setattr__(self, "edge_indices", tuple(edge_indices))
        object.__setattr__(self, "from_vertices", tuple(from_vertices))
        object.__setattr__(self, "target_u", target_u)
        if len(self.edge_indices) != len(self.from_vertices):
            raise TransformError("edge_indices and from_vertices differ in length")


@dataclass(frozen=True)
class SwitchSpec:
    """Exchange ``u1`` (inside edge e) with ``v1`` (inside edge f)."""

    edge_e: int
    edge_f: int
    u1: frozenset[int]
    v1: frozenset[int]

    def __init__(self, edge_e: int, edge_f: int, u1, v1):
        object.__setattr__(self, "edge_e", edge_e)
        object.__setattr__(self, "edge_f", edge_f)
        object.__setattr__(self, "u1", frozenset(u1))
        object.__setattr__(self, "v1", frozenset(v1))


def moved_edges(h: Hypergraph, spec: MoveSpec) -> list[tuple[int, ...]]:
    if len(set(spec.edge_indices)) != len(spec.edge_indices):
        raise TransformError("an edge is listed twice in the move")
    out = []
    for j, v in zip(spec.edge_indices, spec.from_vertices):
        if not (0 <= j < h.m):
            raise TransformError(f"edge index {j} out of range")
        e = h.edges[j]
        if spec.target_u in e:
            raise TransformError(f"target {spec.target_u} already lies in edge {list(e)}", e)
        if v not in e:
            raise TransformError(f"vertex {v} is not in edge {list(e)}", e)
        out.append(tuple(sorted((set(e) - {v}) | {spec.target_u})))
    return out


def move_edges(h: Hypergraph, spec: MoveSpec) -> Hypergraph:
    if not spec.edge_indices:
        return h
    if not (0 <= spec.target_u < h.n):
        raise TransformError(f"target vertex {spec.target_u} out of range")
    new = moved_edges(h, spec)
    try:
        return h.replace_edges(spec.edge_indices, new)
    except HypergraphError as exc:
        raise TransformError(f"move rejected: {exc}", exc.edge) from None


def switched_edges(h: Hypergraph, spec: SwitchSpec) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if spec.edge_e == spec.edge_f:
        raise TransformError("switch needs two different edges")
    for j in (spec.edge_e, spec.edge_f):
        if not (0 <= j < h.m):
            raise TransformError(f"edge index {j} out of range")
    e, f = set(h.edges[spec.edge_e]), set(h.edges[spec.edge_f])
    r = len(spec.u1)
    if r != len(spec.v1) or not (1 <= r <= h.k - 1):
        raise TransformError(f"switch sets must both have size in [1, {h.k - 1}]")
    if not spec.u1 <= e or not spec.v1 <= f:
        raise TransformError("u1 must lie in e and v1 in f")
    e_new = (e - spec.u1) | spec.v1
    f_new = (f - spec.v1) | spec.u1
    if len(e_new) != h.k or len(f_new) != h.k:
        raise TransformError("switched edges would repeat a vertex")
    return tuple(sorted(e_new)), tuple(sorted(f_new))


def switch_edges(h: Hypergraph, spec: SwitchSpec) -> Hypergraph:
    e_new, f_new = switched_edges(h, spec)
    try:
        return h.replace_edges((spec.edge_e, spec.edge_f), (e_new, f_new))
    except HypergraphError as exc:
        raise TransformError(f"switch rejected: {exc}", exc.edge) from None


def check_move_hypothesis(h: Hypergraph, spec: MoveSpec, pair: EigenPair, tol: float = 1e-10) -> bool:
    """x_u exceeds every x_{v_i} by more than 10*tol."""
    x = np.asarray(pair.x)
    if not spec.from_vertices:
        return False
    return bool(x[spec.target_u] - max(x[v] for v in spec.from_vertices) > 10 * tol)


def check_switch_hypothesis(h: Hypergraph, spec: SwitchSpec, pair: EigenPair, tol: float = 1e-10) -> bool:
    """x_{U1} >= x_{V1} and x_{U2} <= x_{V2}, one of them with slack above 10*tol.

    A switch that leaves the edge set unchanged (for instance U1 = V1, or
    e' = f and f' = e) cannot raise rho and is reported as False.
    """
    try:
        e_new, f_new = switched_edges(h, spec)
    except TransformError:
        return False
    if {e_new, f_new} == {h.edges[spec.edge_e], h.edges[spec.edge_f]}:
        return False
    x = np.asarray(pair.x)
    u2 = set(h.edges[spec.edge_e]) - spec.u1
    v2 = set(h.edges[spec.edge_f]) - spec.v1

    def prod(vs):
        return float(np.prod([x[v] for v in vs]))

    d1 = prod(spec.u1) - prod(spec.v1)
    d2 = prod(v2) - prod(u2)
    slack = 10 * tol
    return (d1 >= 0 and d2 >= 0) and (d1 > slack or d2 > slack)
