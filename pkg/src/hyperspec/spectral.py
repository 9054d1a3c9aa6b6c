"""Spectral radius and principal eigenvector of a hypergraph adjacency tensor.

The adjacency tensor puts weight 1/(k-1)! on every ordering of every edge, so
the contraction ``A x^{k-1}`` collapses to one leave-one-out product per edge
and vertex. The solver is a shifted power iteration on ``x -> (A x^{k-1} +
shift * x^{[k-1]})^{[1/(k-1)]}`` with min/max ratio bounds on the spectral
radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .hypergraph import DisconnectedError, Hypergraph, HypergraphError, is_connected


class ConvergenceError(RuntimeError):
    """The iteration did not close the bracket within ``max_iter`` steps."""

    def __init__(self, message: str, lower: float, upper: float, iterations: int):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.iterations = iterations


@dataclass(frozen=True)
class SolverConfig:
    tol: float = 1e-10
    max_iter: int = 1_000_000
    shift: float = 1.0

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")
        if not self.shift >= 0:
            raise ValueError("shift must be nonnegative")


@dataclass(frozen=True)
class EigenPair:
    rho: float
    x: np.ndarray = field(repr=False)
    residual: float
    iterations: int
    lower: float = math.nan
    upper: float = math.nan

    def to_json(self) -> str:
        def fmt(v):
            return format(float(v), "#.17g")

        xs = ", ".join(fmt(v) for v in self.x)
        return (
            f'{{"rho": {fmt(self.rho)}, "x": [{xs}], '
            f'"residual": {fmt(self.residual)}, "iterations": {int(self.iterations)}}}'
        )


def _edge_array(h: Hypergraph) -> np.ndarray:
    return np.asarray(h.edges, dtype=np.intp)


def _leave_one_out(vals: np.ndarray) -> np.ndarray:
    """Row-wise products of all entries but one, via prefix and suffix products."""
    m, k = vals.shape
    prefix = np.ones((m, k))
    suffix = np.ones((m, k))
    for i in range(1, k):
        prefix[:, i] = prefix[:, i - 1] * vals[:, i - 1]
        suffix[:, k - 1 - i] = suffix[:, k - i] * vals[:, k - i]
    return prefix * suffix


def _apply(edges: np.ndarray, x: np.ndarray, n: int) -> np.ndarray:
    loo = _leave_one_out(x[edges])
    return np.bincount(edges.ravel(), weights=loo.ravel(), minlength=n)


def apply_adjacency(h: Hypergraph, x) -> np.ndarray:
    """``(A x^{k-1})_v``: sum over edges at v of the product of the other entries."""
    x = np.asarray(x, dtype=float)
    if x.shape != (h.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({h.n},)")
    return _apply(_edge_array(h), x, h.n)


def rayleigh_value(h: Hypergraph, x) -> float:
    """``x^T A x^{k-1} = k * sum_e prod_{v in e} x_v`` on the unit k-norm sphere."""
    x = np.asarray(x, dtype=float)
    if x.shape != (h.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({h.n},)")
    if np.any(x < 0):
        raise ValueError("vector must be nonnegative")
    norm = float(np.sum(x ** h.k))
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"vector is not normalized: sum x^k = {norm!r}")
    return h.k * float(np.prod(x[_edge_array(h)], axis=1).sum())


def residual(h: Hypergraph, rho: float, x) -> float:
    x = np.asarray(x, dtype=float)
    return float(np.max(np.abs(apply_adjacency(h, x) - rho * x ** (h.k - 1))))


def principal_eigenpair(h: Hypergraph, cfg: SolverConfig | None = None) -> EigenPair:
    cfg = cfg or SolverConfig()
    if not is_connected(h):
        raise DisconnectedError("the principal eigenpair needs a connected hypergraph")
    k, n = h.k, h.n
    edges = _edge_array(h)
    x = np.full(n, n ** (-1.0 / k))
    lo = hi = math.nan
    for it in range(1, cfg.max_iter + 1):
        ax = _apply(edges, x, n)
        xk1 = x ** (k - 1)
        ratio = ax / xk1
        lo, hi = float(ratio.min()), float(ratio.max())
        if hi - lo <= cfg.tol:
            rho = 0.5 * (lo + hi)
            res = float(np.max(np.abs(ax - rho * xk1)))
            return EigenPair(rho, x, res, it, lo, hi)
        y = ax + cfg.shift * xk1
        x = y ** (1.0 / (k - 1))
        x /= np.sum(x ** k) ** (1.0 / k)
    raise ConvergenceError(
        f"no convergence in {cfg.max_iter} iterations: rho in [{lo}, {hi}]", lo, hi, cfg.max_iter
    )


def spectral_radius(h: Hypergraph, cfg: SolverConfig | None = None) -> float:
    return principal_eigenpair(h, cfg).rho


@dataclass(frozen=True)
class IdentityReport:
    """Defects |x(v) - closed form| keyed by vertex class, with the formula used."""

    defects: dict[str, float]
    predicted: dict[str, float]
    case: str

    @property
    def max_defect(self) -> float:
        return max(self.defects.values(), default=0.0)


def _is_pendant_at(h: Hypergraph, j: int, v: int) -> bool:
    deg = h.degrees
    return v in h.edges[j] and all(deg[u] == 1 for u in h.edges[j] if u != v)


def _arm_classes(h: Hypergraph, e: int, skip: set[int], pendant_count: int, where: str):
    """Split ``edges[e] - skip`` into vertices carrying one pendant edge and bare ones."""
    deg = h.degrees
    loaded, bare = [], []
    for v in h.edges[e]:
        if v in skip:
            continue
        if deg[v] == 1:
            bare.append(v)
        elif deg[v] == 2:
            other = next(j for j in h.incidence[v] if j != e)
            if not _is_pendant_at(h, other, v):
                raise HypergraphError(f"{where}: vertex {v} carries a non-pendant edge")
            loaded.append(v)
        else:
            raise HypergraphError(f"{where}: vertex {v} has degree {deg[v]}, expected 1 or 2")
    if len(loaded) != pendant_count:
        raise HypergraphError(
            f"{where}: {len(loaded)} vertices carry pendant edges, expected {pendant_count}"
        )
    return loaded, bare


def check_closed_form_F(h: Hypergraph, anchor_u: int, e: int, pendant_count_t: int, pair: EigenPair) -> IdentityReport:
    """Compare eigenvector entries on an edge at ``anchor_u`` with the closed forms.

    Configuration: edge ``e`` contains ``u``; exactly ``t`` of its other
    vertices have degree 2 and carry one pendant edge each, the rest have
    degree 1.
    """
    k, t = h.k, pendant_count_t
    if not (0 <= t <= k - 1):
        raise HypergraphError(f"pendant count t={t} outside [0, {k - 1}]")
    if anchor_u not in h.edges[e]:
        raise HypergraphError(f"vertex {anchor_u} is not in edge {e}")
    if h.degrees[anchor_u] < 2:
        raise HypergraphError(f"anchor {anchor_u} must have degree >= 2")
    loaded, bare = _arm_classes(h, e, {anchor_u}, t, "F configuration")
    rho, x = pair.rho, np.asarray(pair.x)
    xu = x[anchor_u]
    damp = 1.0 - rho ** (-k)
    predicted, defects = {}, {}
    if t == k - 1:
        case = "t=k-1"
        predicted["loaded"] = xu / (rho - rho ** (-(k - 1)))
    elif t == 0:
        case = "t=0"
        predicted["bare"] = xu / rho
    else:
        case = "general"
        predicted["loaded"] = xu / (rho * damp ** ((t + 1) / k))
        predicted["bare"] = xu / (rho * damp ** (t / k))
    for name, verts in (("loaded", loaded), ("bare", bare)):
        if verts:
            defects[name] = float(max(abs(x[v] - predicted[name]) for v in verts))
    return IdentityReport(defects, predicted, case)


def check_closed_form_W(h: Hypergraph, v1: int, v2: int, e1: int, pendant_count_t: int, pair: EigenPair) -> IdentityReport:
    """Same check on a 2-cycle edge ``e1`` through ``v1, v2``.

    ``t - 1`` of the k-2 remaining vertices of ``e1`` carry one pendant edge
    each (so ``t`` runs over 1..k-1), the others have degree 1.
    """
    k, t = h.k, pendant_count_t
    if not (1 <= t <= k - 1):
        raise HypergraphError(f"t={t} outside [1, {k - 1}]")
    edge = h.edges[e1]
    if v1 not in edge or v2 not in edge or v1 == v2:
        raise HypergraphError(f"edge {e1} must contain both cycle vertices {v1} and {v2}")
    if not any(j != e1 and v1 in h.edges[j] and v2 in h.edges[j] for j in h.incidence[v1]):
        raise HypergraphError(f"{v1} and {v2} do not span a 2-cycle through edge {e1}")
    loaded, bare = _arm_classes(h, e1, {v1, v2}, t - 1, "W configuration")
    rho, x = pair.rho, np.asarray(pair.x)
    prod = x[v1] * x[v2]
    damp = 1.0 - rho ** (-k)
    predicted, defects = {}, {}
    if t == k - 1:
        case = "t=k-1"
        predicted["loaded"] = math.sqrt(prod / (rho - rho ** (-(k - 1))))
    elif t == 1:
        case = "t=1"
        predicted["bare"] = math.sqrt(prod / rho)
    else:
        case = "general"
        phi = rho * damp ** ((t + 1) / k)
        predicted["loaded"] = math.sqrt(prod / phi)
        predicted["bare"] = damp ** (1.0 / k) * predicted["loaded"]
    for name, verts in (("loaded", loaded), ("bare", bare)):
        if verts:
            defects[name] = float(max(abs(x[v] - predicted[name]) for v in verts))
    return IdentityReport(defects, predicted, case)
