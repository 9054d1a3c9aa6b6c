"""Random instance generators for property tests."""

from __future__ import annotations

import random

from hyperspec.hypergraph import Hypergraph


def random_connected(rng: random.Random, k: int, m: int, p_closed: float = 0.25) -> Hypergraph:
    """Connected k-graph grown edge by edge; each new edge reuses 1..k existing vertices."""
    while True:
        edges = {tuple(range(k))}
        n = k
        attempts = 0
        while len(edges) < m and attempts < 200:
            attempts += 1
            if n >= k and rng.random() < p_closed:
                reuse = k
            else:
                reuse = rng.randint(1, min(k - 1, n))
            old = rng.sample(range(n), reuse)
            new = list(range(n, n + k - reuse))
            e = tuple(sorted(old + new))
            if e in edges:
                continue
            edges.add(e)
            n += len(new)
        if len(edges) == m:
            return Hypergraph.from_edges(edges, k, n)


def random_unicyclic(rng: random.Random, k: int, m: int) -> Hypergraph:
    """Random cycle seed grown by leaf edges at random anchors."""
    from hyperspec.enumeration import attach_leaf_edge, cycle_seed

    q = rng.randint(2, m)
    h = cycle_seed(k, q)
    for _ in range(m - q):
        h = attach_leaf_edge(h, rng.randrange(h.n))
    perm = list(range(h.n))
    rng.shuffle(perm)
    return h.relabel(perm)


def shuffled(rng: random.Random, h: Hypergraph) -> Hypergraph:
    perm = list(range(h.n))
    rng.shuffle(perm)
    return h.relabel(perm)


def feasible_params(ks=(3, 4), m_max=8):
    """Every family parameter tuple with a nonnegative edge budget."""
    from hyperspec.families import FamilyError, FamilyParams

    out = []
    for k in ks:
        for m in range(2, m_max + 1):
            for f in (0, 1):
                for r in range(k - 1):
                    for s in range(k - 1):
                        for w in range(k - 1):
                            for t in range(m):
                                try:
                                    out.append(FamilyParams(k, m, f, r, s, t, w))
                                except FamilyError:
                                    break
    return out


def random_valid_move(rng: random.Random, k: int = 3, m_max: int = 6, tol: float = 1e-10):
    """(h, spec, pair) for a move whose eigenvector hypothesis holds strictly
    and whose result is connected."""
    from hyperspec.hypergraph import HypergraphError, is_connected
    from hyperspec.spectral import principal_eigenpair
    from hyperspec.transforms import MoveSpec, check_move_hypothesis, move_edges

    while True:
        h = random_connected(rng, k, rng.randint(2, m_max))
        pair = principal_eigenpair(h)
        u = rng.randrange(h.n)
        options = [(j, v) for j, e in enumerate(h.edges) if u not in e
                   for v in e if pair.x[v] < pair.x[u] - 10 * tol]
        if not options:
            continue
        rng.shuffle(options)
        chosen, seen = [], set()
        for j, v in options[: rng.randint(1, len(options))]:
            if j not in seen:
                seen.add(j)
                chosen.append((j, v))
        spec = MoveSpec([j for j, _ in chosen], [v for _, v in chosen], u)
        try:
            g = move_edges(h, spec)
        except HypergraphError:
            continue
        if is_connected(g) and check_move_hypothesis(h, spec, pair, tol):
            return h, spec, pair, g


def random_valid_switch(rng: random.Random, k: int = 3, m_max: int = 6, tol: float = 1e-10):
    """(h, spec, pair, g) for a switch whose eigenvector hypotheses hold, one strictly,
    with a connected result."""
    from hyperspec.hypergraph import HypergraphError, is_connected
    from hyperspec.spectral import principal_eigenpair
    from hyperspec.transforms import SwitchSpec, check_switch_hypothesis, switch_edges

    while True:
        h = random_connected(rng, k, rng.randint(2, m_max))
        pair = principal_eigenpair(h)
        for _ in range(30):
            a, b = rng.sample(range(h.m), 2)
            r = rng.randint(1, k - 1)
            spec = SwitchSpec(a, b, rng.sample(h.edges[a], r), rng.sample(h.edges[b], r))
            if not check_switch_hypothesis(h, spec, pair, tol):
                continue
            try:
                g = switch_edges(h, spec)
            except HypergraphError:
                continue
            if is_connected(g):
                return h, spec, pair, g


def preset_instances(ks=(3, 4), m_max=8):
    """(case, k, m, z) for every z whose extremal case applies at (k, m)."""
    from hyperspec.families import InfeasibleCase, case_for

    out = []
    for k in ks:
        for m in range(2, m_max + 1):
            for z in range(1, m):
                try:
                    out.append((case_for(k, m, z), k, m, z))
                except InfeasibleCase:
                    pass
    return out


def random_small(rng: random.Random, k: int = 3, n_max: int = 8) -> Hypergraph:
    """Random k-graph on at most n_max vertices, not necessarily connected."""
    import itertools

    while True:
        n = rng.randint(k, n_max)
        pool = list(itertools.combinations(range(n), k))
        m = rng.randint(1, min(len(pool), 7))
        edges = rng.sample(pool, m)
        if len(set().union(*edges)) == n:
            return Hypergraph.from_edges(edges, k, n)
