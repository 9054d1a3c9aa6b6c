"""Independent brute-force oracles shared by the test modules.

None of these call into the canonical-labeling, matching or enumeration code
they are used to check.
"""

from __future__ import annotations

import itertools
from collections import deque

import networkx as nx


def relabeled_form(edges, perm):
    return tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in edges))


def brute_canonical_form(edges, n):
    """Lexicographically least edge list over all n! vertex relabelings."""
    return min(relabeled_form(edges, p) for p in itertools.permutations(range(n)))


def _degrees(edges, n):
    deg = [0] * n
    for e in edges:
        for v in e:
            deg[v] += 1
    return deg


def brute_isomorphic(a_edges, b_edges, n):
    """Search every vertex bijection that maps each vertex to one of equal degree."""
    target = tuple(sorted(tuple(sorted(e)) for e in b_edges))
    if len(a_edges) != len(b_edges):
        return False
    da, db = _degrees(a_edges, n), _degrees(b_edges, n)
    if sorted(da) != sorted(db):
        return False
    src = {d: [v for v in range(n) if da[v] == d] for d in set(da)}
    dst = {d: [v for v in range(n) if db[v] == d] for d in set(db)}
    groups = sorted(src)
    for images in itertools.product(*(itertools.permutations(dst[d]) for d in groups)):
        perm = [0] * n
        for d, img in zip(groups, images):
            for v, w in zip(src[d], img):
                perm[v] = w
        if relabeled_form(a_edges, perm) == target:
            return True
    return False


def brute_automorphism_orbits(edges, n):
    base = relabeled_form(edges, list(range(n)))
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for p in itertools.permutations(range(n)):
        if relabeled_form(edges, p) == base:
            for v in range(n):
                a, b = find(v), find(p[v])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    blocks = {}
    for v in range(n):
        blocks.setdefault(find(v), set()).add(v)
    return sorted((frozenset(b) for b in blocks.values()), key=min)


def brute_matching_number(edges):
    best = 0
    sets = [frozenset(e) for e in edges]
    for size in range(len(sets), 0, -1):
        for combo in itertools.combinations(range(len(sets)), size):
            if all(not (sets[i] & sets[j]) for i, j in itertools.combinations(combo, 2)):
                return size
    return best


def bfs_distance(edges, u, v):
    adj = {}
    for e in edges:
        for a in e:
            adj.setdefault(a, set()).update(e)
    dist = {u: 0}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b not in dist:
                dist[b] = dist[a] + 1
                queue.append(b)
    return dist[v]


def all_simple_cycles(edges, n):
    """Every cycle as (frozenset of vertices, frozenset of edge indices), by brute force
    over ordered edge sequences and vertex choices."""
    found = set()
    m = len(edges)
    sets = [set(e) for e in edges]
    for q in range(2, m + 1):
        for seq in itertools.permutations(range(m), q):
            # v_i in seq[i-1] and seq[i]; v_0 in seq[q-1] and seq[0]
            choices = [sets[seq[i - 1]] & sets[seq[i]] for i in range(q)]
            for vs in itertools.product(*choices):
                if len(set(vs)) == q:
                    found.add((frozenset(vs), frozenset(seq)))
    return found


def incidence_graph(edges, n):
    g = nx.Graph()
    g.add_nodes_from((("v", v) for v in range(n)), kind="v")
    g.add_nodes_from((("e", j) for j in range(len(edges))), kind="e")
    for j, e in enumerate(edges):
        for v in e:
            g.add_edge(("v", v), ("e", j))
    return g


def is_unicyclic_connected(edges, n, k):
    g = incidence_graph(edges, n)
    return nx.is_connected(g) and (k - 1) * len(edges) - (n - 1) == 1


def is_supertree(edges, n, k):
    g = incidence_graph(edges, n)
    return nx.is_connected(g) and (k - 1) * len(edges) == n - 1


def labeled_classes(k, m, shape="unicyclic", dedupe="permutation"):
    """Isomorphism classes of connected k-uniform hypergraphs with m edges on
    their full labeled vertex set, deduplicated either by the all-permutation
    canonical form or (for larger n) by networkx isomorphism of incidence graphs."""
    n = (k - 1) * m + (1 if shape == "supertree" else 0)
    test = is_unicyclic_connected if shape == "unicyclic" else is_supertree
    triples = list(itertools.combinations(range(n), k))
    reps = []
    buckets = {}
    for combo in itertools.combinations(triples, m):
        if len(set().union(*combo)) != n:
            continue
        if not test(combo, n, k):
            continue
        if dedupe == "permutation":
            reps.append(brute_canonical_form(combo, n))
            continue
        degs = [0] * n
        for e in combo:
            for v in e:
                degs[v] += 1
        inv = (tuple(sorted(degs)), tuple(sorted(tuple(sorted(degs[v] for v in e)) for e in combo)))
        g = incidence_graph(combo, n)
        bucket = buckets.setdefault(inv, [])
        if not any(nx.is_isomorphic(g, h, node_match=lambda a, b: a["kind"] == b["kind"]) for h in bucket):
            bucket.append(g)
    if dedupe == "permutation":
        return set(reps)
    return sum(len(b) for b in buckets.values())
