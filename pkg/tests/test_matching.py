import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from hyperspec.enumeration import GenSpec, generate
from hyperspec.hypergraph import Hypergraph
from hyperspec.matching import class_filter, matching_number

from instances import random_connected
from oracles import brute_matching_number

TWO_CYCLE = Hypergraph.from_edges([[0, 1, 2], [0, 1, 3]])


def lex_least_maximum(edges, alpha):
    sets = [set(e) for e in edges]
    for combo in itertools.combinations(range(len(edges)), alpha):
        if all(not (sets[i] & sets[j]) for i, j in itertools.combinations(combo, 2)):
            return combo


def test_examples():
    assert matching_number(Hypergraph.from_edges([[0, 1, 2]])).to_dict() == {"alpha": 1, "witness": [0]}
    assert matching_number(TWO_CYCLE).alpha == 1


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), m=st.integers(1, 12), k=st.sampled_from([3, 4]))
def test_agrees_with_brute_force(seed, m, k):
    h = random_connected(random.Random(seed), k, m)
    res = matching_number(h)
    assert res.alpha == brute_matching_number(h.edges)
    assert res.witness == lex_least_maximum(h.edges, res.alpha)


def test_witness_is_disjoint(rng):
    for _ in range(40):
        h = random_connected(rng, 3, rng.randint(1, 10))
        res = matching_number(h)
        assert len(res.witness) == res.alpha
        used = [v for j in res.witness for v in h.edges[j]]
        assert len(used) == len(set(used))


def test_edge_deletion_changes_alpha_by_at_most_one(rng):
    for _ in range(40):
        h = random_connected(rng, 3, rng.randint(2, 9))
        alpha = matching_number(h).alpha
        for j in range(h.m):
            rest = [e for i, e in enumerate(h.edges) if i != j]
            sub = brute_matching_number(rest)
            assert alpha - 1 <= sub <= alpha


def test_unicyclic_corpus_bound():
    for m in range(2, 6):
        for h in generate(GenSpec(3, m)):
            assert matching_number(h).alpha <= m - 1


class TestClassFilter:
    def test_two_cycle(self):
        assert class_filter(TWO_CYCLE, 1, "exact")
        assert class_filter(TWO_CYCLE, 1, "atleast")
        assert not class_filter(TWO_CYCLE, 2, "atleast")

    def test_supertree_never_member(self):
        path = Hypergraph.from_edges([[0, 1, 2], [2, 3, 4]])
        assert not any(class_filter(path, z, mode) for z in (1, 2) for mode in ("atleast", "exact"))

    def test_disconnected_never_member(self):
        h = Hypergraph.from_edges([[0, 1, 2], [0, 1, 3], [4, 5, 6]])
        assert not class_filter(h, 1)

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            class_filter(TWO_CYCLE, 1, "most")
