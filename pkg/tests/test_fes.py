import dataclasses

import pytest

import bruteforce
from hyperfvs import Hypergraph, exact_fes, gen, greedy_hyperforest, verify_fes
from hyperfvs.fes import fes_vs_fvs_check


def test_acyclic_keeps_everything():
    for H in [Hypergraph(5, []), gen.random_hypertree(7, 3), Hypergraph(3, [(1, 2, 3)])]:
        cert = greedy_hyperforest(H)
        assert cert.A == frozenset()
        assert len(cert.kept) == H.m
        assert cert.verify(H)


def test_fano_forest():
    H = gen.fano()
    cert = greedy_hyperforest(H)
    assert cert.kept == frozenset((0, 1, 2))
    assert cert.A == frozenset((3, 4, 5, 6))
    assert cert.k == 1
    assert cert.bound == 2 * 7 - 7 + 1
    assert cert.verify(H)
    # exhaustive minimum happens to coincide here
    assert exact_fes(H).size == 4 == bruteforce.fes_number(7, H.edges)


def test_two_cycle_union_is_tight():
    for c in (1, 2, 3):
        H = gen.two_cycle_union(c)
        cert = greedy_hyperforest(H)
        assert cert.size == c == cert.bound
        assert cert.k == 2 * c
        assert cert.verify(H)


def test_identity_and_bound_on_corpus(general_corpus, linear_corpus):
    for name, H in general_corpus[:150] + linear_corpus[:150]:
        cert = greedy_hyperforest(H)
        assert cert.verify(H), name
        assert 2 * cert.size == 2 * H.m - H.n + cert.k, name
        assert cert.size <= 2 * H.m - H.n + cert.p, name
        # residual components are hypertrees by the defining count
        assert all(n_i == 2 * m_i + 1 for n_i, m_i in cert.per_component), name


def test_residual_is_acyclic(general_corpus):
    for name, H in general_corpus[:100]:
        cert = greedy_hyperforest(H)
        assert verify_fes(H, cert.A), name
        residual = [e for j, e in enumerate(H.edges) if j not in cert.A]
        assert not bruteforce.has_cycle(H.n, residual), name


def test_verify_fes_direct():
    H = gen.loose_cycle(4)
    assert not verify_fes(H, set())
    assert verify_fes(H, {0})
    with pytest.raises(ValueError):
        verify_fes(H, {71})


def test_certificate_rejects_tampering():
    H = gen.fano()
    cert = greedy_hyperforest(H)
    assert not dataclasses.replace(cert, A=frozenset((3, 4))).verify(H)
    assert not dataclasses.replace(cert, k=3).verify(H)
    assert not dataclasses.replace(cert, bound=99).verify(H)
    assert not cert.verify(gen.loose_cycle(5))


def test_greedy_is_deterministic():
    H = gen.random_3uniform(9, 8, 123)
    assert greedy_hyperforest(H).A == greedy_hyperforest(H).A


def test_exact_fes_matches_bruteforce():
    rng = gen.SplitMix64(777)
    for i in range(30):
        H = gen.random_3uniform(5 + i % 4, 2 + i % 5, rng.next_u64())
        assert exact_fes(H).size == bruteforce.fes_number(H.n, H.edges)


def test_vertex_number_at_most_edge_number():
    rng = gen.SplitMix64(4242)
    for i in range(30):
        H = gen.random_3uniform(6 + i % 4, 3 + i % 5, rng.next_u64())
        assert fes_vs_fvs_check(H)
