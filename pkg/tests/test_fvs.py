import dataclasses

import pytest

import bruteforce
from conftest import (
    cube_hypergraph,
    heawood_hypergraph,
    k33_hypergraph,
    mcgee_hypergraph,
    petersen_hypergraph,
)
from hyperfvs import (
    CertificationError,
    Hypergraph,
    NotLinearError,
    Rule,
    RuleApplication,
    gen,
    general_fvs,
    linear_fvs,
    verify_fvs,
)
from hyperfvs.fvs import step


def rules_of(cert):
    return [app.rule for app in cert.trace]


# -- trivial and error cases --------------------------------------------


def test_acyclic_input_gives_empty_set():
    for H in [Hypergraph(4, []), Hypergraph(3, [(1, 2, 3)]), gen.random_hypertree(6, 2)]:
        cert = linear_fvs(H)
        assert cert.S == frozenset() and cert.trace == []
        assert cert.verify(H)


def test_linear_solver_rejects_nonlinear():
    with pytest.raises(NotLinearError):
        linear_fvs(gen.two_cycle_union(1))


def test_general_solver_accepts_linear_too():
    cert = general_fvs(gen.fano())
    assert cert.verify(gen.fano())


# -- each reduction rule on an instance that actually triggers it -------


def test_rule_triangle():
    cert = linear_fvs(gen.loose_cycle(3))
    assert rules_of(cert) == [Rule.TRIANGLE]
    assert cert.size == 1
    assert cert.verify(gen.loose_cycle(3))


def test_rule_high_degree_vertex():
    # two loose triangles glued at vertex 1: degree 4 there
    shifted = []
    relabel = {1: 1, 2: 7, 3: 8, 4: 9, 5: 10, 6: 11}
    for e in gen.loose_cycle(3).edges:
        shifted.append(tuple(sorted(relabel[v] for v in e)))
    H = Hypergraph(11, list(gen.loose_cycle(3).edges) + shifted)
    assert H.is_linear() and H.degree(1) == 4
    app = step(H)
    assert app.rule == Rule.HIGH_DEGREE_VERTEX
    assert app.added_vertices == frozenset((1,))
    assert len(app.removed_edges) == 4
    cert = linear_fvs(H)
    assert cert.S == frozenset((1,)) and cert.verify(H)
    assert bruteforce.fvs_number(H.n, H.edges) == 1


def test_rule_high_degree_on_fano():
    H = gen.fano()
    cert = linear_fvs(H)
    assert rules_of(cert)[0] == Rule.HIGH_DEGREE_VERTEX
    assert cert.size == 2 and cert.verify(H)
    # the oracle agrees no single vertex suffices
    assert bruteforce.fvs_number(7, H.edges) == 2


def test_rule_pendant_on_cycle():
    for k in (4, 5, 8):
        H = gen.loose_cycle(k)
        cert = linear_fvs(H)
        assert Rule.PENDANT_ON_CYCLE in rules_of(cert)
        assert cert.size == 1 and cert.verify(H)


def test_rule_non_cycle_edge():
    # triangle with a tail: the tail edge is on no cycle and goes first
    H = Hypergraph(9, [(1, 2, 4), (2, 3, 5), (1, 3, 6), (2, 8, 9)])
    app = step(H)
    assert app.rule == Rule.NON_CYCLE_EDGE
    assert app.removed_edges == frozenset((3,))
    assert app.added_vertices == frozenset()
    cert = linear_fvs(H)
    assert cert.size == 1 and cert.verify(H)


def test_rule_four_cycle_shared():
    # 2-regular, girth 4, and opposite corners see a common outside edge
    H = k33_hypergraph()
    assert H.is_linear() and H._girth() == 4
    app = step(H)
    assert app.rule == Rule.FOUR_CYCLE_SHARED
    assert len(app.removed_edges) == 6 and len(app.added_vertices) == 2
    cert = linear_fvs(H)
    assert cert.size == 2 and cert.verify(H)
    assert bruteforce.fvs_number(H.n, H.edges) == 2  # tight: floor(6/3)


def test_rule_four_cycle_disjoint():
    H = cube_hypergraph()
    assert H.is_linear() and H._girth() == 4
    app = step(H)
    assert app.rule == Rule.FOUR_CYCLE_DISJOINT
    assert len(app.removed_edges) == 6 and len(app.added_vertices) == 2
    cert = linear_fvs(H)
    assert cert.size == 2 and cert.verify(H)


def test_rule_cycle_mod0():
    H = heawood_hypergraph()
    assert H._girth() == 6
    app = step(H)
    assert app.rule == Rule.CYCLE_MOD0
    assert len(app.removed_edges) == 6 and len(app.added_vertices) == 2
    cert = linear_fvs(H)
    assert cert.size <= 14 // 3 and cert.verify(H)


def test_rule_cycle_mod1():
    H = mcgee_hypergraph()
    assert H._girth() == 7
    app = step(H)
    assert app.rule == Rule.CYCLE_MOD1
    # seven cycle edges plus two stray edges; three kept vertices
    assert len(app.removed_edges) == 9 and len(app.added_vertices) == 3
    cert = linear_fvs(H)
    assert cert.size <= 24 // 3 and cert.verify(H)


def test_rule_cycle_mod2():
    H = petersen_hypergraph()
    assert H._girth() == 5
    app = step(H)
    assert app.rule == Rule.CYCLE_MOD2
    assert len(app.removed_edges) == 6 and len(app.added_vertices) == 2
    cert = linear_fvs(H)
    assert cert.size <= 10 // 3 and cert.verify(H)


def test_rule_general_degree():
    H = gen.two_cycle_union(2)
    app = step(H, mode="general")
    assert app.rule == Rule.GENERAL_DEGREE2
    cert = general_fvs(H)
    assert cert.size == 2 and cert.verify(H)


# -- charging discipline ------------------------------------------------


def test_rule_application_budget_is_enforced():
    with pytest.raises(CertificationError):
        RuleApplication(Rule.TRIANGLE, frozenset((0, 1)), frozenset((1,)))
    with pytest.raises(CertificationError):
        RuleApplication(Rule.NON_CYCLE_EDGE, frozenset((0,)), frozenset((1,)))
    with pytest.raises(CertificationError):
        RuleApplication(Rule.TRIANGLE, frozenset(), frozenset())


def test_trace_charges_cover_the_bound():
    # every rule pays for its kept vertices three edges apiece
    for H in (gen.fano(), petersen_hypergraph(), heawood_hypergraph()):
        cert = linear_fvs(H)
        removed = sum(len(a.removed_edges) for a in cert.trace)
        assert 3 * cert.size <= removed <= H.m


# -- certificates -------------------------------------------------------


def test_certificate_rejects_tampering():
    H = gen.fano()
    cert = linear_fvs(H)
    assert cert.verify(H)
    assert not dataclasses.replace(cert, S=frozenset((7,))).verify(H)
    assert not dataclasses.replace(cert, m0=99).verify(H)
    smaller = frozenset(list(cert.S)[:1])
    assert not dataclasses.replace(cert, S=smaller).verify(H)


def test_certificate_rejects_wrong_instance():
    cert = linear_fvs(gen.fano())
    assert not cert.verify(gen.loose_cycle(4))


def test_verify_fvs_direct():
    H = gen.loose_cycle(3)
    assert verify_fvs(H, {1})
    assert not verify_fvs(H, set())
    with pytest.raises(ValueError):
        verify_fvs(H, {99})


def test_solver_is_deterministic():
    H = petersen_hypergraph()
    c1, c2 = linear_fvs(H), linear_fvs(H)
    assert c1.S == c2.S and c1.trace == c2.trace


# -- bounds on bulk corpora ---------------------------------------------


def test_linear_bound_on_corpus(linear_corpus):
    for name, H in linear_corpus[:200]:
        cert = linear_fvs(H)
        assert cert.verify(H), name
        assert 3 * cert.size <= H.m, name


def test_general_bound_on_corpus(general_corpus):
    for name, H in general_corpus[:200]:
        cert = general_fvs(H)
        assert cert.verify(H), name
        assert 2 * cert.size <= H.m, name


def test_constructive_never_beats_bruteforce():
    rng = gen.SplitMix64(31337)
    for i in range(40):
        H = gen.random_3uniform(5 + i % 4, 2 + i % 5, rng.next_u64())
        exact = bruteforce.fvs_number(H.n, H.edges)
        cert = general_fvs(H)
        assert exact <= cert.size
        if H.is_linear():
            assert exact <= linear_fvs(H).size
