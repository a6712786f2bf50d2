import pytest

from hyperfvs import Hypergraph, gen

# Deterministic corpora shared across test modules.  Session-scoped because
# the acceptance checks reuse the same instances several times.

CORPUS_SEED = 20260822
GENERAL_SEED = 977


def draw_linear(n, m, seed):
    """random_linear with deterministic fallback: retry a few derived seeds,
    then lower m.  Rejection sampling cannot always pack near the n(n-1)/6
    ceiling, and the schedule must never abort mid-corpus."""
    while True:
        for attempt in range(6):
            try:
                return gen.random_linear(n, m, seed + attempt)
            except gen.GenerationError:
                continue
        m -= 1


@pytest.fixture(scope="session")
def linear_corpus():
    rng = gen.SplitMix64(CORPUS_SEED)
    out = []
    for i in range(500):
        n = 8 + i % 13
        m = min(2 + i % 11, n * (n - 1) // 6 - 2, 12)
        out.append((f"linear-{i}", draw_linear(n, m, rng.next_u64())))
    for k in range(3, 13):
        out.append((f"loose-cycle-{k}", gen.loose_cycle(k)))
    return out


@pytest.fixture(scope="session")
def general_corpus():
    rng = gen.SplitMix64(GENERAL_SEED)
    out = []
    for i in range(500):
        out.append((f"uniform-{i}", gen.random_3uniform(5 + i % 6, 2 + i % 7, rng.next_u64())))
    for c in (1, 2, 3):
        out.append((f"two-cycle-union-{c}", gen.two_cycle_union(c)))
    return out


@pytest.fixture(scope="session")
def hypertree_corpus():
    rng = gen.SplitMix64(CORPUS_SEED ^ 0xFF)
    return [(f"hypertree-{m}", gen.random_hypertree(m, rng.next_u64())) for m in range(21)]


# -- cubic graph scaffolding --------------------------------------------
# A cubic (3-regular) graph G turns into a 2-regular linear hypergraph:
# one hyperedge per node of G holding its three incident graph edges, with
# the graph edges as hypergraph vertices.  Berge girth equals graph girth.


def cubic_to_hypergraph(nodes, graph_edges):
    eid = {frozenset(e): i + 1 for i, e in enumerate(graph_edges)}
    assert len(eid) == len(graph_edges), "duplicate graph edge"
    hedges = []
    for v in nodes:
        inc = sorted(i for fs, i in eid.items() if v in fs)
        assert len(inc) == 3, f"node {v} is not cubic"
        hedges.append(tuple(inc))
    return Hypergraph(len(graph_edges), hedges)


def lcf_graph(jumps, reps, n):
    """Cubic circulant-style graph from LCF notation."""
    seq = jumps * reps
    assert len(seq) == n
    edges = {frozenset((i, (i + 1) % n)) for i in range(n)}
    for i, j in enumerate(seq):
        edges.add(frozenset((i, (i + j) % n)))
    return [tuple(sorted(e)) for e in sorted(edges, key=sorted)]


def petersen_hypergraph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return cubic_to_hypergraph(range(10), outer + spokes + inner)


def heawood_hypergraph():
    return cubic_to_hypergraph(range(14), lcf_graph([5, -5], 7, 14))


def mcgee_hypergraph():
    return cubic_to_hypergraph(range(24), lcf_graph([12, 7, -7], 8, 24))


def k33_hypergraph():
    return cubic_to_hypergraph(range(6), [(a, b) for a in range(3) for b in range(3, 6)])


def cube_hypergraph():
    q3 = [(a, b) for a in range(8) for b in range(a + 1, 8) if bin(a ^ b).count("1") == 1]
    return cubic_to_hypergraph(range(8), q3)


# -- acceptance summary --------------------------------------------------

CRITERIA = {
    1: "constructive linear bound |S| <= floor(m/3), verified on 510 instances",
    2: "exact minimum <= floor(m/3) on every connected linear instance, m <= 5",
    3: "general bound |S| <= floor(m/2) and half-equality characterization",
    4: "greedy edge deletion: acyclic residual, component identity, bound",
    5: "connected instances: n <= 2m+1 with equality exactly for hypertrees",
    6: "exact vertex number <= exact edge number",
    7: "spot values from the exhaustive oracles",
    8: "extremal enumeration: tight instances exist, max degree <= 3",
    9: "suite output is byte-identical across reruns",
}

_outcomes = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    out = yield
    rep = out.get_result()
    if rep.when == "call" and item.name.startswith("test_criterion_"):
        num = int(item.name.split("_")[2])
        _outcomes[num] = rep.outcome


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for num in sorted(CRITERIA):
        outcome = _outcomes.get(num, "not run")
        mark = "PASS" if outcome == "passed" else "FAIL" if outcome == "failed" else outcome
        terminalreporter.write_line(f"  [{num}] {mark} - {CRITERIA[num]}")
