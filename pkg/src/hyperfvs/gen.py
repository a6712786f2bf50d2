"""Instance generators: structured families and seeded random ones.

All randomness comes from a tiny 64-bit splitmix generator embedded here,
so a (parameters, seed) pair produces the same instance on any platform;
Python's global `random` module is never touched.  Every generator checks
its own contract before returning and raises CertificationError when the
construction went wrong.
"""

from __future__ import annotations

from itertools import combinations

from .core import CertificationError, Hypergraph

MASK64 = (1 << 64) - 1


class GenerationError(Exception):
    """Rejection sampling gave up within its draw budget."""


class SplitMix64:
    """Deterministic 64-bit generator: additive state walk, two mix rounds.

    First output for seed 0 is 0xE220A8397B1DCDAF; pinned in the tests so a
    reimplementation in any language can be checked against this one.
    """

    GAMMA = 0x9E3779B97F4A7C15

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + self.GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish integer in 0..bound-1 (modulo reduction; bound is tiny)."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        return self.next_u64() % bound


def loose_cycle(k: int) -> Hypergraph:
    """k edges {v_i, u_i, v_{i+1}} around a ring: n = 2k, girth exactly k."""
    if k < 3:
        raise ValueError(f"loose cycle needs k >= 3, got {k}")
    edges = []
    for i in range(1, k + 1):
        nxt = 1 if i == k else i + 1
        edges.append((i, k + i, nxt))
    H = Hypergraph(2 * k, edges)
    cyc = H.shortest_cycle()
    if not (H.is_linear() and H.m == k and cyc is not None and cyc.k == k):
        raise CertificationError(f"loose_cycle({k}) failed its own contract")
    return H


def two_cycle_union(c: int) -> Hypergraph:
    """c disjoint pairs of edges sharing two vertices: n = 4c, m = 2c."""
    if c < 1:
        raise ValueError(f"need at least one block, got {c}")
    edges = []
    for b in range(c):
        base = 4 * b
        edges.append((base + 1, base + 2, base + 3))
        edges.append((base + 1, base + 2, base + 4))
    H = Hypergraph(4 * c, edges)
    comp = H.components()
    ok = comp.p == c and all(H.is_two_cycle_component(i) for i in range(c))
    if not ok:
        raise CertificationError(f"two_cycle_union({c}) failed its own contract")
    return H


def random_hypertree(m: int, seed: int) -> Hypergraph:
    """Connected acyclic hypergraph grown by attaching edges to a uniform
    existing vertex plus two fresh ones; n = 2m + 1 always."""
    if m < 0:
        raise ValueError(f"edge count must be non-negative, got {m}")
    rng = SplitMix64(seed)
    n = 1
    edges = []
    for _ in range(m):
        anchor = 1 + rng.below(n)
        edges.append((anchor, n + 1, n + 2))
        n += 2
    H = Hypergraph(n, edges)
    if not H.is_hypertree():
        raise CertificationError(f"random_hypertree({m}, {seed}) is not a hypertree")
    return H


def random_linear(n: int, m: int, seed: int) -> Hypergraph:
    """Rejection-sample m triples so no vertex pair is covered twice.

    Raises GenerationError after 1000*m failed-plus-successful draws; the
    caller retries with a fresh seed.  Feasibility needs m <= n(n-1)/6,
    though dense corners below that bound may still be unreachable.
    """
    if m < 0 or n < 0:
        raise ValueError("counts must be non-negative")
    if m > 0 and (n < 3 or m > n * (n - 1) // 6):
        raise ValueError(f"no linear hypergraph with n={n}, m={m}")
    rng = SplitMix64(seed)
    budget = 1000 * max(m, 1)
    covered: set[tuple[int, int]] = set()
    edges: list[tuple[int, int, int]] = []
    draws = 0
    while len(edges) < m:
        if draws >= budget:
            raise GenerationError(
                f"random_linear(n={n}, m={m}, seed={seed}) exhausted {budget} draws"
            )
        draws += 1
        a = 1 + rng.below(n)
        b = 1 + rng.below(n)
        c = 1 + rng.below(n)
        if a == b or a == c or b == c:
            continue
        triple = tuple(sorted((a, b, c)))
        pairs = ((triple[0], triple[1]), (triple[0], triple[2]), (triple[1], triple[2]))
        if any(p in covered for p in pairs):
            continue
        covered.update(pairs)
        edges.append(triple)
    H = Hypergraph(n, edges)
    if not H.is_linear():
        raise CertificationError("random_linear produced a non-linear hypergraph")
    return H


def random_3uniform(n: int, m: int, seed: int) -> Hypergraph:
    """m distinct triples drawn uniformly without replacement (partial
    Fisher-Yates over the sorted triple list)."""
    if m < 0 or n < 0:
        raise ValueError("counts must be non-negative")
    pool = list(combinations(range(1, n + 1), 3))
    if m > len(pool):
        raise ValueError(f"only {len(pool)} distinct triples exist for n={n}, need {m}")
    rng = SplitMix64(seed)
    for i in range(m):
        j = i + rng.below(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    H = Hypergraph(n, pool[:m])
    if H.m != m:
        raise CertificationError("random_3uniform lost edges")
    return H


def fano() -> Hypergraph:
    """The seven lines of the projective plane of order 2: every vertex has
    degree 3 and every pair of vertices lies in exactly one edge."""
    edges = [
        (1, 2, 3), (1, 4, 5), (1, 6, 7),
        (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6),
    ]
    H = Hypergraph(7, edges)
    if not (H.is_linear() and all(H.degree(v) == 3 for v in range(1, 8))):
        raise CertificationError("fano() failed its own contract")
    return H
