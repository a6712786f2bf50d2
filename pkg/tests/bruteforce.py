"""Reference implementations for cross-checking, written from the raw
definitions — no incidence graph, no union-find, no pruning pools.

Deliberately naive and exponential.  Keep inputs tiny (n <= 9, m <= 8)."""

from itertools import combinations, permutations


def berge_cycles(n, edges):
    """Every Berge cycle as (frozenset of vertex ids, frozenset of edge ids).

    A cycle is v1 e1 v2 e2 ... vk ek v1 with k >= 2, all vi distinct, all
    ei distinct, and {vi, v(i+1)} contained in ei.  Each cycle is found at
    least once by anchoring the start at its smallest vertex.
    """
    found = set()

    def extend(start, v, used_v, used_e):
        for ei, e in enumerate(edges):
            if ei in used_e or v not in e:
                continue
            if len(used_e) >= 1 and start in e and v != start:
                found.add((frozenset(used_v), frozenset(used_e) | {ei}))
                # fall through: e may also be a pass-through edge
            for w in e:
                if w != v and w > start and w not in used_v:
                    extend(start, w, used_v | {w}, used_e | {ei})

    for s in range(1, n + 1):
        extend(s, s, frozenset((s,)), frozenset())
    return found


def has_cycle(n, edges):
    return bool(berge_cycles(n, edges))


def min_cycle_edges(n, edges):
    """Length of a shortest Berge cycle, or None."""
    cycles = berge_cycles(n, edges)
    return min(len(es) for _, es in cycles) if cycles else None


def cycle_vertices(n, edges):
    out = set()
    for vs, _ in berge_cycles(n, edges):
        out |= vs
    return out


def cycle_edges(n, edges):
    out = set()
    for _, es in berge_cycles(n, edges):
        out |= es
    return out


def fvs_number(n, edges):
    """Minimum feedback vertex set size over ALL vertex subsets."""
    for size in range(n + 1):
        for S in combinations(range(1, n + 1), size):
            s = set(S)
            if not has_cycle(n, [e for e in edges if not s & set(e)]):
                return size
    raise AssertionError("unreachable: deleting everything is acyclic")


def fes_number(n, edges):
    """Minimum feedback edge set size over all edge subsets."""
    for size in range(len(edges) + 1):
        for A in combinations(range(len(edges)), size):
            a = set(A)
            if not has_cycle(n, [e for i, e in enumerate(edges) if i not in a]):
                return size
    raise AssertionError("unreachable")


def isomorphic(h1, h2):
    """Brute relabeling check; both are Hypergraph-like (.n, .edges)."""
    if h1.n != h2.n or len(h1.edges) != len(h2.edges):
        return False
    target = {frozenset(e) for e in h2.edges}
    for perm in permutations(range(1, h1.n + 1)):
        relabel = dict(zip(range(1, h1.n + 1), perm))
        if {frozenset(relabel[v] for v in e) for e in h1.edges} == target:
            return True
    return False
