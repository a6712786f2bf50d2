"""Exhaustive ground truth: exact solvers, canonical forms, small-case search.

Everything here is deliberately brute force and shares no logic with the
constructive solvers, so the two can check each other.  Subset searches go
size-ascending and scan candidates in lexicographic order: the first
feasible set is a minimum and the reported witness is reproducible.

Canonical forms relabel the covered vertices 1..c to minimize the edge
list ordered by (max, mid, min); the minimizing search prunes on partial
prefixes, which keeps the m <= 6 enumeration comfortably inside a desk
budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import CertificationError, Hypergraph, HypergraphError

DEFAULT_VERTEX_LIMIT = 24
DEFAULT_EDGE_LIMIT = 16
ENUM_MAX_EDGES = 6
ENUM_MAX_VERTICES = 14


class OracleLimitError(HypergraphError):
    """Instance exceeds the configured exhaustive-search guard."""


@dataclass(frozen=True)
class ExactResult:
    size: int
    witness: frozenset[int]
    explored: int  # candidate sets tested, successful one included


def _check_fvs_limit(H: Hypergraph, limit: int | None) -> None:
    vlim, elim = (limit, limit) if limit is not None else (DEFAULT_VERTEX_LIMIT, DEFAULT_EDGE_LIMIT)
    if H.n > vlim and H.m > elim:
        raise OracleLimitError(
            f"instance n={H.n}, m={H.m} beyond exhaustive guard (n<={vlim} or m<={elim})"
        )


def exact_fvs(H: Hypergraph, limit: int | None = None) -> ExactResult:
    """Minimum feedback vertex set by size-ascending exhaustive search.

    Candidates are the vertices of edges that lie on some cycle.  The pool
    must NOT be narrowed to vertices on cycles: strong deletion removes
    whole edges, so deleting an off-cycle vertex of an on-cycle edge can
    still break cycles (two 2-cycles glued at a degree-2 vertex have a
    size-1 feedback set through the glue vertex).  Conversely a vertex all
    of whose edges avoid every cycle is useless: any cycle of a
    sub-edge-set is a cycle of H, so its deletion never helps.
    """
    _check_fvs_limit(H, limit)
    pool = sorted({v for e in H.edges_on_cycles() for v in H.edges[e]})
    explored = 0
    for size in range(len(pool) + 1):
        for combo in combinations(pool, size):
            explored += 1
            if H._acyclic_without(dead_vertices=combo):
                return ExactResult(size=size, witness=frozenset(combo), explored=explored)
    raise CertificationError("deleting every cycle vertex must leave an acyclic graph")


def exact_fes(H: Hypergraph, limit: int | None = None) -> ExactResult:
    """Minimum feedback edge set, same search scheme over edges on cycles."""
    elim = limit if limit is not None else DEFAULT_EDGE_LIMIT
    if H.m > elim:
        raise OracleLimitError(f"instance m={H.m} beyond exhaustive guard (m<={elim})")
    pool = sorted(H.edges_on_cycles())
    explored = 0
    for size in range(len(pool) + 1):
        for combo in combinations(pool, size):
            explored += 1
            if H._acyclic_without(dead_edges=combo):
                return ExactResult(size=size, witness=frozenset(combo), explored=explored)
    raise CertificationError("deleting every cycle edge must leave an acyclic graph")


def check_half_equality(H: Hypergraph, limit: int | None = None) -> bool:
    """2*tau = m exactly when the edge-bearing components are all 2-cycles.

    Isolated vertices are disregarded on the right-hand side (they carry no
    edges and no cycles), otherwise a lone extra vertex next to a 2-cycle
    would falsify a biconditional that actually holds in general.
    """
    res = exact_fvs(H, limit=limit)
    lhs = 2 * res.size == H.m
    stats = H.component_stats()
    rhs = all(
        H.is_two_cycle_component(c)
        for c in range(len(stats))
        if stats[c][1] > 0
    )
    return lhs == rhs


# -- canonical forms ----------------------------------------------------


def _colex_key(edge: tuple[int, int, int]) -> tuple[int, int, int]:
    a, b, c = sorted(edge)
    return (c, b, a)


def _canonical_key(edges) -> tuple:
    """Minimal colex-ordered key sequence over relabelings of covered vertices.

    Completed edges always involve only the labels handed out so far, so the
    sorted completed keys form a prefix of the final sequence; branches whose
    prefix exceeds the best known one die immediately.
    """
    if not edges:
        return ()
    edge_sets = [frozenset(e) for e in edges]
    covered = sorted({v for e in edges for v in e})
    c = len(covered)
    incident: dict[int, list[int]] = {v: [] for v in covered}
    for i, e in enumerate(edge_sets):
        for v in e:
            incident[v].append(i)

    best: tuple | None = None
    best_rcount: list[int] = []

    def rcounts(keys: tuple) -> list[int]:
        # rcount[j] = how many keys have their max label <= j
        out = [0] * (c + 1)
        for j in range(1, c + 1):
            out[j] = sum(1 for k in keys if k[0] <= j)
        return out

    def search(label_of: dict, order: list, prefix: tuple):
        nonlocal best, best_rcount
        j = len(order)
        if j == c:
            if best is None or prefix < best:
                best = prefix
                best_rcount = rcounts(prefix)
            return
        scored = []
        for v in covered:
            if v in label_of:
                continue
            new_keys = []
            for i in incident[v]:
                others = [w for w in edge_sets[i] if w != v]
                if all(w in label_of for w in others):
                    l1, l2 = sorted((label_of[others[0]], label_of[others[1]]))
                    new_keys.append((j + 1, l2, l1))
            new_keys.sort()
            scored.append((0 if new_keys else 1, tuple(new_keys), v))
        scored.sort()
        for _, new_keys, v in scored:
            cand = prefix + new_keys
            if best is not None:
                r = len(cand)
                head = best[:r]
                if cand > head:
                    continue
                if cand == head and best_rcount[j + 1] > r:
                    continue
            label_of[v] = j + 1
            order.append(v)
            search(label_of, order, cand)
            order.pop()
            del label_of[v]

    # the minimal sequence starts with edge (1,2,3), so seed labels 1..3
    # from the orderings of each edge rather than from all vertex triples
    for e in edge_sets:
        members = sorted(e)
        for perm in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
            trio = [members[p] for p in perm]
            label_of = {trio[0]: 1, trio[1]: 2, trio[2]: 3}
            # no second edge fits inside three vertices, so the prefix is just (3,2,1)
            search(label_of, trio[:], ((3, 2, 1),))
    assert best is not None
    return best


def canonical_form(H: Hypergraph) -> Hypergraph:
    """Isomorphic copy with covered vertices relabeled 1..c canonically.

    Two hypergraphs are isomorphic iff their canonical forms are equal.
    """
    key = _canonical_key(H.edges)
    edges = [(k[2], k[1], k[0]) for k in key]
    return Hypergraph(H.n, edges)


# -- exhaustive enumeration ---------------------------------------------


def _extensions(rep: Hypergraph, n_max: int):
    """All ways to add one edge, fresh vertices normalized to n+1, n+2, n+3."""
    n = rep.n
    covered_pairs = set()
    existing = set(rep.edges)
    for a, b, c in rep.edges:
        covered_pairs.update(((a, b), (a, c), (b, c)))
    for fresh in range(4):
        if n + fresh > n_max:
            break
        tail = tuple(range(n + 1, n + 1 + fresh))
        for base in combinations(range(1, n + 1), 3 - fresh):
            triple = base + tail
            if fresh == 0:
                if triple in existing:
                    continue
                pairs = ((triple[0], triple[1]), (triple[0], triple[2]), (triple[1], triple[2]))
            elif fresh == 1:
                pairs = ((base[0], base[1]),)
            else:
                pairs = ()
            if any(p in covered_pairs for p in pairs):
                continue
            yield triple


def _enumerate_levels(m: int, n_max: int):
    """Canonical representatives of all linear hypergraphs with m edges and
    no isolated vertex (connected or not), plus a raw-candidate counter."""
    level: dict[tuple, Hypergraph] = {}
    seed = Hypergraph(3, [(1, 2, 3)])
    level[_canonical_key(seed.edges)] = seed
    raw = 1
    for _ in range(m - 1):
        nxt: dict[tuple, Hypergraph] = {}
        for key in sorted(level):
            rep = level[key]
            for triple in _extensions(rep, n_max):
                raw += 1
                n2 = max(rep.n, max(triple))
                new_key = _canonical_key(rep.edges + (triple,))
                if new_key not in nxt:
                    edges = [(k[2], k[1], k[0]) for k in new_key]
                    nxt[new_key] = Hypergraph(n2, edges)
        level = nxt
    return level, raw


def enumerate_linear(m: int, n_max: int = ENUM_MAX_VERTICES) -> list[Hypergraph]:
    """All connected linear hypergraphs with exactly m edges, up to
    isomorphism, without isolated vertices, canonically labeled."""
    if not 1 <= m <= ENUM_MAX_EDGES:
        raise OracleLimitError(f"enumeration supports 1 <= m <= {ENUM_MAX_EDGES}, got {m}")
    if not 3 <= n_max <= ENUM_MAX_VERTICES:
        raise OracleLimitError(f"enumeration supports 3 <= n_max <= {ENUM_MAX_VERTICES}, got {n_max}")
    level, _ = _enumerate_levels(m, n_max)
    out = [H for H in level.values() if H.components().p == 1]
    out.sort(key=lambda H: (H.n, H.edges))
    return out


# -- extremal search ----------------------------------------------------


@dataclass
class ExtremalReport:
    """Connected linear instances meeting the m/3 feedback bound exactly."""

    m: int
    n_max: int
    found: list[Hypergraph] = field(default_factory=list)
    max_degree_seen: int = 0
    examined: int = 0        # connected classes put through the oracle
    raw_candidates: int = 0  # labeled extensions generated along the way

    def to_text(self) -> str:
        lines = [
            "# extremal search: connected linear instances with exact",
            "# feedback vertex number m/3 (representatives up to isomorphism;",
            "# disconnected unions of smaller extremal instances are omitted)",
            f"# m={self.m} n_max={self.n_max} examined={self.examined} "
            f"candidates={self.raw_candidates} found={len(self.found)} "
            f"maxdeg={self.max_degree_seen}",
        ]
        if self.max_degree_seen > 3:
            lines.append("# WARNING: an instance exceeds maximum degree 3")
        for H in self.found:
            tau = self.m // 3
            maxdeg = max((H.degree(v) for v in range(1, H.n + 1)), default=0)
            lines.append(f"# tau={tau} m={H.m} maxdeg={maxdeg}")
            lines.append(H.to_text().rstrip("\n"))
        return "\n".join(lines) + "\n"


def search_extremal(m: int, n_max: int = 12) -> ExtremalReport:
    """Filter the enumeration by exact feedback vertex number == m/3."""
    if m % 3 != 0:
        raise ValueError(f"extremal bound needs 3 | m, got {m}")
    if not 1 <= m <= ENUM_MAX_EDGES:
        raise OracleLimitError(f"extremal search supports m in 3, 6; got {m}")
    level, raw = _enumerate_levels(m, n_max)
    connected = [H for H in level.values() if H.components().p == 1]
    connected.sort(key=lambda H: (H.n, H.edges))
    target = m // 3
    found = []
    for H in connected:
        tau = exact_fvs(H).size
        # a connected linear instance with >= 3 edges is not a union of
        # 2-cycles, so its feedback number must stay below m/2; reaching
        # it would falsify the equality characterization
        if 2 * tau == m:
            raise CertificationError(
                f"feedback vertex number {tau} reached half the edge count "
                f"on a linear instance: {H.to_text()!r}"
            )
        if tau == target:
            found.append(H)
    maxdeg = 0
    for H in found:
        maxdeg = max(maxdeg, max(H.degree(v) for v in range(1, H.n + 1)))
    return ExtremalReport(
        m=m,
        n_max=n_max,
        found=found,
        max_degree_seen=maxdeg,
        examined=len(connected),
        raw_candidates=raw,
    )
