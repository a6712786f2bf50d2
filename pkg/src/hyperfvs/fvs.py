"""Constructive feedback vertex sets with certificates.

Two modes share one reduction loop.  The linear mode repeatedly fires the
first applicable rule from a fixed priority list; every rule removes r
edges and adds a vertices with 3a <= r, so the final set has at most
floor(m/3) vertices.  The general mode charges 2 edges per vertex for a
floor(m/2) bound.  Each fired rule is recorded in a trace (edge ids refer
to the ORIGINAL hypergraph), and the result is re-verified from scratch
before being returned: a failure there is a solver bug and raises.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .core import BergeCycle, CertificationError, Hypergraph, HypergraphError


class NotLinearError(HypergraphError):
    """The linear solver was handed a hypergraph with a doubled pair."""


class Rule(enum.Enum):
    NON_CYCLE_EDGE = "NonCycleEdge"
    HIGH_DEGREE_VERTEX = "HighDegreeVertex"
    TRIANGLE = "Triangle"
    PENDANT_ON_CYCLE = "PendantOnCycle"
    FOUR_CYCLE_SHARED = "FourCycleShared"
    FOUR_CYCLE_DISJOINT = "FourCycleDisjoint"
    CYCLE_MOD0 = "CycleMod0"
    CYCLE_MOD1 = "CycleMod1"
    CYCLE_MOD2 = "CycleMod2"
    GENERAL_DEGREE2 = "GeneralDegree2Plus"


# charge factor: a rule may add one vertex per CHARGE removed edges
LINEAR_CHARGE = 3
GENERAL_CHARGE = 2


@dataclass(frozen=True)
class RuleApplication:
    """One fired rule; frozen so traces cannot be edited after the fact."""

    rule: Rule
    removed_edges: frozenset[int]
    added_vertices: frozenset[int]

    def __post_init__(self):
        charge = GENERAL_CHARGE if self.rule is Rule.GENERAL_DEGREE2 else LINEAR_CHARGE
        if self.rule is Rule.NON_CYCLE_EDGE:
            if self.added_vertices:
                raise CertificationError("NonCycleEdge must not add vertices")
        elif charge * len(self.added_vertices) > len(self.removed_edges):
            raise CertificationError(
                f"{self.rule.value} breaks its budget: "
                f"{len(self.removed_edges)} removed vs {len(self.added_vertices)} added"
            )
        if not self.removed_edges:
            raise CertificationError(f"{self.rule.value} must remove at least one edge")

    @property
    def budget_check(self) -> tuple[int, int]:
        return (len(self.removed_edges), len(self.added_vertices))


@dataclass
class FvsCertificate:
    """Feedback vertex set plus the trace that produced it."""

    S: frozenset[int]
    trace: list[RuleApplication] = field(default_factory=list)
    m0: int = 0
    bound: Fraction = Fraction(0)

    @property
    def size(self) -> int:
        return len(self.S)

    def verify(self, H: Hypergraph) -> bool:
        """Full re-check against the original hypergraph."""
        if self.m0 != H.m:
            return False
        if self.size > self.bound:
            return False
        added: set[int] = set()
        removed: set[int] = set()
        for app in self.trace:
            if not removed.isdisjoint(app.removed_edges):
                return False  # an edge deleted twice
            removed |= app.removed_edges
            added |= app.added_vertices
        if added != set(self.S):
            return False
        if any(not 0 <= e < H.m for e in removed):
            return False
        if any(not 1 <= v <= H.n for v in self.S):
            return False
        return verify_fvs(H, self.S)


def verify_fvs(H: Hypergraph, S) -> bool:
    """True iff deleting every vertex of S leaves H acyclic."""
    for v in S:
        if not 1 <= v <= H.n:
            raise ValueError(f"vertex id {v} out of range 1..{H.n}")
    return H._acyclic_without(dead_vertices=S)


def _third(H: Hypergraph, eid: int, a: int, b: int) -> int:
    (x, y, z) = H.edges[eid]
    rest = [w for w in (x, y, z) if w != a and w != b]
    if len(rest) != 1:
        raise CertificationError(f"edge {eid} does not contain both {a} and {b}")
    return rest[0]


def _second_edge(H: Hypergraph, v: int, first: int) -> int:
    """The other edge at a degree-2 vertex; loud failure otherwise."""
    mine = H.edges_at(v)
    if len(mine) != 2 or first not in mine:
        raise CertificationError(f"vertex {v} is not degree-2 on edge {first}")
    return mine[0] if mine[1] == first else mine[1]


def _linear_cycle_rule(H: Hypergraph, C: BergeCycle) -> RuleApplication:
    """Dispatch on the shortest-cycle length once rules 1-4 are exhausted."""
    k = C.k
    vs, es = C.vertices, C.edges
    u = [_third(H, es[i], vs[i], vs[(i + 1) % k]) for i in range(k)]

    if k == 4:
        if set(H.edges[es[0]]) & set(H.edges[es[2]]) or set(H.edges[es[1]]) & set(H.edges[es[3]]):
            raise CertificationError("4-cycle has intersecting opposite edges on linear input")
        if len(set(vs) | set(u)) != 8:
            raise CertificationError("4-cycle corner/outer vertices not distinct")
        e5 = _second_edge(H, u[0], es[0])
        e6 = _second_edge(H, u[1], es[1])
        e7 = _second_edge(H, u[2], es[2])
        if e5 == e6 or e6 == e7:
            raise CertificationError("triangle-freeness violated around a 4-cycle")
        if e5 == e7:
            removed = frozenset(es) | {e5, e6}
            added = frozenset((u[1], u[3]))
            rule = Rule.FOUR_CYCLE_SHARED
        else:
            removed = frozenset(es) | {e5, e7}
            added = frozenset((u[0], u[2]))
            rule = Rule.FOUR_CYCLE_DISJOINT
        if len(removed) != 6:
            raise CertificationError("4-cycle rule expected 6 distinct removed edges")
        return RuleApplication(rule, removed, added)

    t, r = divmod(k, 3)
    if r == 0:
        # drop the cycle, keep every third corner: v3, v6, ..., v_{3t}
        added = frozenset(vs[3 * i - 1] for i in range(1, t + 1))
        if len(added) != t:
            raise CertificationError("CycleMod0 picked coincident vertices")
        return RuleApplication(Rule.CYCLE_MOD0, frozenset(es), added)
    if r == 1:
        f1 = _second_edge(H, u[0], es[0])
        f3 = _second_edge(H, u[2], es[2])
        removed = frozenset(es) | {f1, f3}
        if len(removed) != k + 2:
            raise CertificationError("CycleMod1 stray edges not distinct from the cycle")
        added = frozenset((u[0], u[2])) | {vs[3 * i - 1] for i in range(2, t + 1)}
        if len(added) != t + 1:
            raise CertificationError("CycleMod1 picked coincident vertices")
        return RuleApplication(Rule.CYCLE_MOD1, removed, added)
    # r == 2: one stray edge, then v4, v7, ..., v_{3t+1}
    f1 = _second_edge(H, u[0], es[0])
    removed = frozenset(es) | {f1}
    if len(removed) != k + 1:
        raise CertificationError("CycleMod2 stray edge not distinct from the cycle")
    added = frozenset((u[0],)) | {vs[3 * i] for i in range(1, t + 1)}
    if len(added) != t + 1:
        raise CertificationError("CycleMod2 picked coincident vertices")
    return RuleApplication(Rule.CYCLE_MOD2, removed, added)


def step(H: Hypergraph, mode: str = "linear") -> RuleApplication | None:
    """First applicable reduction rule for H, or None when H is acyclic.

    Edge ids in the result refer to H itself.  Deterministic: scans pick the
    smallest vertex/edge id and cycle-based rules use the lexicographically
    smallest shortest cycle.
    """
    if mode not in ("linear", "general"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "linear" and not H.is_linear():
        raise NotLinearError("linear reduction requires a linear hypergraph")
    if H.is_acyclic():
        return None

    on_cycle = H.edges_on_cycles()
    dead = [e for e in range(H.m) if e not in on_cycle]
    if dead:
        return RuleApplication(Rule.NON_CYCLE_EDGE, frozenset((dead[0],)), frozenset())

    if mode == "general":
        v = min(H.vertices_on_cycles())  # lies on a cycle, hence degree >= 2
        return RuleApplication(
            Rule.GENERAL_DEGREE2, frozenset(H.edges_at(v)), frozenset((v,))
        )

    for v in range(1, H.n + 1):
        if H.degree(v) >= 3:
            return RuleApplication(
                Rule.HIGH_DEGREE_VERTEX, frozenset(H.edges_at(v)), frozenset((v,))
            )

    C = H.shortest_cycle()
    assert C is not None and C.k >= 3  # linear: no doubled pairs, so k >= 3
    if C.k == 3:
        return RuleApplication(Rule.TRIANGLE, frozenset(C.edges), frozenset((C.vertices[0],)))

    pendants = [v for v in range(1, H.n + 1) if H.degree(v) == 1]
    if pendants:
        v = pendants[0]
        e1 = H.edges_at(v)[0]
        # every edge lies on a cycle here, so one exists through e1
        C4 = H.cycle_through_edge(e1)
        if C4 is None or C4.k < 4:
            raise CertificationError("pendant edge should sit on a cycle of length >= 4")
        j = C4.edges.index(e1)
        k4 = C4.k
        v1, v2 = C4.vertices[j], C4.vertices[(j + 1) % k4]
        if _third(H, e1, v1, v2) != v:
            raise CertificationError("pendant vertex unexpectedly on its own cycle")
        e2 = C4.edges[(j + 1) % k4]
        e3 = C4.edges[(j + 2) % k4]
        v3 = C4.vertices[(j + 2) % k4]
        return RuleApplication(
            Rule.PENDANT_ON_CYCLE, frozenset((e1, e2, e3)), frozenset((v3,))
        )

    return _linear_cycle_rule(H, C)


def _run(H: Hypergraph, mode: str) -> FvsCertificate:
    charge = LINEAR_CHARGE if mode == "linear" else GENERAL_CHARGE
    bound = Fraction(H.m, charge)
    orig_ids = list(range(H.m))
    current = H
    trace: list[RuleApplication] = []
    S: set[int] = set()
    while True:
        app = step(current, mode)
        if app is None:
            break
        local = sorted(app.removed_edges)
        trace.append(
            RuleApplication(
                app.rule,
                frozenset(orig_ids[i] for i in local),
                app.added_vertices,
            )
        )
        S |= app.added_vertices
        dead = set(local)
        orig_ids = [o for i, o in enumerate(orig_ids) if i not in dead]
        current = current.delete_edges(local)

    cert = FvsCertificate(S=frozenset(S), trace=trace, m0=H.m, bound=bound)
    if cert.size > bound:
        raise CertificationError(
            f"{mode} reduction exceeded its bound: |S|={cert.size} > {bound}"
        )
    if not verify_fvs(H, cert.S):
        raise CertificationError(f"{mode} reduction left a cycle behind")
    return cert


def linear_fvs(H: Hypergraph) -> FvsCertificate:
    """Feedback vertex set of size <= floor(m/3) for a linear hypergraph."""
    if not H.is_linear():
        raise NotLinearError("linear_fvs requires a linear hypergraph")
    return _run(H, "linear")


def general_fvs(H: Hypergraph) -> FvsCertificate:
    """Feedback vertex set of size <= floor(m/2) for any 3-uniform hypergraph."""
    return _run(H, "general")
