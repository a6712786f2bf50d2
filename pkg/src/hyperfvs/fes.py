"""Feedback edge sets via a greedy spanning hyperforest.

Scanning edges in id order, an edge is kept iff its three vertices lie in
three distinct components so far; everything else goes into the feedback
set A.  Each kept component is then a hypertree (n_i = 2 m_i + 1), which
forces the exact accounting identity 2|A| = 2m - n + k and the bound
|A| <= 2m - n + p.  All of that is re-checked when the certificate is
built; failures raise, they are never masked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import CertificationError, DisjointSets, Hypergraph


@dataclass
class FesCertificate:
    """Feedback edge set A with the residual forest bookkeeping."""

    A: frozenset[int]
    kept: frozenset[int]
    k: int                      # components of H minus A
    per_component: list[tuple[int, int]] = field(default_factory=list)
    p: int = 0                  # components of the original H
    bound: int = 0              # 2m - n + p

    @property
    def size(self) -> int:
        return len(self.A)

    def verify(self, H: Hypergraph) -> bool:
        if self.A | self.kept != frozenset(range(H.m)) or self.A & self.kept:
            return False
        residual = H.delete_edges(self.A)
        if not residual.is_acyclic():
            return False
        stats = residual.component_stats()
        if len(stats) != self.k or stats != self.per_component:
            return False
        if any(n_i != 2 * m_i + 1 for n_i, m_i in stats):
            return False
        if 2 * self.size != 2 * H.m - H.n + self.k:
            return False
        if self.p != H.components().p or self.bound != 2 * H.m - H.n + self.p:
            return False
        return self.size <= self.bound


def greedy_hyperforest(H: Hypergraph) -> FesCertificate:
    """Feedback edge set of size at most 2m - n + p."""
    dsu = DisjointSets(H.n + 1)
    kept: list[int] = []
    removed: list[int] = []
    for j, (a, b, c) in enumerate(H.edges):
        ra, rb, rc = dsu.find(a), dsu.find(b), dsu.find(c)
        if ra != rb and ra != rc and rb != rc:
            dsu.union(a, b)
            dsu.union(a, c)
            kept.append(j)
        else:
            removed.append(j)

    residual = H.delete_edges(removed)
    stats = residual.component_stats()
    cert = FesCertificate(
        A=frozenset(removed),
        kept=frozenset(kept),
        k=len(stats),
        per_component=stats,
        p=H.components().p,
        bound=2 * H.m - H.n + H.components().p,
    )
    if not cert.verify(H):
        raise CertificationError("greedy hyperforest produced an invalid certificate")
    return cert


def verify_fes(H: Hypergraph, A) -> bool:
    """True iff removing the edges of A leaves H acyclic."""
    for e in A:
        if not 0 <= e < H.m:
            raise ValueError(f"edge id {e} out of range 0..{H.m - 1}")
    return H._acyclic_without(dead_edges=A)


def fes_vs_fvs_check(H: Hypergraph, limit: int | None = None) -> bool:
    """Exact feedback vertex number never exceeds the exact edge number."""
    from .oracle import exact_fes, exact_fvs

    return exact_fvs(H, limit=limit).size <= exact_fes(H, limit=limit).size
