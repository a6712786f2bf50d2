"""3-uniform hypergraphs with Berge-cycle machinery.

Vertices are 1-based integer ids and never get renumbered by deletions.
Edges are strictly increasing triples, stored in lexicographic order; an
edge id is its position in that order, so ids are stable across a
serialize/parse round trip.  Deleting edges renumbers the survivors
(callers that need stable edge ids track the mapping themselves).

Cycle questions are answered on the bipartite incidence graph (one node
per vertex, one per edge): Berge cycles of length k correspond exactly to
incidence cycles of length 2k, so forest checks, girth and explicit
shortest cycles all reduce to ordinary graph work at twice the length.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass


class HypergraphError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(HypergraphError):
    """Malformed hypergraph text.  Carries the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class CertificationError(HypergraphError):
    """An internal consistency check failed: a bug, never an input error."""


class DisjointSets:
    """Union-find over 0..size-1 with path compression."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of x and y; False iff they were already joined."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        self.count -= 1
        return True


@dataclass(frozen=True)
class BergeCycle:
    """Alternating cycle v1 e1 v2 e2 ... vk ek v1.

    vertices[i] and vertices[i+1] (cyclically) both lie in edges[i]; all
    vertices are pairwise distinct and so are all edges.  Lengths k >= 2.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.edges)

    def validate(self, H: "Hypergraph") -> None:
        """Raise CertificationError unless this is a genuine Berge cycle of H."""
        k = self.k
        if k < 2 or len(self.vertices) != k:
            raise CertificationError(f"cycle must alternate k>=2 vertices and edges, got {self}")
        if len(set(self.vertices)) != k:
            raise CertificationError(f"repeated vertex in cycle {self}")
        if len(set(self.edges)) != k:
            raise CertificationError(f"repeated edge in cycle {self}")
        for e in self.edges:
            if not 0 <= e < H.m:
                raise CertificationError(f"edge id {e} out of range in cycle")
        for i in range(k):
            a, b = self.vertices[i], self.vertices[(i + 1) % k]
            members = H.edges[self.edges[i]]
            if a not in members or b not in members:
                raise CertificationError(
                    f"edge {self.edges[i]} does not contain consecutive vertices {a},{b}"
                )


@dataclass
class ComponentPartition:
    """Vertex -> component index (0-based); isolated vertices are singletons.

    Components are numbered by their smallest vertex, so the numbering is
    deterministic for a given hypergraph.
    """

    assignment: dict[int, int]
    p: int

    def component_of(self, v: int) -> int:
        return self.assignment[v]

    def vertices_of(self, c: int) -> list[int]:
        return sorted(v for v, i in self.assignment.items() if i == c)


class Hypergraph:
    """Immutable 3-uniform hypergraph on vertices 1..n."""

    __slots__ = ("n", "edges", "_incident")

    def __init__(self, n: int, edges):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        normalized = []
        seen = set()
        for raw in edges:
            e = tuple(sorted(raw))
            if len(e) != 3 or len(set(e)) != 3:
                raise ValueError(f"edge must be three distinct vertices, got {tuple(raw)}")
            for v in e:
                if not isinstance(v, int) or not 1 <= v <= n:
                    raise ValueError(f"vertex id {v} out of range 1..{n} in edge {tuple(raw)}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        normalized.sort()
        self.n = n
        self.edges = tuple(normalized)
        incident: list[list[int]] = [[] for _ in range(n + 1)]
        for j, e in enumerate(self.edges):
            for v in e:
                incident[v].append(j)
        self._incident = tuple(tuple(ids) for ids in incident)

    # -- basics ---------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex id {v} out of range 1..{self.n}")

    def _check_edge(self, e: int) -> None:
        if not 0 <= e < self.m:
            raise ValueError(f"edge id {e} out of range 0..{self.m - 1}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._incident[v])

    def edges_at(self, v: int) -> tuple[int, ...]:
        """Ids of the edges containing v, ascending."""
        self._check_vertex(v)
        return self._incident[v]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m})"

    # -- components -----------------------------------------------------

    def components(self) -> ComponentPartition:
        dsu = DisjointSets(self.n + 1)
        for a, b, c in self.edges:
            dsu.union(a, b)
            dsu.union(a, c)
        roots: dict[int, int] = {}
        assignment: dict[int, int] = {}
        for v in range(1, self.n + 1):
            r = dsu.find(v)
            if r not in roots:
                roots[r] = len(roots)  # first visit = smallest vertex of the component
            assignment[v] = roots[r]
        return ComponentPartition(assignment=assignment, p=len(roots))

    def component_stats(self) -> list[tuple[int, int]]:
        """(n_i, m_i) per component, in component order."""
        comp = self.components()
        sizes = [0] * comp.p
        counts = [0] * comp.p
        for v in range(1, self.n + 1):
            sizes[comp.assignment[v]] += 1
        for e in self.edges:
            counts[comp.assignment[e[0]]] += 1
        return list(zip(sizes, counts))

    def check_component_bound(self) -> bool:
        """Every component satisfies n_i <= 2*m_i + 1."""
        return all(n_i <= 2 * m_i + 1 for n_i, m_i in self.component_stats())

    def is_hypertree(self) -> bool:
        """Connected and acyclic.  Such graphs have n = 2m + 1 exactly."""
        if self.components().p != 1 or not self.is_acyclic():
            return False
        assert self.n == 2 * self.m + 1, "hypertree with n != 2m+1 (internal bug)"
        return True

    def is_two_cycle_component(self, c: int) -> bool:
        """True iff component c is two edges sharing exactly two vertices."""
        comp = self.components()
        if not 0 <= c < comp.p:
            raise ValueError(f"component index {c} out of range 0..{comp.p - 1}")
        eids = [j for j, e in enumerate(self.edges) if comp.assignment[e[0]] == c]
        if len(eids) != 2:
            return False
        e, f = (set(self.edges[j]) for j in eids)
        return len(e & f) == 2

    # -- linearity and acyclicity ---------------------------------------

    def is_linear(self) -> bool:
        """No two edges share more than one vertex."""
        covered = set()
        for a, b, c in self.edges:
            for pair in ((a, b), (a, c), (b, c)):
                if pair in covered:
                    return False
                covered.add(pair)
        return True

    def _acyclic_without(self, dead_vertices=(), dead_edges=()) -> bool:
        """Forest test on the incidence graph, ignoring the given vertices/edges.

        A deleted vertex takes every incident edge with it (strong deletion).
        """
        dv = set(dead_vertices)
        de = set(dead_edges)
        # nodes: vertex v -> v-1, edge j -> n + j
        dsu = DisjointSets(self.n + self.m)
        for j, e in enumerate(self.edges):
            if j in de or (dv and not dv.isdisjoint(e)):
                continue
            for v in e:
                if not dsu.union(v - 1, self.n + j):
                    return False
        return True

    def is_acyclic(self) -> bool:
        return self._acyclic_without()

    # -- incidence-graph helpers ----------------------------------------
    # Node numbering for BFS work: vertex v -> v, edge j -> n + 1 + j.

    def _incidence_adj(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n + self.m + 1)]
        for j, e in enumerate(self.edges):
            node = self.n + 1 + j
            for v in e:
                adj[v].append(node)
                adj[node].append(v)
        return adj

    def _vertex_distances(self) -> list[list[int]]:
        """Hypergraph distance (edge count) between all vertex pairs; -1 if apart."""
        adj = self._incidence_adj()
        size = self.n + self.m + 1
        table = [[-1] * (self.n + 1)]
        for s in range(1, self.n + 1):
            dist = [-1] * size
            dist[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for w in adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        q.append(w)
            row = [-1] * (self.n + 1)
            for v in range(1, self.n + 1):
                row[v] = dist[v] // 2 if dist[v] >= 0 else -1
            table.append(row)
        return table

    def _girth(self) -> int | None:
        """Exact shortest Berge-cycle length, None when acyclic.

        BFS from every vertex node; every non-tree incidence edge closes a
        walk of length dist[u]+dist[w]+1 which is never shorter than the
        girth, and for some root on a shortest cycle the bound is met.
        """
        if self.is_acyclic():
            return None
        adj = self._incidence_adj()
        size = self.n + self.m + 1
        best: int | None = None
        for s in range(1, self.n + 1):
            if len(self._incident[s]) < 2:
                continue  # cannot lie on a cycle
            dist = [-1] * size
            parent = [-1] * size
            dist[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for w in adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        q.append(w)
                    elif parent[u] != w:
                        cand = dist[u] + dist[w] + 1
                        if best is None or cand < best:
                            best = cand
        assert best is not None and best % 2 == 0, "incidence graph girth must be even"
        return best // 2

    # -- explicit shortest cycles ---------------------------------------

    @staticmethod
    def _canonical_rep(verts: tuple[int, ...], eids: tuple[int, ...]):
        """Smallest (edge sequence, vertex sequence) over rotations/reflections."""
        k = len(eids)
        best = None
        for vs, es in ((verts, eids),
                       ((verts[0],) + tuple(reversed(verts[1:])), tuple(reversed(eids)))):
            for s in range(k):
                cand = (es[s:] + es[:s], vs[s:] + vs[:s])
                if best is None or cand < best:
                    best = cand
        return best

    def _min_cycles(self, length: int, anchor: int | None = None) -> set:
        """All canonical cycles of exactly `length`; restricted to those through
        `anchor` when given, otherwise anchored at their own smallest edge id."""
        vdist = self._vertex_distances()
        results: set = set()
        anchors = [anchor] if anchor is not None else range(self.m)

        def extend(verts: list[int], eids: list[int], used_v: set, used_e: set, home: int, floor: int):
            cur = verts[-1]
            remaining = length - len(eids)
            if remaining == 0:
                return  # closed elsewhere
            if remaining == 1:
                for e in self._incident[cur]:
                    if e in used_e or e < floor:
                        continue
                    members = self.edges[e]
                    if home in members:
                        rep = self._canonical_rep(tuple(verts), tuple(eids) + (e,))
                        results.add(rep)
                return
            d = vdist[cur][home]
            if d < 0 or d > remaining:
                return
            for e in self._incident[cur]:
                if e in used_e or e < floor:
                    continue
                for w in self.edges[e]:
                    if w == cur or w in used_v:
                        continue
                    verts.append(w)
                    eids.append(e)
                    used_v.add(w)
                    used_e.add(e)
                    extend(verts, eids, used_v, used_e, home, floor)
                    used_e.discard(e)
                    used_v.discard(w)
                    eids.pop()
                    verts.pop()

        for c1 in anchors:
            floor = 0 if anchor is not None else c1  # later edges may not undercut the anchor
            a, b, c = self.edges[c1]
            for v1 in (a, b, c):
                for v2 in (a, b, c):
                    if v1 == v2:
                        continue
                    extend([v1, v2], [c1], {v1, v2}, {c1}, v1, floor)
        return results

    def _assert_shortest_properties(self, cyc: BergeCycle) -> None:
        # On linear inputs a shortest cycle of length >= 3 has all its
        # non-adjacent edge pairs disjoint; anything else is a search bug.
        k = cyc.k
        if k < 3 or not self.is_linear():
            return
        for i in range(k):
            for j in range(i + 1, k):
                if j == i + 1 or (i == 0 and j == k - 1):
                    continue
                ei = set(self.edges[cyc.edges[i]])
                ej = set(self.edges[cyc.edges[j]])
                if ei & ej:
                    raise CertificationError(
                        f"non-adjacent edges {cyc.edges[i]},{cyc.edges[j]} of a shortest cycle intersect"
                    )

    def shortest_cycle(self) -> BergeCycle | None:
        """Lexicographically smallest among the shortest Berge cycles, or None."""
        g = self._girth()
        if g is None:
            return None
        cycles = self._min_cycles(g)
        assert cycles, "girth computed but no cycle of that length found"
        es, vs = min(cycles)
        cyc = BergeCycle(vertices=vs, edges=es)
        cyc.validate(self)
        self._assert_shortest_properties(cyc)
        return cyc

    def _shortest_length_through(self, e: int) -> int | None:
        """Length of a shortest cycle using edge e, None if e lies on no cycle."""
        a, b, c = self.edges[e]
        adj = self._incidence_adj()
        enode = self.n + 1 + e
        best = None
        for start, targets in ((a, (b, c)), (b, (c,))):
            dist = [-1] * (self.n + self.m + 1)
            dist[start] = 0
            q = deque([start])
            while q:
                u = q.popleft()
                for w in adj[u]:
                    if w == enode or dist[w] >= 0:
                        continue
                    dist[w] = dist[u] + 1
                    q.append(w)
            for t in targets:
                if dist[t] >= 0:
                    cand = dist[t] // 2 + 1  # path edges + the closing edge e
                    if best is None or cand < best:
                        best = cand
        return best

    def cycle_through_edge(self, e: int) -> BergeCycle | None:
        """Shortest Berge cycle whose edge list contains e, smallest-first ties."""
        self._check_edge(e)
        length = self._shortest_length_through(e)
        if length is None:
            return None
        cycles = {rep for rep in self._min_cycles(length, anchor=e) if e in rep[0]}
        assert cycles, "shortest length through edge computed but no cycle found"
        es, vs = min(cycles)
        cyc = BergeCycle(vertices=vs, edges=es)
        cyc.validate(self)
        return cyc

    def edges_on_cycles(self) -> frozenset[int]:
        return frozenset(
            e for e in range(self.m) if self._shortest_length_through(e) is not None
        )

    def vertices_on_cycles(self) -> frozenset[int]:
        """Vertices lying on at least one Berge cycle."""
        out = []
        for v in range(1, self.n + 1):
            mine = self._incident[v]
            if len(mine) < 2:
                continue
            # v is on a cycle iff two of its edges stay connected without v
            dsu = DisjointSets(self.n + self.m)
            for j, e in enumerate(self.edges):
                for w in e:
                    if w != v:
                        dsu.union(w - 1, self.n + j)
            roots = {dsu.find(self.n + j) for j in mine}
            if len(roots) < len(mine):
                out.append(v)
        return frozenset(out)

    # -- deletion -------------------------------------------------------

    def delete_vertex(self, v: int) -> "Hypergraph":
        """Strong deletion: v keeps its id but loses every incident edge."""
        self._check_vertex(v)
        return Hypergraph(self.n, [e for e in self.edges if v not in e])

    def delete_vertices(self, vs) -> "Hypergraph":
        dead = set(vs)
        for v in dead:
            self._check_vertex(v)
        return Hypergraph(self.n, [e for e in self.edges if dead.isdisjoint(e)])

    def delete_edges(self, eids) -> "Hypergraph":
        dead = set(eids)
        for e in dead:
            self._check_edge(e)
        return Hypergraph(self.n, [e for j, e in enumerate(self.edges) if j not in dead])

    # -- text format ----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"3uhg {self.n} {self.m}"]
        lines.extend(f"{a} {b} {c}" for a, b, c in self.edges)
        return "\n".join(lines) + "\n"

    def instance_hash(self) -> str:
        """Stable 16-hex digest of the normalized serialization."""
        return hashlib.sha256(self.to_text().encode()).hexdigest()[:16]


def parse(text: str) -> Hypergraph:
    """Parse the plain text format: header '3uhg n m', then m triples."""
    content: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        content.append((lineno, stripped))
    if not content:
        raise ParseError("missing header '3uhg <n> <m>'", 1)

    lineno, header = content[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "3uhg":
        raise ParseError(f"expected header '3uhg <n> <m>', got {header!r}", lineno)
    try:
        n, m = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError(f"header counts must be integers, got {header!r}", lineno) from None
    if n < 0 or m < 0:
        raise ParseError(f"header counts must be non-negative, got {header!r}", lineno)

    edges: list[tuple[int, int, int]] = []
    seen: dict[tuple[int, int, int], int] = {}
    for lineno, line in content[1:]:
        if len(edges) == m:
            raise ParseError(f"unexpected content after {m} edges: {line!r}", lineno)
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(f"edge needs exactly 3 vertex ids, got {len(tokens)}", lineno)
        try:
            triple = tuple(int(t) for t in tokens)
        except ValueError:
            raise ParseError(f"vertex ids must be integers, got {line!r}", lineno) from None
        for v in triple:
            if not 1 <= v <= n:
                raise ParseError(f"vertex id {v} out of range 1..{n}", lineno)
        if len(set(triple)) != 3:
            raise ParseError(f"repeated vertex in edge {line!r}", lineno)
        key = tuple(sorted(triple))
        if key in seen:
            raise ParseError(f"duplicate edge {line!r} (first at line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append(key)
    if len(edges) != m:
        last = content[-1][0] if content else 1
        raise ParseError(f"expected {m} edge lines, found {len(edges)}", last)
    return Hypergraph(n, edges)


def parse_file(path) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
