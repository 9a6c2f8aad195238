"""Hypergraphs, Levi graphs, duals, and Berge girth.

Vertices and hyperedges are 1-based.  A Berge cycle of length k is an
alternating sequence v0,e0,v1,e1,...,v_{k-1},e_{k-1} (closing at v0) of
distinct vertices and distinct hyperedges with each v_i contained in
its two neighbouring hyperedges.  Girth is computed via the bipartite
incidence (Levi) graph: a Berge cycle of length l is a cycle of length
2l there.

Graph girth itself runs a breadth-first scan from every vertex with
early termination at the current best bound, vectorized over the
adjacency structure so that cubic graphs with tens of thousands of
vertices stay in the seconds range.  An acyclic result and a result
beyond the requested cap are both reported as girth ``None``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Hypergraph",
    "Graph",
    "GirthCertificate",
    "degree_profile",
    "levi",
    "dual",
    "is_linear",
    "berge_girth",
    "graph_girth",
    "check_graph_certificate",
    "check_berge_certificate",
    "read_hypergraph_file",
    "write_hypergraph_file",
    "read_graph_file",
    "write_graph_file",
]


class Hypergraph:
    """A finite hypergraph: ``n`` vertices and a list of hyperedges.

    Hyperedges are stored as sorted vertex tuples.  Each hyperedge must
    be nonempty with distinct vertices, and identical hyperedges are
    rejected: the constructions here are linear, and repeated edges
    would make girth degenerate to 2-cycles of identical sets.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        cooked: list[tuple[int, ...]] = []
        seen: set[tuple[int, ...]] = set()
        for j, raw in enumerate(edges, start=1):
            edge = tuple(sorted(raw))
            if not edge:
                raise ValueError(f"hyperedge {j} is empty")
            if len(set(edge)) != len(edge):
                raise ValueError(f"hyperedge {j} repeats a vertex: {edge}")
            if edge[0] < 1 or edge[-1] > n:
                raise ValueError(f"hyperedge {j} has a vertex outside 1..{n}: {edge}")
            if edge in seen:
                raise ValueError(f"hyperedge {j} duplicates another hyperedge: {edge}")
            seen.add(edge)
            cooked.append(edge)
        self.edges: tuple[tuple[int, ...], ...] = tuple(cooked)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> tuple[int, ...]:
        """Vertex degrees; entry i is the degree of vertex i+1."""
        deg = [0] * self.n
        for edge in self.edges:
            for v in edge:
                deg[v - 1] += 1
        return tuple(deg)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Hypergraph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m})"


class Graph:
    """A simple undirected graph with sorted adjacency lists (1-based)."""

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        if len(adjacency) != n:
            raise ValueError(f"adjacency has {len(adjacency)} rows, expected {n}")
        adj = tuple(tuple(sorted(row)) for row in adjacency)
        for v, row in enumerate(adj, start=1):
            if len(set(row)) != len(row):
                raise ValueError(f"parallel edges at vertex {v}")
            for u in row:
                if not 1 <= u <= n:
                    raise ValueError(f"neighbour {u} of vertex {v} outside 1..{n}")
                if u == v:
                    raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(adj, start=1):
            for u in row:
                if v not in adj[u - 1]:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        self.n = n
        self.adjacency = adj
        self._csr: tuple[np.ndarray, np.ndarray] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} outside 1..{n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"parallel edge {key[0]}-{key[1]}")
            seen.add(key)
            adj[u - 1].append(v)
            adj[v - 1].append(u)
        return cls(n, adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v - 1]

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adjacency)

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def edge_list(self) -> list[tuple[int, int]]:
        """Each undirected edge once, as (u, v) with u < v, sorted."""
        return [(v, u) for v in range(1, self.n + 1)
                for u in self.adjacency[v - 1] if v < u]

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """0-based CSR arrays (indptr, indices) for the girth scan."""
        if self._csr is None:
            degs = np.fromiter((len(row) for row in self.adjacency),
                               count=self.n, dtype=np.int64)
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            np.cumsum(degs, out=indptr[1:])
            indices = np.fromiter(
                (u - 1 for row in self.adjacency for u in row),
                count=int(indptr[-1]), dtype=np.int32)
            self._csr = (indptr, indices)
        return self._csr

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Graph)
                and self.n == other.n and self.adjacency == other.adjacency)

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GirthCertificate:
    """Shortest-cycle witness.

    ``girth`` is None when no cycle exists within the cap (acyclic or
    above-cap; the two are deliberately not distinguished).  For plain
    graphs the witness is ``vertex_cycle``; for hypergraphs the witness
    alternates ``vertex_cycle[i], edge_cycle[i]`` in Berge order.
    """

    girth: int | None
    vertex_cycle: tuple[int, ...] = ()
    edge_cycle: tuple[int, ...] = ()


def degree_profile(h: Hypergraph) -> tuple[int | None, int | None]:
    """(d, r): the common vertex degree and common hyperedge size.

    Either entry is None when the hypergraph is irregular resp.
    non-uniform.  An empty side yields None as well.
    """
    degs = set(h.degrees())
    sizes = {len(e) for e in h.edges}
    d = degs.pop() if len(degs) == 1 else None
    r = sizes.pop() if len(sizes) == 1 else None
    return d, r


def levi(h: Hypergraph) -> Graph:
    """Bipartite incidence graph: black vertices 1..n are the hypergraph
    vertices, white vertices n+1..n+m are the hyperedges."""
    adj: list[list[int]] = [[] for _ in range(h.n + h.m)]
    for j, edge in enumerate(h.edges):
        w = h.n + j + 1
        for v in edge:
            adj[v - 1].append(w)
            adj[w - 1].append(v)
    return Graph(h.n + h.m, adj)


def dual(h: Hypergraph) -> Hypergraph:
    """Swap the roles of vertices and hyperedges.

    Dual vertex j is hyperedge j of ``h``; dual hyperedge i collects the
    hyperedges of ``h`` containing vertex i.  Requires minimum degree 1
    (an isolated vertex would create an empty dual hyperedge).
    """
    degs = h.degrees()
    for v, d in enumerate(degs, start=1):
        if d == 0:
            raise ValueError(f"vertex {v} is isolated; dual would have an empty hyperedge")
    incidence: list[list[int]] = [[] for _ in range(h.n)]
    for j, edge in enumerate(h.edges, start=1):
        for v in edge:
            incidence[v - 1].append(j)
    try:
        return Hypergraph(h.m, incidence)
    except ValueError as exc:
        raise ValueError(f"dual is not a valid hypergraph: {exc}") from None


def is_linear(h: Hypergraph) -> bool:
    """True iff no two distinct hyperedges share two or more vertices.

    Agrees with ``berge_girth(h) >= 3`` (girth 2 is exactly a shared
    pair).
    """
    incidence: list[list[int]] = [[] for _ in range(h.n)]
    for j, edge in enumerate(h.edges):
        for v in edge:
            incidence[v - 1].append(j)
    pair_seen: set[tuple[int, int]] = set()
    for hits in incidence:
        for i in range(len(hits)):
            for j in range(i + 1, len(hits)):
                key = (hits[i], hits[j])
                if key in pair_seen:
                    return False
                pair_seen.add(key)
    return True


# ---------------------------------------------------------------------------
# girth engine


def _girth_scan(indptr: np.ndarray, indices: np.ndarray, n: int,
                cap_len: int) -> tuple[int | None, int | None]:
    """Exact girth (up to cap_len) and a root vertex on a shortest cycle.

    Level-synchronous BFS from every root.  At expansion round t the
    frontier sits at depth t-1; an edge inside the frontier certifies an
    odd closed walk of length 2t-1 through the root, and two frontier
    vertices claiming the same fresh vertex certify an even one of
    length 2t.  Every detected walk contains a cycle no longer than
    itself, and a root on a shortest cycle detects exactly the girth, so
    the minimum over roots is exact.
    """
    best = cap_len + 1
    best_root: int | None = None
    dist = np.empty(n, dtype=np.int16)
    for root in range(n):
        if best == 3:
            break
        dist.fill(-1)
        dist[root] = 0
        frontier = np.array([root], dtype=np.int64)
        t = 1
        while 2 * t - 1 <= best - 1:
            starts = indptr[frontier]
            cnts = indptr[frontier + 1] - starts
            total = int(cnts.sum())
            if total == 0:
                break
            cum = np.cumsum(cnts)
            idx = np.arange(total, dtype=np.int64) + np.repeat(starts - (cum - cnts), cnts)
            nbrs = indices[idx].astype(np.int64, copy=False)
            d = dist[nbrs]
            if (d == t - 1).any():
                best = 2 * t - 1
                best_root = root
                break
            if 2 * t > best - 1:
                break
            fresh = nbrs[d < 0]
            if fresh.size == 0:
                break
            uniq = np.unique(fresh)
            if uniq.size < fresh.size:
                best = 2 * t
                best_root = root
                break
            dist[uniq] = t
            frontier = uniq
            t += 1
    if best > cap_len:
        return None, None
    return best, best_root


def _witness_from_root(adjacency: Sequence[Sequence[int]], root: int,
                       girth: int) -> list[int]:
    """Rebuild a shortest cycle through ``root`` (1-based ids).

    A plain parent-tracking BFS; any closed walk achieving the exact
    girth is necessarily a simple cycle.
    """
    dist = {root: 0}
    parent = {root: 0}
    queue = deque([root])
    limit = girth // 2 + 1
    while queue:
        u = queue.popleft()
        du = dist[u]
        if du > limit:
            break
        for w in adjacency[u - 1]:
            dw = dist.get(w)
            if dw is None:
                dist[w] = du + 1
                parent[w] = u
                queue.append(w)
            elif w != parent[u] and du + dw + 1 == girth:
                path_u = []
                x = u
                while x != 0:
                    path_u.append(x)
                    x = parent[x]
                path_w = []
                x = w
                while x != 0:
                    path_w.append(x)
                    x = parent[x]
                cycle = path_u[::-1] + path_w[:-1]
                if len(set(cycle)) == len(cycle):
                    return cycle
    raise AssertionError(f"no girth-{girth} cycle found through root {root}")


def graph_girth(g: Graph, cap: int | None = None) -> GirthCertificate:
    """Length of a shortest cycle with a witness cycle.

    ``cap`` bounds the cycle length considered; with no cycle of length
    <= cap (or none at all) the certificate carries girth None.
    """
    if g.n == 0 or g.m == 0:
        return GirthCertificate(None)
    cap_len = g.n if cap is None else min(cap, g.n)
    if cap_len < 3:
        return GirthCertificate(None)
    indptr, indices = g.csr()
    value, root = _girth_scan(indptr, indices, g.n, cap_len)
    if value is None:
        return GirthCertificate(None)
    cycle = _witness_from_root(g.adjacency, root + 1, value)
    return GirthCertificate(value, tuple(cycle))


def berge_girth(h: Hypergraph, cap: int | None = None) -> GirthCertificate:
    """Berge girth with an alternating vertex/edge witness.

    Runs the graph girth of the Levi graph and halves it; ``cap`` bounds
    the Berge length (so the Levi scan is capped at 2*cap).
    """
    if h.m == 0 or h.n == 0:
        return GirthCertificate(None)
    lg = levi(h)
    cert = graph_girth(lg, None if cap is None else 2 * cap)
    if cert.girth is None:
        return GirthCertificate(None)
    if cert.girth % 2:
        raise AssertionError("Levi graph produced an odd cycle")
    cycle = list(cert.vertex_cycle)
    # rotate so the cycle starts on a black (hypergraph-vertex) node
    start = next(i for i, x in enumerate(cycle) if x <= h.n)
    cycle = cycle[start:] + cycle[:start]
    vertices = tuple(cycle[0::2])
    edges = tuple(x - h.n for x in cycle[1::2])
    return GirthCertificate(cert.girth // 2, vertices, edges)


def check_graph_certificate(g: Graph, cert: GirthCertificate) -> None:
    """Raise ValueError unless the witness is a valid simple cycle of
    the stated length."""
    if cert.girth is None:
        if cert.vertex_cycle:
            raise ValueError("girth None must carry no witness")
        return
    cyc = cert.vertex_cycle
    if len(cyc) != cert.girth:
        raise ValueError(f"witness length {len(cyc)} != girth {cert.girth}")
    if len(set(cyc)) != len(cyc):
        raise ValueError("witness repeats a vertex")
    for i, v in enumerate(cyc):
        u = cyc[(i + 1) % len(cyc)]
        if u not in g.neighbors(v):
            raise ValueError(f"witness step {v}-{u} is not an edge")


def check_berge_certificate(h: Hypergraph, cert: GirthCertificate) -> None:
    """Raise ValueError unless the witness is a valid Berge cycle of the
    stated length."""
    if cert.girth is None:
        if cert.vertex_cycle or cert.edge_cycle:
            raise ValueError("girth None must carry no witness")
        return
    vs, es = cert.vertex_cycle, cert.edge_cycle
    k = cert.girth
    if len(vs) != k or len(es) != k:
        raise ValueError(f"witness lengths {len(vs)}/{len(es)} != girth {k}")
    if len(set(vs)) != k:
        raise ValueError("witness repeats a vertex")
    if len(set(es)) != k:
        raise ValueError("witness repeats a hyperedge")
    for i in range(k):
        e = h.edges[es[i] - 1]
        if vs[i] not in e or vs[(i + 1) % k] not in e:
            raise ValueError(
                f"hyperedge {es[i]} does not contain both {vs[i]} and {vs[(i + 1) % k]}")


# ---------------------------------------------------------------------------
# file formats


def _data_lines(text: str) -> Iterator[str]:
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def read_hypergraph_file(path: str | Path) -> Hypergraph:
    """Format: '#' comments; ``<n> <m>``; then m lines of vertex ids."""
    lines = list(_data_lines(Path(path).read_text()))
    if not lines:
        raise ValueError(f"{path}: no data lines")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"{path}: expected '<n> <m>' header, got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"{path}: expected {m} hyperedge lines, found {len(lines) - 1}")
    edges = [[int(tok) for tok in line.split()] for line in lines[1:]]
    return Hypergraph(n, edges)


def write_hypergraph_file(path: str | Path, h: Hypergraph,
                          header: Iterable[str] = ()) -> None:
    lines = [f"# {s}" for s in header]
    lines.append(f"{h.n} {h.m}")
    lines.extend(" ".join(str(v) for v in edge) for edge in h.edges)
    Path(path).write_text("\n".join(lines) + "\n")


def read_graph_file(path: str | Path) -> Graph:
    """Format: '#' comments; ``<n> <m>``; then m lines ``<u> <v>``."""
    lines = list(_data_lines(Path(path).read_text()))
    if not lines:
        raise ValueError(f"{path}: no data lines")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"{path}: expected '<n> <m>' header, got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"{path}: expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        toks = line.split()
        if len(toks) != 2:
            raise ValueError(f"{path}: bad edge line {line!r}")
        edges.append((int(toks[0]), int(toks[1])))
    return Graph.from_edges(n, edges)


def write_graph_file(path: str | Path, g: Graph, header: Iterable[str] = ()) -> None:
    edges = g.edge_list()
    lines = [f"# {s}" for s in header]
    lines.append(f"{g.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    Path(path).write_text("\n".join(lines) + "\n")
