"""Finite 2-dimensional simplicial and polygonal cell complexes.

Vertices are the integers ``1..n``.  Edges and triangles are stored as sorted
tuples in sorted order, so two complexes with the same faces compare equal.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

Edge = tuple[int, int]
Triangle = tuple[int, int, int]


class ComplexError(ValueError):
    """Raised when faces violate index range or closure."""


class FVector(NamedTuple):
    f0: int
    f1: int
    f2: int


@dataclass(frozen=True)
class LinkGraph:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {u: set() for u in self.vertices}
        for u, w in self.edges:
            adj[u].add(w)
            adj[w].add(u)
        return adj


def _check_vertex(v: int, n: int) -> None:
    if not 1 <= v <= n:
        raise ComplexError(f"vertex {v} outside 1..{n}")


def _canon_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ComplexError(f"degenerate edge {{{u},{v}}}")
    return (u, v) if u < v else (v, u)


def _canon_triangle(u: int, v: int, w: int) -> Triangle:
    t = tuple(sorted((u, v, w)))
    if t[0] == t[1] or t[1] == t[2]:
        raise ComplexError(f"degenerate triangle {{{u},{v},{w}}}")
    return t  # type: ignore[return-value]


@dataclass(frozen=True)
class Complex2:
    """A 2-dimensional simplicial complex on vertices ``1..n``.

    Use :func:`build_complex` for untrusted input; the constructor itself
    validates ranges and closure but expects canonical (sorted) faces.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    triangles: tuple[Triangle, ...] = ()
    _adj: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise ComplexError("negative vertex count")
        eset = set(self.edges)
        if len(eset) != len(self.edges):
            raise ComplexError("duplicate edge")
        for u, v in self.edges:
            _check_vertex(u, self.n)
            _check_vertex(v, self.n)
            if not u < v:
                raise ComplexError(f"edge {(u, v)} not in canonical order")
        if len(set(self.triangles)) != len(self.triangles):
            raise ComplexError("duplicate triangle")
        for t in self.triangles:
            if not t[0] < t[1] < t[2]:
                raise ComplexError(f"triangle {t} not in canonical order")
            for e in combinations(t, 2):
                if e not in eset:
                    raise ComplexError(
                        f"closure violated: triangle {{{t[0]},{t[1]},{t[2]}}} "
                        f"is missing edge {{{e[0]},{e[1]}}}"
                    )

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacency(self) -> dict[int, set[int]]:
        """Neighbor sets of the 1-skeleton (cached; do not mutate)."""
        if self._adj is None:
            adj: dict[int, set[int]] = {v: set() for v in self.vertices}
            for u, v in self.edges:
                adj[u].add(v)
                adj[v].add(u)
            object.__setattr__(self, "_adj", adj)
        return self._adj

    def f_vector(self) -> FVector:
        return FVector(self.n, len(self.edges), len(self.triangles))

    def __str__(self):
        return f"Complex2(n={self.n}, f={tuple(self.f_vector())})"


@dataclass(frozen=True)
class CellComplex2:
    """Graph plus 2-cells glued along closed walks of length 3 or 4."""

    n: int
    edges: tuple[Edge, ...] = ()
    cells: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        eset = set(self.edges)
        if len(eset) != len(self.edges):
            raise ComplexError("duplicate edge")
        for u, v in self.edges:
            _check_vertex(u, self.n)
            _check_vertex(v, self.n)
            if not u < v:
                raise ComplexError(f"edge {(u, v)} not in canonical order")
        for walk in self.cells:
            if len(walk) not in (3, 4):
                raise ComplexError(f"cell {walk} must have length 3 or 4")
            if len(set(walk)) != len(walk):
                raise ComplexError(f"cell {walk} repeats a vertex")
            for a, b in zip(walk, walk[1:] + walk[:1]):
                if _canon_edge(a, b) not in eset:
                    raise ComplexError(f"cell {walk} uses missing edge {{{a},{b}}}")

    def f_vector(self) -> FVector:
        return FVector(self.n, len(self.edges), len(self.cells))


def build_complex(n: int, edges: Iterable[Sequence[int]] = (),
                  triangles: Iterable[Sequence[int]] = ()) -> Complex2:
    """Validate raw faces, drop duplicates and return a canonical complex."""
    es = set()
    for e in edges:
        u, v = e
        _check_vertex(u, n)
        _check_vertex(v, n)
        es.add(_canon_edge(u, v))
    ts = set()
    for t in triangles:
        u, v, w = t
        for x in t:
            _check_vertex(x, n)
        ts.add(_canon_triangle(u, v, w))
    return Complex2(n, tuple(sorted(es)), tuple(sorted(ts)))


def _triangles_of_graph(n: int, edges: Sequence[Edge]) -> list[Triangle]:
    adj: dict[int, set[int]] = defaultdict(set)
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    tris = []
    for u, v in edges:
        for w in adj[u] & adj[v]:
            if w > v:
                tris.append((u, v, w))
    tris.sort()
    return tris


def clique_two_skeleton(n: int, edges: Iterable[Sequence[int]]) -> Complex2:
    """Graph on ``1..n`` together with every triangle of the graph."""
    es = build_complex(n, edges).edges
    return Complex2(n, es, tuple(_triangles_of_graph(n, es)))


def f_vector(X: Complex2 | CellComplex2) -> FVector:
    return X.f_vector()


def euler_characteristic(X: Complex2 | CellComplex2) -> int:
    f0, f1, f2 = X.f_vector()
    return f0 - f1 + f2


def l_functional(X: Complex2) -> int:
    """L(X) = 2 f1 - 3 f2."""
    _, f1, f2 = X.f_vector()
    return 2 * f1 - 3 * f2


def vertex_link(X: Complex2, v: int) -> LinkGraph:
    if not 1 <= v <= X.n:
        raise ComplexError(f"unknown vertex {v}")
    nbrs = tuple(sorted(X.adjacency()[v]))
    ledges = []
    for t in X.triangles:
        if v in t:
            a, b = (x for x in t if x != v)
            ledges.append((a, b))
    return LinkGraph(nbrs, tuple(sorted(ledges)))


def all_links(X: Complex2) -> dict[int, LinkGraph]:
    """Links of every vertex, in one pass over the triangles."""
    ledges: dict[int, list[Edge]] = {v: [] for v in X.vertices}
    for a, b, c in X.triangles:
        ledges[a].append((b, c))
        ledges[b].append((a, c))
        ledges[c].append((a, b))
    adj = X.adjacency()
    return {v: LinkGraph(tuple(sorted(adj[v])), tuple(sorted(ledges[v]))) for v in X.vertices}


def _components(vertices: Iterable[int], adj: dict[int, set[int]]) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for s in vertices:
        if s in seen:
            continue
        seen.add(s)
        stack, comp = [s], [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
                    comp.append(w)
        comps.append(sorted(comp))
    return comps


def _has_cut_vertex(vertices: Sequence[int], adj: dict[int, set[int]]) -> bool:
    # Tarjan low-link, iterative; assumes the graph is connected.
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    root = vertices[0]
    timer = 0
    disc[root] = low[root] = timer
    root_children = 0
    stack = [(root, None, iter(sorted(adj[root])))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if w in disc:
                low[u] = min(low[u], disc[w])
            else:
                timer += 1
                disc[w] = low[w] = timer
                stack.append((w, u, iter(sorted(adj[w]))))
                advanced = True
                break
        if advanced:
            continue
        stack.pop()
        if parent is not None:
            low[parent] = min(low[parent], low[u])
            if parent == root:
                root_children += 1
            elif low[u] >= disc[parent]:
                return True
    return root_children > 1


def is_normal(X: Complex2) -> bool:
    """Every non-isolated vertex has a connected link."""
    for link in all_links(X).values():
        if not link.vertices:
            continue
        if len(_components(link.vertices, link.adjacency())) != 1:
            return False
    return True


def is_two_normal(X: Complex2) -> bool:
    """Normal, and no link on three or more vertices has a cut vertex."""
    if not is_normal(X):
        return False
    for link in all_links(X).values():
        if len(link.vertices) >= 3 and _has_cut_vertex(link.vertices, link.adjacency()):
            return False
    return True


def induced_subcomplex(X: Complex2, vertices: Iterable[int], relabel: bool = True) -> Complex2:
    """Full subcomplex on ``vertices``; relabels order-preservingly to 1..k."""
    vs = sorted(set(vertices))
    keep = set(vs)
    es = [e for e in X.edges if e[0] in keep and e[1] in keep]
    ts = [t for t in X.triangles if t[0] in keep and t[1] in keep and t[2] in keep]
    if not relabel:
        return Complex2(X.n, tuple(es), tuple(ts))
    return relabel_complex(X.n, es, ts, vs)


def relabel_complex(n: int, edges, triangles, vertices: Sequence[int]) -> Complex2:
    """Restrict to ``vertices`` (sorted) and renumber them 1..k in order."""
    m = {v: i + 1 for i, v in enumerate(vertices)}
    return Complex2(
        len(vertices),
        tuple(sorted((m[u], m[v]) for u, v in edges)),
        tuple(sorted((m[a], m[b], m[c]) for a, b, c in triangles)),
    )


def permute_vertices(X: Complex2, perm: dict[int, int]) -> Complex2:
    """Apply a bijection of 1..n to the vertices of X."""
    return build_complex(
        X.n,
        [(perm[u], perm[v]) for u, v in X.edges],
        [tuple(perm[x] for x in t) for t in X.triangles],
    )


def component_vertex_sets(X: Complex2 | CellComplex2) -> list[list[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(1, X.n + 1)}
    for u, v in X.edges:
        adj[u].add(v)
        adj[v].add(u)
    return _components(range(1, X.n + 1), adj)


def connected_components(X: Complex2) -> list[Complex2]:
    """Components of the 1-skeleton, each relabeled to 1..k, ordered by least vertex."""
    return [induced_subcomplex(X, vs) for vs in component_vertex_sets(X)]


def is_connected(X: Complex2 | CellComplex2) -> bool:
    return len(component_vertex_sets(X)) <= 1


def collapse_free_faces(X: Complex2) -> Complex2:
    """Perform elementary collapses until no free face remains.

    Phase one removes (edge, triangle) pairs where the edge lies in exactly
    one triangle; phase two removes (vertex, edge) pairs where the vertex lies
    in exactly one edge.  Each step takes the lexicographically smallest free
    face.  Surviving vertices are renumbered 1..k in order.
    """
    tris = set(X.triangles)
    cofaces: dict[Edge, set[Triangle]] = {e: set() for e in X.edges}
    for t in tris:
        for e in combinations(t, 2):
            cofaces[e].add(t)

    heap = [e for e, c in cofaces.items() if len(c) == 1]
    heapq.heapify(heap)
    edges = set(X.edges)
    while heap:
        e = heapq.heappop(heap)
        if e not in edges or len(cofaces[e]) != 1:
            continue
        (t,) = cofaces[e]
        tris.discard(t)
        edges.discard(e)
        del cofaces[e]
        for f in combinations(t, 2):
            if f != e:
                cofaces[f].discard(t)
                if len(cofaces[f]) == 1:
                    heapq.heappush(heap, f)

    star: dict[int, set[Edge]] = {v: set() for v in X.vertices}
    for e in edges:
        star[e[0]].add(e)
        star[e[1]].add(e)
    alive = set(X.vertices)
    vheap = [v for v, s in star.items() if len(s) == 1]
    heapq.heapify(vheap)
    while vheap:
        v = heapq.heappop(vheap)
        if v not in alive or len(star[v]) != 1:
            continue
        (e,) = star[v]
        # a vertex in one edge lies in no triangle, so neither does e
        edges.discard(e)
        alive.discard(v)
        w = e[0] if e[1] == v else e[1]
        star[w].discard(e)
        star[v].clear()
        if len(star[w]) == 1:
            heapq.heappush(vheap, w)

    return relabel_complex(X.n, edges, tris, sorted(alive))
