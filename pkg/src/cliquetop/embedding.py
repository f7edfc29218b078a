"""Backtracking search for face-preserving vertex injections between complexes."""

from __future__ import annotations

from itertools import combinations

from .complex import Complex2


def find_embedding(Z: Complex2, X: Complex2, fixed: dict[int, int] | None = None) -> dict[int, int] | None:
    """Injective map V(Z) -> V(X) sending edges to edges and triangles to triangles.

    ``fixed`` pins some vertices (e.g. roots to themselves).  Vertices are
    placed in order of decreasing degree, each candidate checked against the
    already placed neighbours and triangles.
    """
    fixed = dict(fixed or {})
    if Z.n > X.n:
        return None
    zadj = Z.adjacency()
    xadj = X.adjacency()
    xtri = set(X.triangles)
    ztri_at: dict[int, list[tuple[int, int]]] = {v: [] for v in Z.vertices}
    for t in Z.triangles:
        for v in t:
            ztri_at[v].append(tuple(x for x in t if x != v))

    for zv, xv in fixed.items():
        if not 1 <= xv <= X.n:
            return None
    if len(set(fixed.values())) != len(fixed):
        return None
    for (a, b) in combinations(fixed, 2):
        if b in zadj[a] and fixed[b] not in xadj[fixed[a]]:
            return None
    for t in Z.triangles:
        if all(v in fixed for v in t) and tuple(sorted(fixed[v] for v in t)) not in xtri:
            return None

    order = sorted((v for v in Z.vertices if v not in fixed), key=lambda v: (-len(zadj[v]), v))
    phi = dict(fixed)
    used = set(phi.values())

    def ok(zv: int, xv: int) -> bool:
        if len(xadj[xv]) < len(zadj[zv]):
            return False
        for w in zadj[zv]:
            if w in phi and phi[w] not in xadj[xv]:
                return False
        for a, b in ztri_at[zv]:
            if a in phi and b in phi and tuple(sorted((xv, phi[a], phi[b]))) not in xtri:
                return False
        return True

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        zv = order[k]
        placed = [phi[w] for w in zadj[zv] if w in phi]
        if placed:
            cands = set(xadj[placed[0]])
            for x in placed[1:]:
                cands &= xadj[x]
            cands = sorted(cands)
        else:
            cands = X.vertices
        for xv in cands:
            if xv in used or not ok(zv, xv):
                continue
            phi[zv] = xv
            used.add(xv)
            if extend(k + 1):
                return True
            del phi[zv]
            used.discard(xv)
        return False

    return dict(phi) if extend(0) else None


def is_subcomplex_embedding(Z: Complex2, X: Complex2, phi: dict[int, int]) -> bool:
    if sorted(phi) != list(Z.vertices) or len(set(phi.values())) != Z.n:
        return False
    xe, xt = set(X.edges), set(X.triangles)
    return (all(tuple(sorted((phi[u], phi[v]))) in xe for u, v in Z.edges)
            and all(tuple(sorted(phi[x] for x in t)) in xt for t in Z.triangles))
