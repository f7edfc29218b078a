"""Cellular homology of 2-complexes over F2, Q and Z.

Faces are indexed in sorted order.  An edge ``(u, v)`` with ``u < v`` is
oriented from u to v; a 2-cell with boundary walk ``(v0, ..., vk-1)``
contributes +1 to each edge it traverses forwards and -1 to each edge it
traverses backwards.  For a triangle ``u < v < w`` this gives +1 on uv and vw
and -1 on uw.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .complex import CellComplex2, Complex2


def _cells(X: Complex2 | CellComplex2) -> Sequence[Sequence[int]]:
    return X.cells if isinstance(X, CellComplex2) else X.triangles


def _walk_chain(walk: Sequence[int], edge_index: dict) -> dict[int, int]:
    chain: dict[int, int] = {}
    for a, b in zip(walk, list(walk[1:]) + [walk[0]]):
        key = (a, b) if a < b else (b, a)
        i = edge_index[key]
        chain[i] = chain.get(i, 0) + (1 if a < b else -1)
    return {i: c for i, c in chain.items() if c}


def boundary_matrices(X: Complex2 | CellComplex2) -> tuple[np.ndarray, np.ndarray]:
    """Dense integer matrices (d1: vertices x edges, d2: edges x 2-cells)."""
    f0, f1, f2 = X.f_vector()
    d1 = np.zeros((f0, f1), dtype=np.int64)
    for j, (u, v) in enumerate(X.edges):
        d1[u - 1, j] -= 1
        d1[v - 1, j] += 1
    eidx = {e: i for i, e in enumerate(X.edges)}
    d2 = np.zeros((f1, f2), dtype=np.int64)
    for j, walk in enumerate(_cells(X)):
        for i, c in _walk_chain(walk, eidx).items():
            d2[i, j] = c
    assert not (d1 @ d2).any(), "d1 d2 != 0"
    return d1, d2


# -- F2 ----------------------------------------------------------------------

def _column_bits(X: Complex2 | CellComplex2) -> tuple[list[int], list[int]]:
    """Columns of d1 and d2 mod 2, each packed into one int."""
    eidx = {e: i for i, e in enumerate(X.edges)}
    d1 = [(1 << (u - 1)) | (1 << (v - 1)) for u, v in X.edges]
    d2 = []
    for walk in _cells(X):
        bits = 0
        for i, c in _walk_chain(walk, eidx).items():
            if c % 2:
                bits |= 1 << i
        d2.append(bits)
    return d1, d2


class F2Basis:
    """Echelon basis of a subspace of F2^N, vectors packed as ints."""

    def __init__(self, vectors: Iterable[int] = ()):
        self.pivots: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, v: int) -> int:
        piv = self.pivots
        while v:
            h = v.bit_length() - 1
            b = piv.get(h)
            if b is None:
                return v
            v ^= b
        return 0

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if v:
            self.pivots[v.bit_length() - 1] = v
            return True
        return False

    def __len__(self):
        return len(self.pivots)

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0


def rank_f2(vectors: Iterable[int]) -> int:
    return len(F2Basis(vectors))


def rank_f2_dense(M: np.ndarray) -> int:
    """Plain Gaussian elimination mod 2 on a dense array."""
    A = (np.asarray(M) % 2).astype(np.uint8)
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i, c]), None)
        if piv is None:
            continue
        A[[r, piv]] = A[[piv, r]]
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] ^= A[r]
        r += 1
        if r == rows:
            break
    return r


def betti_f2(X: Complex2 | CellComplex2) -> tuple[int, int, int]:
    f0, f1, f2 = X.f_vector()
    c1, c2 = _column_bits(X)
    r1, r2 = rank_f2(c1), rank_f2(c2)
    return f0 - r1, f1 - r1 - r2, f2 - r2


# -- Z -----------------------------------------------------------------------

def _sparse_rows(M) -> list[dict[int, int]]:
    M = np.asarray(M)
    return [{j: int(x) for j, x in enumerate(row) if x} for row in M]


def invariant_factors(M) -> list[int]:
    """Nonzero Smith-normal-form diagonal of an integer matrix, as a divisibility chain.

    ``M`` is a 2-d array or a list of sparse rows ``{col: value}``.  Pivots are
    chosen by smallest absolute value (fewest fill-in among ties).  Entries are
    Python ints throughout, so there is no overflow.
    """
    rows = {i: dict(r) for i, r in enumerate(M if isinstance(M, list) else _sparse_rows(M)) if r}
    cols: dict[int, set[int]] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    diag = []
    while rows:
        best = None
        for i, r in rows.items():
            lr = len(r)
            for j, x in r.items():
                key = (abs(x), (lr - 1) * (len(cols[j]) - 1))
                if best is None or key < best[0]:
                    best = (key, i, j)
            if best[0] == (1, 0):
                break
        _, i, j = best
        prow = rows[i]
        p = prow[j]
        clear = True
        for r_i in list(cols[j]):
            if r_i == i:
                continue
            row = rows[r_i]
            q = row[j] // p
            for c, x in prow.items():
                y = row.get(c, 0) - q * x
                if y:
                    if c not in row:
                        cols[c].add(r_i)
                    row[c] = y
                elif c in row:
                    del row[c]
                    cols[c].discard(r_i)
            if j in row:
                clear = False
            if not row:
                del rows[r_i]
        if not clear:
            continue
        # column j is now zero off the pivot, so column operations only touch row i
        for c in list(prow):
            if c == j:
                continue
            y = prow[c] - (prow[c] // p) * p
            if y:
                prow[c] = y
                clear = False
            else:
                del prow[c]
                cols[c].discard(i)
        if not clear:
            continue
        diag.append(abs(p))
        del rows[i]
        del cols[j]
    return _divisibility_chain(diag)


def _divisibility_chain(d: list[int]) -> list[int]:
    d = sorted(d)
    for a in range(len(d)):
        for b in range(a + 1, len(d)):
            g = gcd(d[a], d[b])
            d[a], d[b] = g, d[a] * d[b] // g
    return d


@dataclass(frozen=True)
class HomologySummary:
    betti_f2: tuple[int, int, int]
    betti_q: tuple[int, int, int]
    torsion_h1: tuple[int, ...]

    def csv_fields(self) -> dict:
        b, q = self.betti_f2, self.betti_q
        return {"b0": b[0], "b1": b[1], "b2": b[2], "q0": q[0], "q1": q[1], "q2": q[2],
                "torsion": ";".join(map(str, self.torsion_h1))}


def homology_integral(X: Complex2 | CellComplex2) -> HomologySummary:
    """Betti numbers over F2 and Q, and the torsion of H1(X; Z).

    Torsion of H1 is the torsion of coker(d2), i.e. the invariant factors of
    d2 greater than one.
    """
    f0, f1, f2 = X.f_vector()
    d1, d2 = boundary_matrices(X)
    r1 = len(invariant_factors(d1))
    inv2 = invariant_factors(d2)
    r2 = len(inv2)
    return HomologySummary(
        betti_f2(X),
        (f0 - r1, f1 - r1 - r2, f2 - r2),
        tuple(x for x in inv2 if x > 1),
    )


# -- boundaries --------------------------------------------------------------

class WalkError(ValueError):
    pass


def walk_chain(X: Complex2 | CellComplex2, walk: Sequence[int]) -> dict[int, int]:
    """Integer 1-chain (edge index -> coefficient) of a closed edge walk."""
    walk = list(walk)
    if len(walk) > 1 and walk[0] == walk[-1]:
        walk = walk[:-1]
    if len(walk) < 2:
        raise WalkError("a closed walk needs at least two steps")
    eidx = {e: i for i, e in enumerate(X.edges)}
    for a, b in zip(walk, walk[1:] + walk[:1]):
        if (min(a, b), max(a, b)) not in eidx:
            raise WalkError(f"step {a}-{b} is not an edge of the complex")
    return _walk_chain(walk, eidx)


def cycle_is_boundary(X: Complex2 | CellComplex2, walk: Sequence[int]) -> tuple[bool, bool]:
    """Whether the walk's chain lies in the image of d2 over F2 and over Z.

    Over Z, A x = c is solvable iff A and [A | c] have the same rank and the
    same product of invariant factors.
    """
    chain = walk_chain(X, walk)
    _, c2 = _column_bits(X)
    cbits = 0
    for i, c in chain.items():
        if c % 2:
            cbits |= 1 << i
    over_f2 = cbits in F2Basis(c2)

    _, d2 = boundary_matrices(X)
    col = np.zeros((d2.shape[0], 1), dtype=np.int64)
    for i, c in chain.items():
        col[i, 0] = c
    a = invariant_factors(d2)
    b = invariant_factors(np.hstack([d2, col]))
    over_z = len(a) == len(b) and _prod(a) == _prod(b)
    return over_f2, over_z


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out
