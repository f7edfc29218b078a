"""Exact minimum vertex-to-edge density over subcomplexes.

For a complex X and roots R = {1..w}, the rooted density is the minimum of
``(f0(Y) - w) / f1(Y)`` over subcomplexes Y containing R with at least one
edge (``None`` stands for +infinity when no such Y exists).  For a fixed
vertex set the numerator is fixed and the induced subcomplex has the most
edges, so only vertex subsets need to be searched.

Two independent routes are provided: :func:`density_brute` enumerates vertex
subsets, :func:`density_flow` runs a parametric minimum-cut search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, NamedTuple

import numpy as np

from ._mincut import min_cut
from .complex import Complex2, is_connected
from .errors import GuardError, PreconditionError

BRUTE_GUARD = 24
THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class DensityReport:
    value: Fraction | None  # None is +infinity
    witness: tuple[int, ...]
    method: str
    roots: tuple[int, ...] = ()

    @property
    def infinite(self) -> bool:
        return self.value is None

    @property
    def value_num(self) -> int:
        return 1 if self.value is None else self.value.numerator

    @property
    def value_den(self) -> int:
        return 0 if self.value is None else self.value.denominator

    def exceeds(self, bound) -> bool:
        """Strictly greater than ``bound`` (always true for +infinity)."""
        return self.value is None or self.value > Fraction(bound)

    def csv_fields(self) -> dict:
        return {"value_num": self.value_num, "value_den": self.value_den,
                "witness_size": len(self.witness)}

    def __str__(self):
        v = "inf" if self.value is None else f"{self.value.numerator}/{self.value.denominator}"
        return f"{v} (witness size {len(self.witness)}, {self.method})"


def root_set(X: Complex2, roots: int | Iterable[int]) -> tuple[int, ...]:
    """``w`` means the vertices 1..w; an iterable is taken as an explicit set."""
    R = tuple(range(1, roots + 1)) if isinstance(roots, int) else tuple(sorted(set(roots)))
    for r in R:
        if not 1 <= r <= X.n:
            raise PreconditionError("root-missing", f"root {r} not a vertex of a complex on {X.n} vertices")
    return R


def induced_edge_count(X: Complex2, vertices) -> int:
    S = set(vertices)
    return sum(1 for u, v in X.edges if u in S and v in S)


class _Split(NamedTuple):
    roots: tuple[int, ...]
    others: list[int]
    e_roots: int
    root_deg: list[int]          # number of root neighbours, per non-root
    free_edges: list[tuple[int, int]]  # edges between non-roots, as indices


def _split(X: Complex2, R: tuple[int, ...]) -> _Split:
    rs = set(R)
    others = [v for v in X.vertices if v not in rs]
    idx = {v: i for i, v in enumerate(others)}
    e_roots = 0
    root_deg = [0] * len(others)
    free = []
    for u, v in X.edges:
        if u in rs and v in rs:
            e_roots += 1
        elif u in rs:
            root_deg[idx[v]] += 1
        elif v in rs:
            root_deg[idx[u]] += 1
        else:
            free.append((idx[u], idx[v]))
    return _Split(R, others, e_roots, root_deg, free)


def density_brute(X: Complex2, roots: int | Iterable[int] = 0) -> DensityReport:
    """Enumerate every vertex set containing the roots.

    Ties go to the smaller witness, then to the lexicographically first one.
    """
    if X.n > BRUTE_GUARD:
        raise GuardError("density_brute f0", BRUTE_GUARD, X.n)
    R = root_set(X, roots)
    sp = _split(X, R)
    k = len(sp.others)
    if len(X.edges) == 0:
        return DensityReport(None, (), "oracle", R)
    if sp.e_roots:
        return DensityReport(Fraction(0), R, "oracle", R)

    nbr = [0] * k
    for i, j in sp.free_edges:
        nbr[i] |= 1 << j
        nbr[j] |= 1 << i
    # edges[mask] = edges induced by R plus the non-roots in mask, built by
    # adding the highest set bit to an already computed smaller mask
    edges = np.zeros(1 << k, dtype=np.int32)
    masks = np.arange(1 << k, dtype=np.int32)
    for i in range(k):
        lo, hi = 1 << i, 1 << (i + 1)
        prev = masks[:lo]
        edges[lo:hi] = edges[:lo] + np.bitwise_count(prev & nbr[i]) + sp.root_deg[i]
    sizes = np.bitwise_count(masks)

    best = None
    best_size = None
    for s in range(1, k + 1):
        at = edges[sizes == s]
        e = int(at.max())
        if e == 0:
            continue
        cand = Fraction(s, e)
        if best is None or cand < best:
            best, best_size = cand, s
    if best is None:
        return DensityReport(None, (), "oracle", R)

    s = best_size
    need = s / best  # edges required at this size
    hits = masks[(sizes == s) & (edges == int(need))]
    witness = min(tuple(sp.others[i] for i in range(k) if m >> i & 1) for m in hits.tolist())
    return DensityReport(best, tuple(sorted(R + witness)), "oracle", R)


def _best_extension(sp: _Split, mu: Fraction) -> list[int]:
    """Non-root index set T maximising e(R + T) - mu |T| (minimal maximiser).

    With mu = a/b, doubling the objective and using 2 e(T) = sum of degrees
    minus the cut gives a minimum cut with integer capacities: node v gets
    weight y_v = b (2 d_R(v) + d(v)) - 2a and each free edge capacity b.
    """
    a, b = mu.numerator, mu.denominator
    k = len(sp.others)
    deg = [0] * k
    for i, j in sp.free_edges:
        deg[i] += 1
        deg[j] += 1
    s, t = k, k + 1
    tails, heads, caps = [], [], []
    for v in range(k):
        y = b * (2 * sp.root_deg[v] + deg[v]) - 2 * a
        if y > 0:
            tails.append(s); heads.append(v); caps.append(y)
        elif y < 0:
            tails.append(v); heads.append(t); caps.append(-y)
    for i, j in sp.free_edges:
        tails += [i, j]
        heads += [j, i]
        caps += [b, b]
    _, side = min_cut(k + 2, tails, heads, caps, s, t)
    return sorted(v for v in side if v < k)


def density_flow(X: Complex2, roots: int | Iterable[int] = 0) -> DensityReport:
    """Parametric min-cut search for the rooted density.

    Starts from the whole complex; with current ratio g, a set S has a
    smaller ratio iff e(S) - (f0(S) - w) / g > 0, so the set maximising that
    excess replaces the current one until the maximum is zero.  All
    arithmetic is exact.
    """
    R = root_set(X, roots)
    if not X.edges:
        return DensityReport(None, (), "flow", R)
    sp = _split(X, R)
    if sp.e_roots:
        return DensityReport(Fraction(0), R, "flow", R)

    T = list(range(len(sp.others)))
    g = Fraction(len(T), len(X.edges))
    in_T = np.zeros(len(sp.others), dtype=bool)
    free = np.array(sp.free_edges, dtype=np.int64).reshape(-1, 2)
    root_deg = np.array(sp.root_deg, dtype=np.int64)
    while True:
        mu = 1 / g
        cand = _best_extension(sp, mu)
        in_T[:] = False
        in_T[cand] = True
        e = int(root_deg[in_T].sum()) + int((in_T[free[:, 0]] & in_T[free[:, 1]]).sum())
        if e == 0 or e - mu * len(cand) <= 0:
            break
        T, g = cand, Fraction(len(cand), e)
    witness = tuple(sorted(R + tuple(sp.others[i] for i in T)))
    return DensityReport(g, witness, "flow", R)


def check_report(X: Complex2, rep: DensityReport) -> bool:
    """Recompute a report's ratio from its witness."""
    if rep.value is None:
        return True
    if not set(rep.roots) <= set(rep.witness):
        return False
    e = induced_edge_count(X, rep.witness)
    return e >= 1 and Fraction(len(rep.witness) - len(rep.roots), e) == rep.value


# -- admissibility -----------------------------------------------------------

def admissibility_functional(X: Complex2, k: int) -> int:
    """(L + k chi)(X) = k f0 + (2 - k) f1 + (k - 3) f2."""
    f0, f1, f2 = X.f_vector()
    return k * f0 + (2 - k) * f1 + (k - 3) * f2


def min_admissibility(X: Complex2, k: int) -> int | None:
    """Minimum of (L + k chi)(Y) over nonempty subcomplexes Y (None if X empty).

    Subcomplexes are exactly the closed sets of the face poset, so this is a
    minimum-weight closure problem; nonemptiness is enforced by pinning each
    vertex in turn when the unconstrained optimum is the empty set.
    """
    if X.n == 0:
        return None
    verts = list(X.vertices)
    vid = {v: i for i, v in enumerate(verts)}
    eid = {e: len(verts) + i for i, e in enumerate(X.edges)}
    tid0 = len(verts) + len(X.edges)
    cost = [k] * len(verts) + [2 - k] * len(X.edges) + [k - 3] * len(X.triangles)
    deps = []
    for (u, v), i in eid.items():
        deps += [(i, vid[u]), (i, vid[v])]
    for j, t in enumerate(X.triangles):
        deps += [(tid0 + j, eid[e]) for e in combinations(t, 2)]
    n_items = len(cost)
    s, t = n_items, n_items + 1
    big = sum(abs(c) for c in cost) + 1

    def solve(pinned=None) -> int:
        tails, heads, caps = [], [], []
        for i, c in enumerate(cost):
            if c < 0:
                tails.append(s); heads.append(i); caps.append(-c)
            elif c > 0:
                tails.append(i); heads.append(t); caps.append(c)
        for i, j in deps:
            tails.append(i); heads.append(j); caps.append(big)
        if pinned is not None:
            tails.append(s); heads.append(pinned); caps.append(big)
        _, side = min_cut(n_items + 2, tails, heads, caps, s, t)
        return sum(cost[i] for i in side if i < n_items)

    best = solve()
    if best < 0:
        return best
    return min(solve(vid[v]) for v in verts)


def is_k_admissible(X: Complex2, k: int = 3) -> bool:
    """Every nonempty subcomplex Y has (L + k chi)(Y) > 0.

    For k = 3 the functional is 3 f0 - f1, so this is density > 1/3 and goes
    through :func:`density_flow`.  Other k use the exact closure search and
    are guarded to small complexes.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k == 3:
        return density_flow(X).exceeds(THIRD)
    if X.n > BRUTE_GUARD:
        raise GuardError("is_k_admissible f0", BRUTE_GUARD, X.n)
    m = min_admissibility(X, k)
    return m is None or m > 0


# -- edge bound --------------------------------------------------------------

@dataclass(frozen=True)
class EdgeBound:
    holds: bool
    lhs: Fraction
    rhs: Fraction
    slack: Fraction
    density: DensityReport


def edge_bound_check(X: Complex2, roots: int | Iterable[int] = 0) -> EdgeBound:
    """Test f1 <= (3 chi - 3w + L) / (3 e - 1) where e is the rooted density."""
    if not is_connected(X):
        raise PreconditionError("disconnected", "edge bound needs a connected complex")
    rep = density_flow(X, roots)
    if not rep.exceeds(THIRD):
        raise PreconditionError("density-at-most-one-third", f"rooted density is {rep.value}")
    f0, f1, f2 = X.f_vector()
    w = len(rep.roots)
    lhs = Fraction(f1)
    if rep.value is None:
        rhs = Fraction(0)
    else:
        numer = 3 * (f0 - f1 + f2) - 3 * w + (2 * f1 - 3 * f2)
        rhs = Fraction(numer) / (3 * rep.value - 1)
    return EdgeBound(lhs <= rhs, lhs, rhs, rhs - lhs, rep)
