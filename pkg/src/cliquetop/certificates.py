"""Rooted 6-cycle certificates of nontrivial pi_1, and sparse/full predicates.

A rooted 6-cycle is an embedded cycle (1, a, 2, b, 3, c).  If the rooted
density of X with roots {1, 2, 3} exceeds 1/3, such a cycle is not
contractible in X.  :func:`certify_pi1_nontrivial` checks both conditions
exactly; the topological conclusion rests on that implication.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .complex import Complex2, build_complex
from .density import THIRD, DensityReport, density_brute, density_flow
from .embedding import find_embedding
from .errors import GuardError, PreconditionError

SPARSE_GUARD = 24
FULL_GUARD = 8
EXHAUSTIVE_FULL_GUARD = 5


@dataclass(frozen=True)
class CycleLoop:
    vertices: tuple[int, int, int, int, int, int]

    def check(self, X: Complex2) -> None:
        vs = self.vertices
        if len(vs) != 6 or len(set(vs)) != 6:
            raise ValueError(f"{vs} is not six distinct vertices")
        if (vs[0], vs[2], vs[4]) != (1, 2, 3):
            raise ValueError(f"{vs} is not rooted at 1, 2, 3")
        adj = X.adjacency()
        for i in range(6):
            a, b = vs[i], vs[(i + 1) % 6]
            if b not in adj[a]:
                raise ValueError(f"{a}-{b} is not an edge")


class CertificateRefused(PreconditionError):
    """No certificate; ``reason`` is ``no-rooted-6-cycle`` or ``density-at-most-one-third``."""


@dataclass(frozen=True)
class Pi1Certificate:
    cycle: CycleLoop
    density: DensityReport
    verdict: str = "certified-nontrivial"

    def to_text(self) -> str:
        d = self.density
        return (f"verdict {self.verdict}\n"
                f"cycle {' '.join(map(str, self.cycle.vertices))}\n"
                f"density {d.value_num}/{d.value_den}\n"
                f"witness_size {len(d.witness)}\n")

    @classmethod
    def from_text(cls, text: str) -> dict:
        """Parse the text form back into plain fields."""
        out = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            key, _, rest = line.partition(" ")
            if key == "cycle":
                out[key] = tuple(int(x) for x in rest.split())
            elif key == "density":
                num, den = rest.split("/")
                out[key] = (int(num), int(den))
            elif key == "witness_size":
                out[key] = int(rest)
            else:
                out[key] = rest
        return out


def find_rooted_six_cycle(X: Complex2) -> CycleLoop | None:
    """Lexicographically least (a, b, c) giving an embedded cycle (1,a,2,b,3,c)."""
    if X.n < 3:
        raise PreconditionError("too-few-vertices", "a rooted 6-cycle needs vertices 1, 2, 3")
    adj = X.adjacency()
    roots = {1, 2, 3}
    A = sorted((adj[1] & adj[2]) - roots)
    B = sorted((adj[2] & adj[3]) - roots)
    C = sorted((adj[3] & adj[1]) - roots)
    for a in A:
        for b in B:
            if b == a:
                continue
            for c in C:
                if c != a and c != b:
                    return CycleLoop((1, a, 2, b, 3, c))
    return None


def certify_pi1_nontrivial(X: Complex2) -> Pi1Certificate:
    """Issue a certificate or raise :class:`CertificateRefused`."""
    cyc = find_rooted_six_cycle(X)
    if cyc is None:
        raise CertificateRefused("no-rooted-6-cycle", "no embedded cycle (1,a,2,b,3,c)")
    rep = density_flow(X, 3)
    if not rep.exceeds(THIRD):
        raise CertificateRefused("density-at-most-one-third", f"rooted density is {rep.value}")
    return Pi1Certificate(cyc, rep)


def verify_certificate(X: Complex2, cert: Pi1Certificate, brute_limit: int = 14) -> bool:
    """Re-check a certificate edge by edge; re-derive the density by brute force on small X."""
    cert.cycle.check(X)
    rep = density_brute(X, 3) if X.n <= brute_limit else density_flow(X, 3)
    return rep.value == cert.density.value and rep.exceeds(THIRD)


# -- sparsity ----------------------------------------------------------------

@dataclass(frozen=True)
class SparsityReport:
    sparse: bool
    worst: Fraction | None       # least rooted ratio found; None if no candidate
    witness: tuple[int, ...]
    exact: bool                  # False: only ratios below eps were searched

    def __bool__(self):
        return self.sparse


def min_bounded_ratio(X: Complex2, m: int, r: int, below: Fraction | None = None):
    """Least (f0(Y) - r) / f1(Y) over Y containing 1..r with f0(Y) <= m.

    Returns ``(ratio, witness)``, or ``(None, ())`` if no Y has an edge (or,
    when ``below`` is given, if none has ratio < ``below``).

    Only vertex sets whose non-root part is connected once the roots are
    merged into one vertex need to be examined: the ratio of any other set is
    a mediant of such pieces.  These are enumerated once each (ESU order) with
    branch and bound on the number of edges still attainable.
    """
    if m > SPARSE_GUARD:
        raise GuardError("sparsity m", SPARSE_GUARD, m)
    if r > X.n:
        raise PreconditionError("root-missing", f"{r} roots but only {X.n} vertices")
    if m < r:
        return None, ()
    roots = set(range(1, r + 1))
    adj = X.adjacency()
    others = [v for v in X.vertices if v not in roots]
    root_deg = {v: len(adj[v] & roots) for v in others}
    e_roots = sum(1 for u, v in X.edges if u in roots and v in roots)
    budget = m - r

    best = below
    best_set: tuple[int, ...] = ()
    found = False

    RHO = 0  # merged root vertex, first in the order
    nbrs = {v: adj[v] - roots for v in others}
    if r:
        nbrs[RHO] = {v for v in others if root_deg[v]}
        for v in others:
            if root_deg[v]:
                nbrs[v] = nbrs[v] | {RHO}
    order = ([RHO] if r else []) + others
    pos = {v: i for i, v in enumerate(order)}

    # in_y[v]: neighbours of v inside Y (roots included)
    in_y = dict(root_deg)
    T: list[int] = []
    state = {"edges": e_roots}

    def consider():
        nonlocal best, best_set, found
        e = state["edges"]
        if e == 0 or len(T) > budget:
            return
        q = Fraction(len(T), e)
        if best is None or q < best or (found and q == best and len(T) + r < len(best_set)):
            best, best_set, found = q, tuple(sorted(roots | set(T))), True

    def hopeless() -> bool:
        if best is None:
            return False
        room = budget - len(T)
        if room <= 0:
            return True
        tset = set(T)
        gains = heapq.nlargest(room, (in_y[v] for v in others if v not in tset))
        e = state["edges"]
        acc = 0
        for j in range(1, room + 1):
            acc += gains[j - 1] if j <= len(gains) else 0
            if (e + acc + j * (j - 1) // 2) * best > len(T) + j:
                return False
        return True

    def add(v):
        T.append(v)
        state["edges"] += in_y[v]
        for u in nbrs[v]:
            if u != RHO:
                in_y[u] = in_y.get(u, 0) + 1

    def remove(v):
        T.pop()
        state["edges"] -= in_y[v]
        for u in nbrs[v]:
            if u != RHO:
                in_y[u] -= 1

    def grow(sub: set, ext: list, start: int):
        consider()
        if len(T) >= budget or hopeless():
            return
        ext = list(ext)
        while ext:
            w = ext.pop()
            near = set()
            for s in sub:
                near |= nbrs[s]
            new = [u for u in nbrs[w] if pos[u] > pos[start] and u not in sub and u not in near]
            sub.add(w)
            if w != RHO:
                add(w)
            grow(sub, ext + new, start)
            if w != RHO:
                remove(w)
            sub.discard(w)

    for v in order:
        sub = {v}
        if v != RHO:
            add(v)
        grow(sub, [u for u in nbrs[v] if pos[u] > pos[v]], v)
        if v != RHO:
            remove(v)
    return (best, best_set) if found else (None, ())


def is_sparse(X: Complex2, eps, m: int, r: int = 0, exact_worst: bool = True) -> SparsityReport:
    """Every Y containing 1..r with f0(Y) <= m has rooted ratio >= eps.

    ``worst`` is the least ratio over those Y.  With ``exact_worst=False``
    only ratios below ``eps`` are searched, which is much faster on sparse
    inputs and decides the predicate equally well.
    """
    eps = Fraction(eps)
    below = None if exact_worst else eps
    worst, wit = min_bounded_ratio(X, m, r, below)
    sparse = worst is None or worst >= eps
    return SparsityReport(sparse, worst, wit, exact_worst)


# -- fullness ----------------------------------------------------------------

def complete_rooted_density(t: int, r: int) -> Fraction | None:
    """Rooted density of the clique 2-skeleton of K_t with roots 1..r."""
    best = None
    for s in range(max(r, 2), t + 1):
        q = Fraction(s - r, s * (s - 1) // 2)
        if best is None or q < best:
            best = q
    return best


def _complete(t: int) -> Complex2:
    return build_complex(t, combinations(range(1, t + 1), 2), combinations(range(1, t + 1), 3))


def is_full(X: Complex2, eps, m: int, r: int = 0) -> bool:
    """Every complex Z on at most m vertices containing 1..r with rooted
    density < eps occurs in X as a subcomplex, roots fixed.

    Adding faces to Z never raises its rooted density and never helps it
    embed, so the class is closed upward within each vertex count and its
    maximal members are the full 2-skeleta of simplices.  It is therefore
    enough to embed the largest such simplex skeleton.
    """
    eps = Fraction(eps)
    if m > FULL_GUARD:
        raise GuardError("fullness m", FULL_GUARD, m)
    if r > X.n:
        raise PreconditionError("root-missing", f"{r} roots but only {X.n} vertices")
    ts = [t for t in range(max(r, 2), m + 1)
          if (d := complete_rooted_density(t, r)) is not None and d < eps]
    if not ts:
        return True
    t = max(ts)
    return find_embedding(_complete(t), X, {i: i for i in range(1, r + 1)}) is not None


def rooted_class(eps, m: int, r: int = 0) -> list[Complex2]:
    """All complexes on at most m vertices containing 1..r with rooted density < eps,
    one per isomorphism class fixing the roots pointwise."""
    eps = Fraction(eps)
    if m > EXHAUSTIVE_FULL_GUARD:
        raise GuardError("exhaustive fullness m", EXHAUSTIVE_FULL_GUARD, m)
    out = []
    for t in range(max(r, 1), m + 1):
        pairs = list(combinations(range(1, t + 1), 2))
        perms = [dict(zip(range(1, t + 1), list(range(1, r + 1)) + list(p)))
                 for p in permutations(range(r + 1, t + 1))]
        seen = set()
        for emask in range(1 << len(pairs)):
            es = [pairs[i] for i in range(len(pairs)) if emask >> i & 1]
            eset = set(es)
            tris = [c for c in combinations(range(1, t + 1), 3)
                    if all(p in eset for p in combinations(c, 2))]
            for tmask in range(1 << len(tris)):
                ts = [tris[i] for i in range(len(tris)) if tmask >> i & 1]
                Z = build_complex(t, es, ts)
                key = min(_relabel_key(Z, p) for p in perms)
                if key in seen:
                    continue
                seen.add(key)
                d = density_brute(Z, r)
                if d.value is not None and d.value < eps:
                    out.append(Z)
    return out


def _relabel_key(Z: Complex2, perm: dict[int, int]):
    return (tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in Z.edges)),
            tuple(sorted(tuple(sorted(perm[x] for x in t)) for t in Z.triangles)))


def is_full_exhaustive(X: Complex2, eps, m: int, r: int = 0) -> bool:
    """Embed every member of :func:`rooted_class` one by one (small m only)."""
    fixed = {i: i for i in range(1, r + 1)}
    return all(find_embedding(Z, X, fixed) is not None for Z in rooted_class(eps, m, r))
