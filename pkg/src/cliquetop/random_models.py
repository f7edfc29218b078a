"""Seeded samplers for K(n, p) and the K4(n, p) cell-complex model.

Pair ``k`` (in lexicographic order of pairs ``u < v``) is kept iff the
``k``-th double drawn from a Philox counter generator keyed by the seed is
below ``p``.  The draw for a pair depends only on ``(seed, k)``.
"""

from __future__ import annotations

import hashlib

import numpy as np

from .complex import CellComplex2, Complex2, Edge, clique_two_skeleton

_MASK64 = (1 << 64) - 1


def _check(n: int, p: float) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")


def pair_uniforms(n: int, seed: int) -> np.ndarray:
    """Uniform variates for all C(n, 2) pairs, indexed by pair rank."""
    gen = np.random.Generator(np.random.Philox(key=int(seed) & _MASK64))
    return gen.random(n * (n - 1) // 2)


def sample_edges(n: int, p: float, seed: int) -> list[Edge]:
    _check(n, p)
    if n < 2:
        return []
    iu, ju = np.triu_indices(n, 1)
    keep = pair_uniforms(n, seed) < p
    return list(zip((iu[keep] + 1).tolist(), (ju[keep] + 1).tolist()))


def sample_knp(n: int, p: float, seed: int) -> Complex2:
    return clique_two_skeleton(n, sample_edges(n, p, seed))


def four_cycles(n: int, edges) -> list[tuple[int, int, int, int]]:
    """Every 4-cycle once, as (a, b, c, d) with a minimal and b < d."""
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    out = []
    for a in range(1, n + 1):
        up = sorted(x for x in adj[a] if x > a)
        for i, b in enumerate(up):
            for d in up[i + 1:]:
                for c in sorted(adj[b] & adj[d]):
                    if c > a:
                        out.append((a, b, c, d))
    out.sort()
    return out


def sample_k4np(n: int, p: float, seed: int) -> CellComplex2:
    """Same edge draw as :func:`sample_knp`; a 2-cell on every 3- and 4-cycle."""
    X = sample_knp(n, p, seed)
    cells = [tuple(t) for t in X.triangles] + four_cycles(n, X.edges)
    return CellComplex2(n, X.edges, tuple(cells))


def trial_seed(base_seed: int, i: int, j: int) -> int:
    """Seed for trial j at grid point i: base XOR a 64-bit hash of (i, j)."""
    h = hashlib.blake2b(f"{i},{j}".encode(), digest_size=8).digest()
    return (int(base_seed) ^ int.from_bytes(h, "little")) & _MASK64
