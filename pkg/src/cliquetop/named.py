"""Small named complexes used as fixtures and sanity checks."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .complex import Complex2, build_complex, clique_two_skeleton

# Six-vertex real projective plane (quotient of the icosahedron by the
# antipodal map); every edge of K6 lies in exactly two of these triangles.
RP2_SIX_TRIANGLES = (
    (1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 5, 6),
    (2, 3, 5), (2, 3, 6), (2, 4, 5), (3, 4, 6), (4, 5, 6),
)


def complete_skeleton(k: int) -> Complex2:
    """Clique 2-skeleton of K_k."""
    return clique_two_skeleton(k, combinations(range(1, k + 1), 2))


def tetrahedron_boundary() -> Complex2:
    return complete_skeleton(4)


def rp2_six() -> Complex2:
    tris = RP2_SIX_TRIANGLES
    edges = {e for t in tris for e in combinations(t, 2)}
    return build_complex(6, edges, tris)


def cycle(labels: Sequence[int], n: int | None = None) -> Complex2:
    """Empty cycle visiting ``labels`` in order (no triangles)."""
    n = max(labels) if n is None else n
    k = len(labels)
    return build_complex(n, [(labels[i], labels[(i + 1) % k]) for i in range(k)])


def path(k: int) -> Complex2:
    return build_complex(k, [(i, i + 1) for i in range(1, k)])


def filled_triangle() -> Complex2:
    return build_complex(3, [(1, 2), (1, 3), (2, 3)], [(1, 2, 3)])


def wedge(X: Complex2, Y: Complex2, at_x: int = 1, at_y: int = 1) -> Complex2:
    """Glue X and Y at one vertex; Y's vertices are shifted past X's."""
    def m(v):
        if v == at_y:
            return at_x
        return X.n + v - (1 if v > at_y else 0)

    return build_complex(
        X.n + Y.n - 1,
        list(X.edges) + [(m(u), m(v)) for u, v in Y.edges],
        list(X.triangles) + [tuple(m(x) for x in t) for t in Y.triangles],
    )
