from itertools import combinations

from hypothesis import strategies as st

from cliquetop.complex import build_complex


@st.composite
def complexes(draw, max_n=9, min_n=0):
    """Random 2-complex: any graph, any subset of its triangles."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    edges = [e for e in pairs if draw(st.booleans())] if pairs else []
    es = set(edges)
    tris = [t for t in combinations(range(1, n + 1), 3)
            if all(p in es for p in combinations(t, 2))]
    keep = [t for t in tris if draw(st.booleans())]
    return build_complex(n, edges, keep)


@st.composite
def graphs(draw, max_n=9, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    return n, [e for e in pairs if draw(st.booleans())]
