from itertools import combinations

import pytest
from hypothesis import given, settings

from cliquetop.complex import (
    CellComplex2, Complex2, ComplexError, all_links, build_complex, clique_two_skeleton,
    collapse_free_faces, connected_components, euler_characteristic, f_vector, induced_subcomplex,
    is_normal, is_two_normal, l_functional, permute_vertices, vertex_link,
)
from cliquetop.homology import betti_f2
from cliquetop.named import complete_skeleton, cycle, filled_triangle, rp2_six, tetrahedron_boundary

from conftest import complexes, graphs


def test_build_filled_triangle():
    X = build_complex(3, [(1, 2), (1, 3), (2, 3)], [(1, 2, 3)])
    assert X.f_vector() == (3, 3, 1)


def test_closure_error_names_missing_edge():
    with pytest.raises(ComplexError, match=r"\{2,3\}"):
        build_complex(3, [(1, 2), (1, 3)], [(1, 2, 3)])


def test_empty_complex():
    assert build_complex(0).f_vector() == (0, 0, 0)


@pytest.mark.parametrize("edges,tris", [
    ([(1, 1)], []),
    ([(1, 4)], []),
    ([(0, 1)], []),
])
def test_build_rejects_bad_faces(edges, tris):
    with pytest.raises(ComplexError):
        build_complex(3, edges, tris)


def test_build_drops_duplicates():
    assert build_complex(3, [(1, 2), (2, 1)]).edges == ((1, 2),)


def test_constructor_wants_canonical_order():
    with pytest.raises(ComplexError):
        Complex2(2, ((2, 1),))
    with pytest.raises(ComplexError):
        Complex2(2, ((1, 2), (1, 2)))


def test_build_sorts_faces():
    X = build_complex(3, [(3, 1), (2, 1), (3, 2)], [(3, 2, 1)])
    assert X.edges == ((1, 2), (1, 3), (2, 3))
    assert X.triangles == ((1, 2, 3),)


def test_isolated_vertices_count():
    assert build_complex(5, [(1, 2)]).f_vector() == (5, 1, 0)


def test_clique_skeleton_examples():
    assert len(complete_skeleton(4).triangles) == 4
    assert clique_two_skeleton(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).triangles == ()
    X = clique_two_skeleton(5, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (3, 5)])
    assert X.triangles == ((1, 2, 3), (3, 4, 5))


@pytest.mark.parametrize("X,f,chi,L", [
    (tetrahedron_boundary(), (4, 6, 4), 2, 0),
    (rp2_six(), (6, 15, 10), 1, 0),
    (cycle([1, 2, 3]), (3, 3, 0), 0, 6),
])
def test_counts(X, f, chi, L):
    assert f_vector(X) == f
    assert euler_characteristic(X) == chi
    assert l_functional(X) == L


def test_links():
    link = vertex_link(tetrahedron_boundary(), 1)
    assert link.vertices == (2, 3, 4) and len(link.edges) == 3
    X = build_complex(4, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)], [(1, 2, 3), (1, 2, 4)])
    link = vertex_link(X, 1)
    assert set(link.vertices) == {2, 3, 4}
    assert set(link.edges) == {(2, 3), (2, 4)}
    for v, link in all_links(rp2_six()).items():
        assert len(link.vertices) == 5 and len(link.edges) == 5
        assert all(len(nb) == 2 for nb in link.adjacency().values())


def test_normality_examples():
    S = tetrahedron_boundary()
    assert is_normal(S) and is_two_normal(S)
    bowtie = build_complex(5, [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)], [(1, 2, 3), (1, 4, 5)])
    assert not is_normal(bowtie)
    book = build_complex(4, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)], [(1, 2, 3), (1, 2, 4)])
    assert is_normal(book) and not is_two_normal(book)


def test_isolated_vertex_links_are_skipped():
    assert is_normal(build_complex(4, [(1, 2), (1, 3), (2, 3)], [(1, 2, 3)]))


def test_collapse_examples():
    assert collapse_free_faces(filled_triangle()).f_vector() == (1, 0, 0)
    S = tetrahedron_boundary()
    assert collapse_free_faces(S) == S
    book = build_complex(4, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)], [(1, 2, 3), (1, 2, 4)])
    assert collapse_free_faces(book).f_vector() == (1, 0, 0)


def test_collapse_keeps_a_circle():
    assert collapse_free_faces(cycle([1, 2, 3, 4])).f_vector() == (4, 4, 0)


def test_components():
    X = build_complex(4, [(1, 2), (1, 3), (2, 3)])
    assert len(connected_components(X)) == 2
    assert len(connected_components(tetrahedron_boundary())) == 1
    parts = connected_components(build_complex(4, [(1, 2), (3, 4)]))
    assert [P.f_vector() for P in parts] == [(2, 1, 0), (2, 1, 0)]


def test_cell_complex_validation():
    CellComplex2(4, ((1, 2), (1, 4), (2, 3), (3, 4)), ((1, 2, 3, 4),))
    with pytest.raises(ComplexError):
        CellComplex2(4, ((1, 2), (2, 3), (3, 4)), ((1, 2, 3, 4),))
    with pytest.raises(ComplexError):
        CellComplex2(4, ((1, 2), (1, 3), (2, 3)), ((1, 2, 1),))


@settings(max_examples=150, deadline=None)
@given(complexes())
def test_l_chi_identity(X):
    f0, f1, _ = X.f_vector()
    assert l_functional(X) + 3 * euler_characteristic(X) == 3 * f0 - f1


@settings(max_examples=150, deadline=None)
@given(complexes())
def test_collapse_preserves_betti_and_closure(X):
    Y = collapse_free_faces(X)
    # the constructor re-validates closure
    Complex2(Y.n, Y.edges, Y.triangles)
    assert betti_f2(Y) == betti_f2(X)


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_link_of_clique_skeleton_is_neighbourhood(g):
    n, edges = g
    X = clique_two_skeleton(n, edges)
    adj = X.adjacency()
    for v in X.vertices:
        link = vertex_link(X, v)
        nb = adj[v]
        assert set(link.vertices) == nb
        assert set(link.edges) == {(a, b) for a, b in combinations(sorted(nb), 2) if b in adj[a]}


@settings(max_examples=80, deadline=None)
@given(complexes(min_n=1))
def test_components_partition(X):
    parts = connected_components(X)
    assert sum(P.n for P in parts) == X.n
    assert sum(len(P.edges) for P in parts) == len(X.edges)
    assert sum(len(P.triangles) for P in parts) == len(X.triangles)


@settings(max_examples=60, deadline=None)
@given(complexes(min_n=1))
def test_relabeling_keeps_counts(X):
    perm = {v: X.n + 1 - v for v in X.vertices}
    Y = permute_vertices(X, perm)
    assert Y.f_vector() == X.f_vector()
    assert is_normal(Y) == is_normal(X)


def test_induced_subcomplex():
    Y = induced_subcomplex(rp2_six(), [1, 2, 4])
    assert Y.f_vector() == (3, 3, 1)
