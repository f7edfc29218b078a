from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cliquetop._mincut import _min_cut_networkx, min_cut
from cliquetop.complex import build_complex, is_connected
from cliquetop.density import (
    THIRD, admissibility_functional, check_report, density_brute, density_flow,
    edge_bound_check, is_k_admissible, min_admissibility,
)
from cliquetop.errors import GuardError, PreconditionError
from cliquetop.named import complete_skeleton, cycle, rp2_six, tetrahedron_boundary
from cliquetop.random_models import sample_knp

from conftest import complexes

C6 = cycle([1, 4, 2, 5, 3, 6])
EDGE = build_complex(2, [(1, 2)])


@pytest.mark.parametrize("fn", [density_brute, density_flow])
def test_examples(fn):
    r = fn(cycle([1, 2, 3]))
    assert r.value == 1 and r.witness == (1, 2, 3)
    r = fn(tetrahedron_boundary())
    assert r.value == Fraction(2, 3) and r.witness == (1, 2, 3, 4)
    assert fn(C6, 3).value == Fraction(1, 2)
    assert fn(EDGE).value == 2
    r = fn(complete_skeleton(7))
    assert r.value == THIRD and r.witness == tuple(range(1, 8))
    assert fn(rp2_six()).value == Fraction(2, 5)


def test_edgeless_is_infinite():
    r = density_flow(build_complex(4))
    assert r.infinite and (r.value_num, r.value_den) == (1, 0)
    assert r.exceeds(100)


def test_rooted_edge_gives_zero():
    assert density_flow(complete_skeleton(5), 3).value == 0


def test_explicit_root_set():
    assert density_flow(C6, [1, 2, 3]).value == density_flow(C6, 3).value


def test_root_out_of_range():
    with pytest.raises(PreconditionError) as e:
        density_flow(EDGE, 3)
    assert e.value.reason == "root-missing"


def test_brute_guard():
    with pytest.raises(GuardError, match="density_brute"):
        density_brute(build_complex(25))


@settings(max_examples=300, deadline=None)
@given(complexes(max_n=10), st.integers(0, 3))
def test_flow_matches_brute(X, w):
    assume(w <= X.n)
    a, b = density_flow(X, w), density_brute(X, w)
    assert a.value == b.value
    assert check_report(X, a) and check_report(X, b)


def test_flow_matches_brute_at_fourteen():
    for seed in range(20):
        for p in (0.2, 0.4, 0.6):
            X = sample_knp(14, p, seed)
            for w in range(4):
                assert density_flow(X, w).value == density_brute(X, w).value


@settings(max_examples=150, deadline=None)
@given(complexes(max_n=9), st.data())
def test_adding_an_edge_never_raises_density(X, data):
    missing = [e for e in combinations(X.vertices, 2) if e not in set(X.edges)]
    assume(missing)
    e = data.draw(st.sampled_from(missing))
    Y = build_complex(X.n, list(X.edges) + [e], X.triangles)
    a, b = density_flow(X), density_flow(Y)
    assert a.value is None or b.value <= a.value


@settings(max_examples=150, deadline=None)
@given(complexes(max_n=10))
def test_density_at_most_whole_ratio(X):
    assume(X.edges)
    assert density_flow(X).value <= Fraction(X.n, len(X.edges))


def _all_subcomplexes(X):
    """Every nonempty subcomplex: vertex subset, then edge subset, then triangle subset."""
    for k in range(1, X.n + 1):
        for vs in combinations(X.vertices, k):
            s = set(vs)
            es = [e for e in X.edges if e[0] in s and e[1] in s]
            for ek in range(len(es) + 1):
                for E in combinations(es, ek):
                    Es = set(E)
                    ts = [t for t in X.triangles if all(p in Es for p in combinations(t, 2))]
                    for tk in range(len(ts) + 1):
                        for T in combinations(ts, tk):
                            yield k, len(E), len(T)


@settings(max_examples=60, deadline=None)
@given(complexes(max_n=5), st.integers(1, 5))
def test_min_admissibility_matches_enumeration(X, k):
    expect = min((k * a + (2 - k) * b + (k - 3) * c for a, b, c in _all_subcomplexes(X)), default=None)
    assert min_admissibility(X, k) == expect


@settings(max_examples=200, deadline=None)
@given(complexes(max_n=10))
def test_k3_admissibility_is_density_above_third(X):
    assert is_k_admissible(X, 3) == density_flow(X).exceeds(THIRD)
    m = min_admissibility(X, 3)
    assert (m is None or m > 0) == is_k_admissible(X, 3)


def test_admissibility_examples():
    assert is_k_admissible(cycle([1, 2, 3]), 3)
    assert not is_k_admissible(complete_skeleton(7), 3)
    assert is_k_admissible(build_complex(0), 3)
    assert admissibility_functional(complete_skeleton(7), 3) == 0


def test_admissibility_rejects_k():
    with pytest.raises(ValueError):
        is_k_admissible(EDGE, 0)


@pytest.mark.parametrize("X", [cycle([1, 2, 3]), tetrahedron_boundary(), EDGE])
def test_edge_bound_tight_examples(X):
    r = edge_bound_check(X)
    assert r.holds and r.slack == 0


def test_edge_bound_preconditions():
    with pytest.raises(PreconditionError) as e:
        edge_bound_check(build_complex(4, [(1, 2), (3, 4)]))
    assert e.value.reason == "disconnected"
    with pytest.raises(PreconditionError) as e:
        edge_bound_check(complete_skeleton(7))
    assert e.value.reason == "density-at-most-one-third"


@settings(max_examples=200, deadline=None)
@given(complexes(max_n=10, min_n=1), st.sampled_from([0, 3]))
def test_edge_bound_holds(X, w):
    assume(w <= X.n and is_connected(X))
    if density_flow(X, w).exceeds(THIRD):
        assert edge_bound_check(X, w).holds


def test_mincut_backends_agree():
    rng = np.random.default_rng(0)
    for _ in range(30):
        n = 8
        tails, heads, caps = [], [], []
        for u in range(n):
            for v in range(n):
                if u != v and rng.random() < 0.4:
                    tails.append(u); heads.append(v); caps.append(int(rng.integers(1, 9)))
        a = min_cut(n, tails, heads, caps, 0, n - 1)
        b = _min_cut_networkx(n, np.array(tails), np.array(heads), np.array(caps), 0, n - 1)
        assert a == b


def test_mincut_huge_capacities():
    value, side = min_cut(3, [0, 1], [1, 2], [2**40, 2**41], 0, 2)
    assert value == 2**40 and side == {0}


def test_large_graph_runs():
    X = sample_knp(300, 0.05, 1)
    r = density_flow(X)
    assert check_report(X, r)
    assert r.value <= Fraction(X.n, len(X.edges))
