import math

import numpy as np
import pytest

from helpers import Y14_MATRIX, CANTOR01, CANTOR01_PLUS_2, QUARTER_CANTOR_DRAWN, cantor, random_standard, rng
from pathsets import (
    EmptySet,
    Presentation,
    hausdorff_dim,
    minkowski_sum,
    mul_p_power,
    scc_dimensions,
    standardize,
)
from pathsets.dimension import adjacency_matrix, spectral_radius, strongly_connected_components


def eig_radius(A):
    """Independent reference: largest eigenvalue modulus from LAPACK."""
    A = np.asarray(A, dtype=float)
    return float(max(abs(np.linalg.eigvals(A)))) if A.size else 0.0


def test_adjacency_cantor():
    assert adjacency_matrix(CANTOR01).tolist() == [[2]]


def test_adjacency_plus_two():
    assert adjacency_matrix(CANTOR01_PLUS_2).tolist() == [[0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 1, 1], [0, 0, 1, 1]]


def test_adjacency_quarter_hand_entered():
    assert adjacency_matrix(QUARTER_CANTOR_DRAWN).tolist() == [[1, 1, 0, 0], [1, 0, 0, 1], [0, 0, 1, 1], [1, 0, 1, 0]]


@pytest.mark.parametrize(
    "A,expected",
    [
        ([[2]], 2.0),
        ([[1, 1], [1, 0]], (1 + math.sqrt(5)) / 2),
        (Y14_MATRIX, 2 + math.sqrt(2)),
        ([[0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 1, 1], [0, 0, 1, 1]], 2.0),
    ],
)
def test_spectral_radius_examples(A, expected):
    assert spectral_radius(A) == pytest.approx(expected, rel=1e-12)


def test_spectral_radius_periodic_and_nilpotent():
    cycle = np.roll(np.eye(7, dtype=int), 1, axis=1)
    assert spectral_radius(cycle) == pytest.approx(1.0, rel=1e-12)
    assert spectral_radius([[0, 1], [0, 0]]) == 0.0
    assert spectral_radius(np.zeros((0, 0))) == 0.0


def test_spectral_radius_jordan_like_chain():
    # two equal-radius components in series: plain power iteration converges like 1/k
    A = [[2, 1], [0, 2]]
    assert spectral_radius(A) == pytest.approx(2.0, rel=1e-12)


def test_spectral_radius_matches_eigvals_random():
    r = np.random.default_rng(30)
    for _ in range(200):
        n = int(r.integers(1, 9))
        A = r.integers(0, 3, size=(n, n)) * (r.random((n, n)) < 0.4)
        assert spectral_radius(A) == pytest.approx(eig_radius(A), rel=1e-9, abs=1e-9)


def test_tarjan_against_reachability():
    r = np.random.default_rng(31)
    for _ in range(100):
        n = int(r.integers(1, 10))
        A = (r.random((n, n)) < 0.25).astype(int)
        R = np.eye(n, dtype=bool) | A.astype(bool)
        for _ in range(n):
            R = R | ((R.astype(int) @ R.astype(int)) > 0)
        comps = strongly_connected_components(A)
        assert sorted(v for c in comps for v in c) == list(range(n))
        for c in comps:
            for u in c:
                for v in range(n):
                    assert (v in c) == (R[u, v] and R[v, u])


def test_hausdorff_dim_examples():
    assert hausdorff_dim(CANTOR01).dimension == pytest.approx(math.log(2, 3), abs=1e-12)
    Y23 = minkowski_sum(cantor(5, [0, 2]), cantor(5, [0, 3]))
    assert hausdorff_dim(Y23).dimension == pytest.approx(math.log(2 + math.sqrt(3), 5), abs=1e-9)


def test_hausdorff_dim_empty():
    with pytest.raises(EmptySet):
        hausdorff_dim(Presentation(p=3, vertices=[0], start=0, edges=[]))


def test_scc_cantor():
    per_vertex, sccs = scc_dimensions(CANTOR01)
    assert per_vertex == {0: pytest.approx(math.log(2, 3))}
    assert len(sccs) == 1 and sccs[0].spectral_radius == 2.0


def test_scc_plus_two_transient_start():
    per_vertex, sccs = scc_dimensions(CANTOR01_PLUS_2)
    radii = {s.vertices: s.spectral_radius for s in sccs}
    assert radii[(0,)] == 0.0 and radii[(1,)] == 0.0
    assert radii[(2, 3)] == pytest.approx(2.0)
    for v in range(4):
        assert per_vertex[v] == pytest.approx(math.log(2, 3), abs=1e-12)


def test_scc_chain_inherits():
    H = mul_p_power(standardize(cantor(5, [1, 3, 4])), 3)
    per_vertex, _ = scc_dimensions(H)
    assert all(d == pytest.approx(math.log(3, 5)) for d in per_vertex.values())


def test_dimension_properties_random():
    r = rng(32)
    for _ in range(100):
        p = r.choice([2, 3, 5, 7])
        H = random_standard(r, p)
        rep = hausdorff_dim(H)
        assert 1 - 1e-12 <= rep.spectral_radius <= p + 1e-12
        assert -1e-12 <= rep.dimension <= 1 + 1e-12
        assert rep.per_vertex[H.presentation.start] == pytest.approx(rep.dimension, abs=1e-9)
        assert rep.spectral_radius == pytest.approx(eig_radius(adjacency_matrix(H.presentation)), rel=1e-9)


def test_example_family_bounds():
    lo, hi = math.log(3, 5), math.log(4, 5)
    for i in range(1, 5):
        for j in range(1, 5):
            d = hausdorff_dim(minkowski_sum(cantor(5, [0, i]), cantor(5, [0, j]))).dimension
            assert lo - 1e-12 <= d <= hi + 1e-12
