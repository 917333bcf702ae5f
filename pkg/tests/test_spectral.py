import math

import numpy as np
import pytest
from hypothesis import given

from irreg import spectral
from irreg.errors import ConvergenceError, UnsupportedSizeError
from irreg.families import complete, complete_bipartite, cycle, figure2, star
from irreg.graph import Graph
from irreg.spectral import (adjacency_spectral_radius, largest_eigenpair,
                            signless_laplacian_spectral_radius)

from conftest import graphs


def lapack_top(M):
    return np.linalg.eigvalsh(M)[-1] if len(M) else 0.0


def signless(g):
    return g.adjacency_matrix() + np.diag(np.array(g.degrees, dtype=float))


@given(graphs(max_n=12))
def test_adjacency_matches_lapack(g):
    assert adjacency_spectral_radius(g).value == pytest.approx(lapack_top(g.adjacency_matrix()),
                                                               abs=1e-9)


@given(graphs(max_n=12))
def test_signless_matches_lapack(g):
    assert signless_laplacian_spectral_radius(g).value == pytest.approx(lapack_top(signless(g)),
                                                                        abs=1e-9)


@given(graphs(min_n=1, max_n=9, min_m=1))
def test_spectral_chains(g):
    mu = adjacency_spectral_radius(g).value
    q = signless_laplacian_spectral_radius(g).value
    n, m = g.n, g.m
    tol = 1e-9
    assert 2 * m / n <= mu + tol
    assert mu <= g.max_degree + tol
    assert math.sqrt(sum(d * d for d in g.degrees) / n) <= mu + tol
    assert 4 * m / n <= q + tol
    assert 2 * mu <= q + tol
    assert q <= 2 * g.max_degree + tol


def test_witness_is_eigenvector():
    g = figure2()
    res = adjacency_spectral_radius(g)
    A = g.adjacency_matrix()
    assert np.linalg.norm(A @ res.witness - res.value * res.witness) <= 1e-9
    assert res.residual <= 1e-9


@pytest.mark.parametrize("g, mu, q", [
    (complete(5), 4.0, 8.0),
    (cycle(6), 2.0, 4.0),
    (star(6), math.sqrt(5), 6.0),
    (complete_bipartite(3, 3), 3.0, 6.0),
    (complete_bipartite(2, 5), math.sqrt(10), 7.0),
])
def test_closed_forms(g, mu, q):
    # bipartite graphs have -mu in the spectrum too; the shift handles them
    assert adjacency_spectral_radius(g).value == pytest.approx(mu, abs=1e-10)
    assert signless_laplacian_spectral_radius(g).value == pytest.approx(q, abs=1e-10)


def test_edgeless_graph():
    assert adjacency_spectral_radius(Graph.from_edges(3, [])).value == pytest.approx(0.0, abs=1e-12)


def test_no_convergence_raises():
    M = complete(4).adjacency_matrix()
    M[0, 1] = M[1, 0] = 0.5
    with pytest.raises(ConvergenceError) as info:
        largest_eigenpair(M, max_iter=2)
    assert info.value.residual > 0


def test_size_cap(monkeypatch):
    monkeypatch.setattr(spectral, "DENSE_CAP", 4)
    with pytest.raises(UnsupportedSizeError):
        adjacency_spectral_radius(complete(5))
    with pytest.raises(UnsupportedSizeError):
        adjacency_spectral_radius(Graph(0, ()))
