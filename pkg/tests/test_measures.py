import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from irreg import measures
from irreg.errors import DomainError, EmptyGraphError
from irreg.families import complete, complete_bipartite, cycle, dutch_windmill, petersen, star
from irreg.graph import Graph, degree_stats
from irreg.measures import (alpha_ylt, epsilon, harmonic, heterogeneity_indices,
                            multiplicative_measures, nu, nu_by_edges, nu_from_cv, randic,
                            topological_indices, with_heterogeneity)
from irreg.spectral import adjacency_spectral_radius, signless_laplacian_spectral_radius

from conftest import graphs


def full_measures(g):
    mu = adjacency_spectral_radius(g).value
    q = signless_laplacian_spectral_radius(g).value
    return multiplicative_measures(g, mu, q)


def edges_np(g):
    d = np.array(g.degrees, dtype=float)
    e = np.array(g.edges()).reshape(-1, 2)
    return d, d[e[:, 0]], d[e[:, 1]]


@given(graphs(max_n=10, min_m=1))
def test_nu_matches_numpy(g):
    d, _, _ = edges_np(g)
    assert float(nu(g)) == pytest.approx(g.n * (d ** 2).sum() / (4 * g.m ** 2), rel=1e-12)
    assert nu(g) == nu_by_edges(g)
    assert isinstance(nu(g), Fraction)


@given(graphs(max_n=10, min_m=1))
def test_epsilon_matches_numpy(g):
    _, du, dv = edges_np(g)
    assert epsilon(g) == pytest.approx(g.n * np.sqrt(du * dv).sum() / (2 * g.m ** 2), rel=1e-12)


@given(graphs(max_n=9, min_m=1))
def test_measure_ordering(g):
    ms = full_measures(g)
    tol = 1e-9
    assert 1 - tol <= ms.epsilon <= float(ms.nu) + tol
    assert ms.epsilon <= ms.beta + tol
    assert float(ms.nu) <= ms.beta ** 2 + tol
    assert float(ms.nu) <= ms.gamma + tol
    assert ms.beta <= ms.gamma + tol
    assert ms.nu <= ms.alpha_ylt


@given(graphs(max_n=9, min_m=1))
def test_index_bounds_without_isolated_vertices(g):
    if g.isolated_vertices():
        with pytest.raises(DomainError):
            topological_indices(g)
        return
    idx = topological_indices(g)
    _, du, dv = edges_np(g)
    assert idx.randic == pytest.approx((1 / np.sqrt(du * dv)).sum(), rel=1e-12)
    assert float(idx.harmonic) == pytest.approx((2 / (du + dv)).sum(), rel=1e-12)
    assert idx.generalized_randic[1.0] == pytest.approx((du * dv).sum())
    assert float(idx.harmonic) <= idx.randic + 1e-12 <= g.n / 2 + 1e-9


def test_dutch_windmill_values():
    ms = full_measures(dutch_windmill(5, 4))
    assert ms.nu == Fraction(8, 5)
    assert ms.epsilon ** 2 == pytest.approx(1.675, abs=1e-3)
    assert ms.beta ** 2 == pytest.approx(1.92, abs=1e-3)


@pytest.mark.parametrize("n", range(3, 13))
def test_star_closed_forms(n):
    g = star(n)
    ms = full_measures(g)
    target = n * n / (4 * (n - 1))
    assert ms.nu == Fraction(n * n, 4 * (n - 1))
    for v in (ms.epsilon ** 2, ms.beta ** 2, ms.gamma):
        assert v == pytest.approx(target, abs=1e-9)
    idx = with_heterogeneity(g, ms, topological_indices(g))
    for v in (idx.rho_n, idx.nu_n, idx.eps_n, idx.beta_n):
        assert v == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("g", [cycle(5), complete(4), petersen(), complete_bipartite(3, 3)])
def test_regular_graphs_are_baseline(g):
    ms = full_measures(g)
    assert ms.nu == 1 and ms.variance == 0 and ms.albertson == 0 and ms.nikiforov_s == 0
    for v in (ms.epsilon, ms.beta, ms.gamma):
        assert v == pytest.approx(1.0, abs=1e-12)
    h = heterogeneity_indices(g, ms, topological_indices(g))
    assert h.nu_n == 0
    for v in h:
        assert v == pytest.approx(0.0, abs=1e-12)


def test_cv_conversion():
    assert nu_from_cv(3.685) == pytest.approx(14.58, abs=0.01)
    assert nu_from_cv(0.0) == 1.0
    with pytest.raises(DomainError):
        nu_from_cv(-0.1)


@given(graphs(max_n=9, min_m=1))
def test_cv_round_trip(g):
    ms = full_measures(g)
    assert nu_from_cv(ms.cv) == pytest.approx(float(ms.nu), rel=1e-12)
    d = np.array(g.degrees, dtype=float)
    assert ms.cv == pytest.approx(d.std() / d.mean(), abs=1e-12)


def test_empty_graph_errors():
    g = Graph.from_edges(3, [])
    for fn in (nu, epsilon, alpha_ylt):
        with pytest.raises(EmptyGraphError):
            fn(g)
    with pytest.raises(EmptyGraphError):
        multiplicative_measures(g, 0.0, 0.0)


def test_isolated_vertex_is_named():
    g = Graph.from_edges(4, [(0, 1), (1, 2)])
    with pytest.raises(DomainError, match="vertex 3"):
        topological_indices(g)


def test_heterogeneity_needs_three_vertices():
    g = complete(2)
    with pytest.raises(DomainError):
        heterogeneity_indices(g, full_measures(g), topological_indices(g))


def test_additive_measures():
    g = star(4)
    gap, var, s, alb = measures.additive_measures(g, math.sqrt(3))
    assert gap == pytest.approx(math.sqrt(3) - 1.5)
    assert var == Fraction(3, 4)
    assert s == 3
    assert alb == 6


@given(st.lists(st.integers(0, 6), min_size=1, max_size=7), st.integers(1, 4))
def test_d_star_is_a_power_mean(degrees, r):
    g = Graph.from_edges(len(degrees), [])
    stats = degree_stats(g, powers=(r,))
    stats = type(stats)(**{**stats.__dict__, "power_sums": {r: sum(d ** r for d in degrees)},
                           "n": len(degrees)})
    expected = (np.mean(np.array(degrees, dtype=float) ** r)) ** (1 / r)
    assert measures.d_star(stats, r) == pytest.approx(expected, rel=1e-12, abs=1e-12)


def test_d_star_errors():
    stats = degree_stats(star(4))
    with pytest.raises(DomainError):
        measures.d_star(stats, 0)
    with pytest.raises(DomainError):
        measures.d_star(stats, 5)


def test_randic_and_harmonic_of_path():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert randic(g) == pytest.approx(2 / math.sqrt(2))
    assert harmonic(g) == Fraction(4, 3)
