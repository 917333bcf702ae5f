import math
from functools import lru_cache
from itertools import combinations, product

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from irreg import extremal
from irreg.batch import BatchInvariants
from irreg.errors import DomainError, UnsupportedSizeError
from irreg.extremal import (chromatic_number, clique_counts, clique_number, maximum_clique,
                            optimal_coloring, phi, phi_lower_chain, phi_regular, triangle_count)
from irreg.families import complete, cycle, figure1, figure2, petersen, turan, wheel
from irreg.graph import Graph

from conftest import graphs


def brute_cliques(g):
    counts = [0] * (g.n + 1)
    for h in range(g.n + 1):
        for vs in combinations(range(g.n), h):
            if all(g.has_edge(u, v) for u, v in combinations(vs, 2)):
                counts[h] += 1
    return counts


def brute_chi(g):
    for k in range(1, g.n + 1):
        # vertex 0 can always take colour 0
        for rest in product(range(k), repeat=g.n - 1):
            col = (0,) + rest
            if all(col[u] != col[v] for u, v in g.edges()):
                return k
    return 0


def brute_phi(degrees):
    """Minimum number of parts over all vertex partitions, by subset DP."""
    n = len(degrees)
    full = (1 << n) - 1
    size = [bin(s).count("1") for s in range(1 << n)]
    top = [max((degrees[v] for v in range(n) if s >> v & 1), default=0) for s in range(1 << n)]
    valid = [s and size[s] <= n - top[s] for s in range(1 << n)]

    @lru_cache(maxsize=None)
    def f(s):
        if s == 0:
            return 0
        low = s & -s
        rest = s ^ low
        best = n + 1
        sub = rest
        while True:
            part = sub | low
            if valid[part]:
                best = min(best, 1 + f(s ^ part))
            if sub == 0:
                break
            sub = (sub - 1) & rest
        return best

    return f(full)


@given(graphs(max_n=7))
def test_clique_number_matches_brute_force(g):
    counts = brute_cliques(g)
    omega = max(h for h in range(g.n + 1) if counts[h])
    assert clique_number(g) == omega
    w = maximum_clique(g)
    assert len(w) == omega
    assert all(g.has_edge(u, v) for u, v in combinations(w, 2))


@given(graphs(max_n=7))
def test_clique_counts_match_brute_force(g):
    counts = brute_cliques(g)
    prof = clique_counts(g)
    assert [prof.c(h) for h in range(1, g.n + 1)] == counts[1:]
    assert prof.c(1) == g.n and (g.n < 2 or prof.c(2) == g.m)
    assert triangle_count(g) == counts[3] if g.n >= 3 else True


@given(graphs(max_n=7))
def test_chromatic_number_matches_brute_force(g):
    col = optimal_coloring(g)
    assert all(col[u] != col[v] for u, v in g.edges())
    assert chromatic_number(g) == brute_chi(g)


@given(graphs(max_n=7))
def test_phi_omega_chi_chain(g):
    p = phi(g.degrees).phi
    assert p <= clique_number(g) <= chromatic_number(g)


@pytest.mark.parametrize("g, omega, chi", [
    (petersen(), 2, 3), (cycle(5), 2, 3), (cycle(6), 2, 2), (wheel(5), 3, 4),
    (complete(6), 6, 6), (turan(7, 3), 3, 3), (figure1(), 3, 3),
])
def test_named_graphs(g, omega, chi):
    assert clique_number(g) == omega
    assert chromatic_number(g) == chi


def test_mycielski_graph_needs_four_colours():
    g = nx.mycielski_graph(4)  # Grotzsch graph: triangle-free, chi = 4
    h = Graph.from_edges(g.number_of_nodes(), g.edges())
    assert clique_number(h) == 2
    assert chromatic_number(h) == 4


def test_figure_graph_phi():
    assert phi(figure1().degrees).phi == 2
    assert phi(figure2().degrees).phi == 2


@pytest.mark.parametrize("n", range(1, 8))
def test_phi_greedy_is_minimal_for_every_degree_sequence(n):
    masks = np.arange(1 << (n * (n - 1) // 2), dtype=np.int64)
    seqs = {tuple(row) for row in np.sort(BatchInvariants(n, masks).degrees, axis=1)}
    for seq in seqs:
        assert phi(list(seq)).phi == brute_phi(list(seq)), seq


@given(st.lists(st.integers(0, 7), min_size=1, max_size=8).map(
    lambda ds: [min(d, len(ds) - 1) for d in ds]))
def test_phi_partition_is_valid(ds):
    res = phi(ds)
    n = len(ds)
    assert sorted(v for p in res.partition for v in p) == list(range(n))
    assert all(ds[v] <= n - len(p) for p in res.partition for v in p)
    assert res.phi == brute_phi(ds)


@pytest.mark.parametrize("n", range(1, 11))
def test_phi_regular_closed_form(n):
    for d in range(n):
        if n * d % 2:
            continue
        assert phi([d] * n).phi == phi_regular(n, d) == math.ceil(n / (n - d))


def test_phi_rejects_bad_sequences():
    with pytest.raises(DomainError):
        phi([])
    with pytest.raises(DomainError):
        phi([3, 1, 1])
    with pytest.raises(DomainError):
        phi([-1, 0])


def test_phi_lower_chain_is_monotone_and_bounded():
    ds = list(figure1().degrees)
    chain = phi_lower_chain(ds, 4)
    assert chain[0] == pytest.approx(7 / (7 - 18 / 7))
    assert all(a <= b + 1e-12 for a, b in zip(chain, chain[1:]))
    assert chain[1] <= phi(ds).phi
    assert phi_lower_chain([6] * 7, 2) == [7.0, 7.0]


def test_caps(monkeypatch):
    monkeypatch.setattr(extremal, "COLORING_CAP", 4)
    monkeypatch.setattr(extremal, "CLIQUE_CAP", 4)
    monkeypatch.setattr(extremal, "COUNT_CAP", 4)
    for fn in (chromatic_number, clique_number, clique_counts):
        with pytest.raises(UnsupportedSizeError):
            fn(complete(5))
