"""Per-graph invariant bundle consumed by the inequality registry.

:class:`GraphInvariants` computes every quantity lazily with the exact
algorithms of this package (Fractions for degree-only quantities, power
iteration for eigenvalues, branch and bound for cliques and colourings).
:class:`irreg.batch.BatchInvariants` exposes the same attribute names as
numpy arrays over many graphs at once, so a check written against these
names runs in either mode.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cached_property

from . import extremal, measures, spectral
from .families import complete_bipartite, turan_edge_count
from .graph import Graph, degree_stats, radius

# Graphs whose Colin de Verdiere parameter is known; nothing here computes it.
LAMBDA_FIXTURES: list[tuple[str, Graph, int]] = [
    ("K3,3", complete_bipartite(3, 3), 4),
]


class GraphInvariants:
    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.m = g.m
        self.degrees = g.degrees

    # degrees -----------------------------------------------------------
    @cached_property
    def sumd2(self) -> int:
        return sum(d * d for d in self.degrees)

    @cached_property
    def delta_max(self) -> int:
        return self.g.max_degree

    @cached_property
    def delta_min(self) -> int:
        return self.g.min_degree

    @cached_property
    def sumt2(self) -> int:
        return sum(t * t for t in degree_stats(self.g).neighbor_degree_sums)

    @cached_property
    def connected(self) -> bool:
        return self.g.is_connected()

    @cached_property
    def no_isolated(self) -> bool:
        return self.n > 0 and self.delta_min > 0

    @cached_property
    def variance(self) -> Fraction:
        return measures.variance(self.g)

    # spectral -----------------------------------------------------------
    @cached_property
    def mu(self) -> float:
        return spectral.adjacency_spectral_radius(self.g).value

    @cached_property
    def q(self) -> float:
        return spectral.signless_laplacian_spectral_radius(self.g).value

    # measures -----------------------------------------------------------
    @cached_property
    def nu(self) -> Fraction:
        return measures.nu(self.g)

    @cached_property
    def eps(self) -> float:
        return measures.epsilon(self.g)

    @cached_property
    def beta(self) -> float:
        return self.mu * self.n / (2 * self.m)

    @cached_property
    def gamma(self) -> float:
        return self.q * self.n / (4 * self.m)

    @cached_property
    def alpha_ylt(self) -> Fraction:
        return Fraction(self.n * self.n * self.sumt2, 4 * self.m * self.m * self.sumd2)

    @cached_property
    def R(self) -> float:
        return measures.randic(self.g)

    @cached_property
    def H(self) -> Fraction:
        return measures.harmonic(self.g)

    @cached_property
    def R_half(self) -> float:
        return measures.edge_root_sum(self.g)

    @cached_property
    def R_one(self) -> int:
        return sum(self.degrees[u] * self.degrees[v] for u, v in self.g.edges())

    @cached_property
    def _denom(self) -> float:
        return self.n - 2 * math.sqrt(self.n - 1)

    @cached_property
    def rho_n(self) -> float:
        return (self.n - 2 * self.R) / self._denom

    @cached_property
    def nu_n(self) -> Fraction:
        return (self.n * self.n - self.n * self.n / self.nu) / Fraction((self.n - 2) ** 2)

    @cached_property
    def eps_n(self) -> float:
        return (self.n - self.n / self.eps) / self._denom

    @cached_property
    def beta_n(self) -> float:
        return (self.n - self.n / self.beta) / self._denom

    # combinatorial -----------------------------------------------------
    @cached_property
    def _profile(self) -> extremal.CliqueProfile:
        return extremal.clique_counts(self.g)

    @cached_property
    def counts(self) -> tuple[int, ...]:
        """counts[h] = number of h-cliques for h = 0..n (counts[0] = 1)."""
        prof = self._profile
        return (1,) + tuple(prof.c(h) for h in range(1, self.n + 1))

    @cached_property
    def omega(self) -> int:
        w = extremal.clique_number(self.g)
        assert w == self._profile.omega
        return w

    @cached_property
    def chi(self) -> int:
        return extremal.chromatic_number(self.g)

    @property
    def t(self) -> int:
        return self.counts[3] if self.n >= 3 else 0

    @property
    def c4(self) -> int:
        return self.counts[4] if self.n >= 4 else 0

    @cached_property
    def phi(self) -> int:
        return extremal.phi(self.degrees).phi

    @cached_property
    def dstar_phi(self) -> float:
        return extremal.d_star(self.degrees, self.phi)

    @cached_property
    def radius(self) -> int:
        return radius(self.g)[0]

    @cached_property
    def turan_m(self) -> int:
        return turan_edge_count(self.n, self.omega)

    @cached_property
    def lam(self) -> int | None:
        from .graph import is_isomorphic

        for _, h, lam in LAMBDA_FIXTURES:
            if is_isomorphic(self.g, h):
                return lam
        return None

    @property
    def has_lambda(self) -> bool:
        return self.lam is not None


def invariants(g: Graph) -> GraphInvariants:
    return GraphInvariants(g)
