"""Irregularity measures and degree-based topological indices.

Quantities that depend only on degrees are kept as exact ``Fraction``s so
that equality cases (stars, regular graphs, complete multipartite graphs)
compare exactly; anything involving a square root or an eigenvalue is a
float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import DomainError, EmptyGraphError
from .graph import DegreeStats, Graph, degree_stats

DEFAULT_ALPHAS = (0.5, 1.0)


@dataclass(frozen=True)
class MeasureSet:
    nu: Fraction
    epsilon: float
    beta: float
    gamma: float
    cv: float
    ce: float
    collatz_sinogowitz: float
    variance: Fraction
    nikiforov_s: Fraction
    albertson: int
    alpha_ylt: Fraction


@dataclass(frozen=True)
class IndexSet:
    randic: float
    harmonic: Fraction
    generalized_randic: dict[float, float]
    zagreb1: int
    rho_n: float | None = None
    nu_n: Fraction | None = None
    eps_n: float | None = None
    beta_n: float | None = None


class HeterogeneityIndices(NamedTuple):
    rho_n: float
    nu_n: Fraction
    eps_n: float
    beta_n: float


def _require_edges(g: Graph) -> None:
    if g.m == 0:
        raise EmptyGraphError("measure divides by the edge count, but m = 0")


def nu(g: Graph) -> Fraction:
    _require_edges(g)
    return Fraction(g.n * sum(d * d for d in g.degrees), 4 * g.m * g.m)


def nu_by_edges(g: Graph) -> Fraction:
    """nu via sum over edges of (d_i + d_j), which equals the sum of squared degrees."""
    _require_edges(g)
    s = sum(g.degrees[u] + g.degrees[v] for u, v in g.edges())
    return Fraction(g.n * s, 4 * g.m * g.m)


def edge_root_sum(g: Graph) -> float:
    """sum over edges of sqrt(d_i d_j), i.e. the generalised Randic index at 1/2."""
    return math.fsum(math.sqrt(g.degrees[u] * g.degrees[v]) for u, v in g.edges())


def epsilon(g: Graph) -> float:
    _require_edges(g)
    return g.n * edge_root_sum(g) / (2 * g.m * g.m)


def nu_from_cv(cv: float) -> float:
    if cv < 0:
        raise DomainError("coefficient of variation must be nonnegative")
    return 1.0 + cv * cv


def variance(g: Graph) -> Fraction:
    if g.n == 0:
        raise DomainError("variance of an empty vertex set")
    mean = Fraction(2 * g.m, g.n)
    return sum((d - mean) ** 2 for d in g.degrees) / g.n


def nikiforov_s(g: Graph) -> Fraction:
    mean = Fraction(2 * g.m, g.n)
    return sum(abs(d - mean) for d in g.degrees)


def albertson(g: Graph) -> int:
    return sum(abs(g.degrees[u] - g.degrees[v]) for u, v in g.edges())


def additive_measures(g: Graph, mu: float) -> tuple[float, Fraction, Fraction, int]:
    """(mu - d, var(G), s(G), Albertson index)."""
    if g.n < 1:
        raise DomainError("additive measures need n >= 1")
    return mu - 2 * g.m / g.n, variance(g), nikiforov_s(g), albertson(g)


def alpha_ylt(g: Graph) -> Fraction:
    """n^2 sum t_i^2 / (4 m^2 sum d_i^2), with t_i the sum of neighbour degrees."""
    _require_edges(g)
    st = degree_stats(g)
    sum_t2 = sum(t * t for t in st.neighbor_degree_sums)
    value = Fraction(g.n * g.n * sum_t2, 4 * g.m * g.m * st.power_sums[2])
    assert value >= nu(g)
    return value


def multiplicative_measures(g: Graph, mu: float, q: float) -> MeasureSet:
    _require_edges(g)
    v = nu(g)
    eps = epsilon(g)
    collatz, var, s, alb = additive_measures(g, mu)
    return MeasureSet(
        nu=v,
        epsilon=eps,
        beta=mu * g.n / (2 * g.m),
        gamma=q * g.n / (4 * g.m),
        cv=math.sqrt(v - 1),
        ce=math.sqrt(max(eps - 1.0, 0.0)),
        collatz_sinogowitz=collatz,
        variance=var,
        nikiforov_s=s,
        albertson=alb,
        alpha_ylt=alpha_ylt(g),
    )


def randic(g: Graph) -> float:
    return math.fsum(1.0 / math.sqrt(g.degrees[u] * g.degrees[v]) for u, v in g.edges())


def harmonic(g: Graph) -> Fraction:
    return sum((Fraction(2, g.degrees[u] + g.degrees[v]) for u, v in g.edges()), Fraction(0))


def generalized_randic(g: Graph, alpha: float) -> float:
    if alpha == 1:
        return float(sum(g.degrees[u] * g.degrees[v] for u, v in g.edges()))
    return math.fsum((g.degrees[u] * g.degrees[v]) ** alpha for u, v in g.edges())


def topological_indices(g: Graph, alphas: Iterable[float] = DEFAULT_ALPHAS) -> IndexSet:
    iso = g.isolated_vertices()
    if iso:
        raise DomainError(f"vertex {iso[0]} is isolated; Randic and harmonic indices need degree >= 1")
    return IndexSet(
        randic=randic(g),
        harmonic=harmonic(g),
        generalized_randic={a: generalized_randic(g, a) for a in alphas},
        zagreb1=sum(d * d for d in g.degrees),
    )


def heterogeneity_indices(g: Graph, ms: MeasureSet, idx: IndexSet) -> HeterogeneityIndices:
    n = g.n
    if n <= 2:
        raise DomainError("heterogeneity indices need n >= 3")
    denom = n - 2 * math.sqrt(n - 1)
    return HeterogeneityIndices(
        rho_n=(n - 2 * idx.randic) / denom,
        nu_n=(n * n - n * n / ms.nu) / Fraction((n - 2) ** 2),
        eps_n=(n - n / ms.epsilon) / denom,
        beta_n=(n - n / ms.beta) / denom,
    )


def with_heterogeneity(g: Graph, ms: MeasureSet, idx: IndexSet) -> IndexSet:
    h = heterogeneity_indices(g, ms, idx)
    return IndexSet(idx.randic, idx.harmonic, idx.generalized_randic, idx.zagreb1, *h)


def d_star(stats: DegreeStats, r: int) -> float:
    """r-th power mean of the degrees; ``stats`` must carry the power sum for ``r``."""
    if r < 1:
        raise DomainError("d_star needs r >= 1")
    if r not in stats.power_sums:
        raise DomainError(f"degree_stats was built without power r={r}")
    return (stats.power_sums[r] / stats.n) ** (1.0 / r)
