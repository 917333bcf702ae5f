"""Catalogue of inequalities relating irregularity measures to extremal parameters.

Each entry is written once against the invariant names shared by
:class:`~irreg.invariants.GraphInvariants` (exact, one graph) and
:class:`~irreg.batch.BatchInvariants` (numpy, many graphs). Arithmetic goes
through :func:`_div` and :func:`_sqrt` so that integer and Fraction inputs
stay exact while arrays stay vectorised. Applicability predicates use only
integer and boolean invariants, so both paths agree on them exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

import numpy as np

LE = "<="
GE = ">="


def _div(a, b):
    if isinstance(a, (float, np.ndarray, np.floating)) or isinstance(b, (float, np.ndarray, np.floating)):
        return a / b
    return Fraction(a) / Fraction(b)


def _sqrt(x):
    if isinstance(x, np.ndarray):
        return np.sqrt(x)
    return math.sqrt(x)


def _always(inv):
    return inv.m >= 1


@dataclass(frozen=True)
class InequalityCheck:
    id: str
    statement: str
    source: str
    direction: str
    sides: Callable[[Any], tuple[Any, Any]]
    applies: Callable[[Any], Any] = _always
    condition: str = "m >= 1"
    kind: str = "theorem"  # theorem | conjecture | search
    expect_violations: bool = False
    aliases: tuple[str, ...] = ()


def _mm1_sides(inv):
    """Moon-Moser clique ratio bound, reported at the tightest h in 2..omega-1."""
    if isinstance(inv.n, np.ndarray):
        c = inv.counts.astype(float)
        best_slack = np.full(inv.N, np.inf)
        lhs = np.full(inv.N, np.nan)
        rhs = np.full(inv.N, np.nan)
        for h in range(2, inv.order):
            valid = h < inv.omega
            with np.errstate(all="ignore"):
                l = c[:, h + 1] / c[:, h]
                r = (h * h * c[:, h] / c[:, h - 1] - inv.n) / (h * h - 1)
            s = np.where(valid, l - r, np.inf)
            better = s < best_slack
            best_slack = np.where(better, s, best_slack)
            lhs = np.where(better, l, lhs)
            rhs = np.where(better, r, rhs)
        return lhs, rhs
    c = inv.counts
    best = None
    for h in range(2, inv.omega):
        l = Fraction(c[h + 1], c[h])
        r = (Fraction(h * h * c[h], c[h - 1]) - inv.n) / (h * h - 1)
        if best is None or l - r < best[0] - best[1]:
            best = (l, r)
    return best


def _turan_bound(power):
    def sides(inv):
        return inv.m, _div(inv.turan_m, power(inv))
    return sides


CHECKS: list[InequalityCheck] = [
    # irregularity measure comparisons
    InequalityCheck(
        "HOF", "nu <= beta^2", "Hofmeister: mu^2 >= sum d_i^2 / n", LE,
        lambda i: (i.nu, i.beta ** 2)),
    InequalityCheck(
        "FMS", "epsilon <= beta", "Favaron-Maheo-Sacle: mu >= sum sqrt(d_i d_j) / m", LE,
        lambda i: (i.eps, i.beta)),
    InequalityCheck(
        "NU-EPS", "epsilon <= nu", "AM-GM over edges", LE,
        lambda i: (i.eps, i.nu)),
    InequalityCheck(
        "LL", "nu <= gamma", "Liu-Liu: sum d_i^2 <= m q (connectedness not needed)", LE,
        lambda i: (i.nu, i.gamma)),
    InequalityCheck(
        "Q-2MU", "beta <= gamma", "q >= 2 mu", LE,
        lambda i: (i.beta, i.gamma)),
    InequalityCheck(
        "FALSE-γ2β", "2 beta <= gamma", "literal reading of q >= 2 mu in terms of beta, gamma", LE,
        lambda i: (2 * i.beta, i.gamma),
        kind="search", expect_violations=True, aliases=("FALSE-gamma2beta",)),
    InequalityCheck(
        "SEARCH-ε2ν", "nu <= epsilon^2", "incomparability of nu and epsilon^2 (Favaron et al.)", LE,
        lambda i: (i.nu, i.eps ** 2),
        kind="search", expect_violations=True, aliases=("SEARCH-eps2nu",)),
    InequalityCheck(
        "HL", "q <= m n / (n - 1)", "Hansen-Lucas", LE,
        lambda i: (i.q, _div(i.m * i.n, i.n - 1)),
        applies=lambda i: (i.m >= 1) & i.connected & (i.n >= 2), condition="connected, n >= 2"),

    # chromatic number and Colin de Verdiere parameter
    InequalityCheck(
        "T1", "chi <= n / beta", "Edwards-Elphick bound with chi(chi-1) <= 2m", LE,
        lambda i: (i.chi, _div(i.n, i.beta))),
    InequalityCheck(
        "T1-HV", "chi <= 2R", "Hansen-Vukicevic", LE,
        lambda i: (i.chi, 2 * i.R),
        applies=lambda i: (i.m >= 1) & i.no_isolated, condition="no isolated vertices"),
    InequalityCheck(
        "T1-Deng", "chi <= 2H", "Deng et al.", LE,
        lambda i: (i.chi, 2 * i.H),
        applies=lambda i: (i.m >= 1) & i.no_isolated, condition="no isolated vertices"),
    InequalityCheck(
        "T1-γ", "chi <= n / sqrt(gamma)", "He-Jin-Zhang / Abreu-Nikiforov clique bound", LE,
        lambda i: (i.chi, _div(i.n, _sqrt(i.gamma))), aliases=("T1-gamma",)),
    InequalityCheck(
        "T2-rhs", "lambda <= n / beta - 1", "Pendavingh + Nikiforov; lambda from fixture table", LE,
        lambda i: (i.lam, _div(i.n, i.beta) - 1),
        applies=lambda i: (i.m >= 1) & i.connected & i.has_lambda,
        condition="connected, lambda known"),
    InequalityCheck(
        "T2-rhs-γ", "lambda <= n / sqrt(gamma) - 1", "clique bound 2n/(2n-q) <= omega", LE,
        lambda i: (i.lam, _div(i.n, _sqrt(i.gamma)) - 1),
        applies=lambda i: (i.m >= 1) & i.connected & i.has_lambda,
        condition="connected, lambda known", aliases=("T2-rhs-gamma",)),
    InequalityCheck(
        "EE", "mu^2 <= 2m (chi - 1) / chi", "Edwards-Elphick", LE,
        lambda i: (i.mu ** 2, _div(2 * i.m * (i.chi - 1), i.chi))),
    InequalityCheck(
        "NIK", "mu^2 <= 2m (omega - 1) / omega", "Nikiforov", LE,
        lambda i: (i.mu ** 2, _div(2 * i.m * (i.omega - 1), i.omega))),
    InequalityCheck(
        "HJZ", "2n / (2n - q) <= omega", "He-Jin-Zhang / Abreu-Nikiforov", LE,
        lambda i: (_div(2 * i.n, 2 * i.n - i.q), i.omega)),
    InequalityCheck(
        "CVET", "n / (n - mu) <= omega", "Cvetkovic", LE,
        lambda i: (_div(i.n, i.n - i.mu), i.omega)),
    InequalityCheck(
        "CVET-φ", "n / (n - mu) <= phi", "Cvetkovic bound with omega replaced by phi", LE,
        lambda i: (_div(i.n, i.n - i.mu), i.phi),
        kind="search", expect_violations=True, aliases=("CVET-phi",)),

    # Turan-type bounds
    InequalityCheck(
        "T3", "2m <= (omega - 1) n^2 / (omega beta^2)", "Nikiforov spectral Turan bound", LE,
        lambda i: (2 * i.m, _div((i.omega - 1) * i.n ** 2, i.omega * i.beta ** 2))),
    InequalityCheck(
        "T3-i", "2m <= (omega - 1) n^2 / (omega nu)", "via nu <= beta^2; also Moon-Moser", LE,
        lambda i: (2 * i.m, _div((i.omega - 1) * i.n ** 2, i.omega * i.nu))),
    InequalityCheck(
        "T3-ii", "2m <= (omega - 1) n^2 / (omega epsilon^2)", "via epsilon <= beta", LE,
        lambda i: (2 * i.m, _div((i.omega - 1) * i.n ** 2, i.omega * i.eps ** 2))),
    InequalityCheck(
        "T3-γ", "2m <= (omega - 1) n^2 / (omega gamma)", "via 2n/(2n-q) <= omega", LE,
        lambda i: (2 * i.m, _div((i.omega - 1) * i.n ** 2, i.omega * i.gamma)),
        aliases=("T3-gamma",)),
    InequalityCheck(
        "T3-α", "2m <= (omega - 1) n^2 / (omega alpha)",
        "Yu-Lu-Tian: mu^2 >= sum t_i^2 / sum d_i^2", LE,
        lambda i: (2 * i.m, _div((i.omega - 1) * i.n ** 2, i.omega * i.alpha_ylt)),
        aliases=("T3-alpha",)),
    InequalityCheck(
        "YLT", "nu <= alpha", "Yu-Lu-Tian chain", LE,
        lambda i: (i.nu, i.alpha_ylt)),
    InequalityCheck(
        "C1", "t >= m (4 m nu - n^2) / (3n)", "Moon-Moser triangle bound strengthened by nu", GE,
        lambda i: (i.t, _div(i.m * (4 * i.m * i.nu - i.n ** 2), 3 * i.n))),
    InequalityCheck(
        "C4", "c4 >= m (4 m nu - n^2)(3 m nu - n^2) / (6 n^2)",
        "Moon-Moser recursion continued to 4-cliques", GE,
        lambda i: (i.c4, _div(i.m * (4 * i.m * i.nu - i.n ** 2) * (3 * i.m * i.nu - i.n ** 2),
                              6 * i.n ** 2)),
        # sum d^2 >= n m  <=>  4 m nu >= n^2; below that both factors are negative
        applies=lambda i: (i.m >= 1) & (i.sumd2 >= i.n * i.m),
        condition="4 m nu >= n^2"),
    InequalityCheck(
        "MM1", "c_{h+1}/c_h >= (h^2 c_h/c_{h-1} - n)/(h^2 - 1), 2 <= h < omega",
        "Moon-Moser", GE, _mm1_sides,
        applies=lambda i: (i.m >= 1) & (i.omega >= 3), condition="omega >= 3"),
    InequalityCheck(
        "MM2", "n m + 3 t >= sum d_i^2", "Moon-Moser", GE,
        lambda i: (i.n * i.m + 3 * i.t, i.sumd2)),
    InequalityCheck(
        "KN", "2m <= (phi - 1) n^2 / phi", "Khadzhiivanov-Nenov", LE,
        lambda i: (2 * i.m, _div((i.phi - 1) * i.n ** 2, i.phi))),
    InequalityCheck(
        "PHI-OMEGA", "phi <= omega", "Bojilov-Caro", LE,
        lambda i: (i.phi, i.omega)),
    InequalityCheck(
        "SEARCH-MS-φ", "1 - 1/omega <= 1 - 1/phi",
        "Motzkin-Straus Lagrangian (= 1 - 1/omega) against phi", LE,
        lambda i: (1 - _div(1, i.omega), 1 - _div(1, i.phi)),
        kind="search", expect_violations=True, aliases=("SEARCH-MS-phi",)),
    InequalityCheck(
        "BN","2m <= (phi - 1) n^2 / (phi sqrt(nu))", "Bojilov-Nenov", LE,
        lambda i: (2 * i.m, _div((i.phi - 1) * i.n ** 2, i.phi * _sqrt(i.nu)))),
    InequalityCheck(
        "D-STAR", "n / (n - d*_phi) <= phi", "Bojilov-Caro power-mean chain", LE,
        lambda i: (_div(i.n, i.n - i.dstar_phi), i.phi)),
    InequalityCheck(
        "CONJ1", "2m <= (phi - 1) n^2 / (phi epsilon)", "open conjecture", LE,
        lambda i: (2 * i.m, _div((i.phi - 1) * i.n ** 2, i.phi * i.eps)),
        kind="conjecture"),
    InequalityCheck(
        "CONJ1-NOISO", "2m <= (phi - 1) n^2 / (phi epsilon), no isolated vertices",
        "open conjecture restricted to minimum degree >= 1", LE,
        lambda i: (2 * i.m, _div((i.phi - 1) * i.n ** 2, i.phi * i.eps)),
        applies=lambda i: (i.m >= 1) & i.no_isolated, condition="no isolated vertices",
        kind="conjecture"),
    InequalityCheck(
        "FALSE-PHI-ν", "2m <= (phi - 1) n^2 / (phi nu)", "nu analogue of Bojilov-Nenov; known false", LE,
        lambda i: (2 * i.m, _div((i.phi - 1) * i.n ** 2, i.phi * i.nu)),
        kind="search", expect_violations=True, aliases=("FALSE-PHI-nu",)),
    InequalityCheck(
        "SEARCH-TURAN-ν", "m <= m(T_omega(n)) / nu", "full Turan bound divided by nu", LE,
        _turan_bound(lambda i: i.nu),
        kind="search", expect_violations=True, aliases=("SEARCH-TURAN-nu",)),
    InequalityCheck(
        "SEARCH-TURAN-ε", "m <= m(T_omega(n)) / epsilon^2", "full Turan bound divided by epsilon^2", LE,
        _turan_bound(lambda i: i.eps ** 2),
        kind="search", expect_violations=True, aliases=("SEARCH-TURAN-eps",)),
    InequalityCheck(
        "SEARCH-TURAN-β", "m <= m(T_omega(n)) / beta^2", "full Turan bound divided by beta^2", LE,
        _turan_bound(lambda i: i.beta ** 2),
        kind="search", expect_violations=True, aliases=("SEARCH-TURAN-beta",)),

    # Randic, harmonic index and radius
    InequalityCheck(
        "XU-1", "n / (2 nu) <= H", "Xu", LE,
        lambda i: (_div(i.n, 2 * i.nu), i.H),
        applies=lambda i: (i.m >= 1) & i.no_isolated, condition="no isolated vertices"),
    InequalityCheck(
        "XU-2", "H <= R", "Xu", LE,
        lambda i: (i.H, i.R),
        applies=lambda i: (i.m >= 1) & i.no_isolated, condition="no isolated vertices"),
    InequalityCheck(
        "XU-3", "R <= n / 2", "Xu", LE,
        lambda i: (i.R, _div(i.n, 2)),
        applies=lambda i: (i.m >= 1) & i.no_isolated, condition="no isolated vertices"),
    InequalityCheck(
        "LIU", "H >= 2m / n", "Liu (triangle-free graphs)", GE,
        lambda i: (i.H, _div(2 * i.m, i.n)),
        applies=lambda i: (i.m >= 1) & i.no_isolated & (i.omega == 2),
        condition="omega = 2, no isolated vertices"),
    InequalityCheck(
        "LIU-ω", "H >= omega m / ((omega - 1) n)", "Liu bound generalised through nu", GE,
        lambda i: (i.H, _div(i.omega * i.m, (i.omega - 1) * i.n)),
        applies=lambda i: (i.m >= 1) & i.no_isolated, condition="no isolated vertices",
        aliases=("LIU-omega",)),
    InequalityCheck(
        "CS-1", "n / (2 beta) <= n / (2 epsilon)", "m/mu bound", LE,
        lambda i: (_div(i.n, 2 * i.beta), _div(i.n, 2 * i.eps))),
    InequalityCheck(
        "CS-2", "n / (2 epsilon) <= R", "Cauchy-Schwarz", LE,
        lambda i: (_div(i.n, 2 * i.eps), i.R),
        applies=lambda i: (i.m >= 1) & i.no_isolated, condition="no isolated vertices"),
    InequalityCheck(
        "SEARCH-εH", "n / (2 epsilon) <= H", "CS-2 with R replaced by H; known false", LE,
        lambda i: (_div(i.n, 2 * i.eps), i.H),
        applies=lambda i: (i.m >= 1) & i.no_isolated, condition="no isolated vertices",
        kind="search", expect_violations=True, aliases=("SEARCH-epsH",)),
    InequalityCheck(
        "SEARCH-βH", "n / (2 beta) <= H", "CS-1 then H; not claimed in general", LE,
        lambda i: (_div(i.n, 2 * i.beta), i.H),
        applies=lambda i: (i.m >= 1) & i.no_isolated, condition="no isolated vertices",
        kind="search", expect_violations=True, aliases=("SEARCH-betaH",)),
    InequalityCheck(
        "T4", "m / (n - r) <= n / (2 nu)", "radius bound via d_i <= n - ecc(i)", LE,
        lambda i: (_div(i.m, i.n - i.radius), _div(i.n, 2 * i.nu)),
        applies=lambda i: (i.m >= 1) & i.connected, condition="connected"),
    InequalityCheck(
        "T4-XU", "m / (n - r) <= H", "Xu radius bound", LE,
        lambda i: (_div(i.m, i.n - i.radius), i.H),
        applies=lambda i: (i.m >= 1) & i.connected, condition="connected"),

    # upper bounds
    InequalityCheck(
        "T5", "gamma <= n^2 / (4 (n - 1))", "Hansen-Lucas", LE,
        lambda i: (i.gamma, _div(i.n ** 2, 4 * (i.n - 1))),
        applies=lambda i: (i.m >= 1) & i.connected, condition="connected"),
    InequalityCheck(
        "GFE-β", "beta^2 <= n^2 / (4 (n - 1))", "Gutman-Furtula-Elphick", LE,
        lambda i: (i.beta ** 2, _div(i.n ** 2, 4 * (i.n - 1))),
        applies=lambda i: (i.m >= 1) & i.connected, condition="connected",
        aliases=("GFE-beta",)),
    InequalityCheck(
        "GFE-ν", "nu <= n^2 / (4 (n - 1))", "Gutman-Furtula-Elphick", LE,
        lambda i: (i.nu, _div(i.n ** 2, 4 * (i.n - 1))),
        applies=lambda i: (i.m >= 1) & i.connected, condition="connected",
        aliases=("GFE-nu",)),
    InequalityCheck(
        "GFE-ε", "epsilon^2 <= n^2 / (4 (n - 1))", "Gutman-Furtula-Elphick", LE,
        lambda i: (i.eps ** 2, _div(i.n ** 2, 4 * (i.n - 1))),
        applies=lambda i: (i.m >= 1) & i.connected, condition="connected",
        aliases=("GFE-eps",)),
    InequalityCheck(
        "DAS", "sum d_i^2 <= 2m (Delta + delta) - n Delta delta", "Das", LE,
        lambda i: (i.sumd2, 2 * i.m * (i.delta_max + i.delta_min) - i.n * i.delta_max * i.delta_min)),
    InequalityCheck(
        "IZU", "var <= (Delta - delta)^2 / 4", "Izumino-Mori-Seo", LE,
        lambda i: (i.variance, _div((i.delta_max - i.delta_min) ** 2, 4))),
    InequalityCheck(
        "IZU-ν", "nu <= 1 + ((Delta - delta) / (2 d))^2", "Izumino-Mori-Seo", LE,
        lambda i: (i.nu, 1 + _div((i.delta_max - i.delta_min) * i.n, 4 * i.m) ** 2),
        aliases=("IZU-nu",)),
    InequalityCheck(
        "LY-½", "R_{1/2} <= n (n - 1)^2 / 2", "Li-Yang", LE,
        lambda i: (i.R_half, _div(i.n * (i.n - 1) ** 2, 2)), aliases=("LY-half",)),
    InequalityCheck(
        "LY-1", "R_1 <= n (n - 1)^3 / 2", "Li-Yang", LE,
        lambda i: (i.R_one, _div(i.n * (i.n - 1) ** 3, 2))),
    InequalityCheck(
        "LY-ε", "epsilon <= ((n - 1) / d)^2", "Li-Yang", LE,
        lambda i: (i.eps, _div(i.n * (i.n - 1), 2 * i.m) ** 2), aliases=("LY-eps",)),

    # heterogeneity indices
    InequalityCheck(
        "IDX-ρ", "0 <= rho_n", "Estrada index range", LE,
        lambda i: (0, i.rho_n),
        applies=lambda i: (i.m >= 1) & i.connected & (i.n >= 3), condition="connected, n >= 3",
        aliases=("IDX-rho",)),
    InequalityCheck(
        "IDX-ρε", "rho_n <= eps_n", "Cauchy-Schwarz", LE,
        lambda i: (i.rho_n, i.eps_n),
        applies=lambda i: (i.m >= 1) & i.connected & (i.n >= 3), condition="connected, n >= 3",
        aliases=("IDX-rho-eps",)),
    InequalityCheck(
        "IDX-εβ", "eps_n <= beta_n", "epsilon <= beta", LE,
        lambda i: (i.eps_n, i.beta_n),
        applies=lambda i: (i.m >= 1) & i.connected & (i.n >= 3), condition="connected, n >= 3",
        aliases=("IDX-eps-beta",)),
    InequalityCheck(
        "IDX-β", "beta_n <= 1", "Gutman-Furtula-Elphick", LE,
        lambda i: (i.beta_n, 1),
        applies=lambda i: (i.m >= 1) & i.connected & (i.n >= 3), condition="connected, n >= 3",
        aliases=("IDX-beta",)),
    InequalityCheck(
        "IDX-ν", "nu_n <= 1", "nu range", LE,
        lambda i: (i.nu_n, 1),
        applies=lambda i: (i.m >= 1) & i.connected & (i.n >= 3), condition="connected, n >= 3",
        aliases=("IDX-nu",)),
]


_BY_ID: dict[str, InequalityCheck] = {}
for _c in CHECKS:
    for _name in (_c.id,) + _c.aliases:
        if _name in _BY_ID:
            raise RuntimeError(f"duplicate check id {_name}")
        _BY_ID[_name] = _c


def registry() -> list[InequalityCheck]:
    return list(CHECKS)


def get_check(check_id: str) -> InequalityCheck:
    try:
        return _BY_ID[check_id]
    except KeyError:
        raise KeyError(f"unknown check id {check_id!r}") from None
