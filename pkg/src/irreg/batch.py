"""Vectorised invariants for many small graphs at once.

Graphs on a common vertex count ``n <= 8`` are given as edge bitmasks (bit
``k`` is edge ``k`` of :func:`irreg.graph.edge_order`). Every attribute is a
numpy array with one entry (or row) per graph, under the same names as
:class:`irreg.invariants.GraphInvariants`. Values are float64 or int64; the
exact per-graph path is the authority wherever the two could disagree.

Eigenvalues come from LAPACK (``numpy.linalg.eigvalsh``), cliques and
independent sets from subset tables, the chromatic number from a subset
dynamic programme over independent sets, so none of the per-graph
algorithms is reused here.
"""

from __future__ import annotations

from functools import cached_property, lru_cache

import numpy as np

from .errors import UnsupportedSizeError
from .families import turan_edge_count
from .graph import edge_order
from .invariants import LAMBDA_FIXTURES

BATCH_CAP = 8


@lru_cache(maxsize=None)
def _tables(n: int):
    edges = edge_order(n)
    E = len(edges)
    inc = np.zeros((E, n), dtype=np.int64)
    wts = np.zeros((E, n), dtype=np.int64)
    for k, (u, v) in enumerate(edges):
        inc[k, u] = inc[k, v] = 1
        wts[k, u] = 1 << v
        wts[k, v] = 1 << u
    eu = np.array([u for u, _ in edges], dtype=np.intp)
    ev = np.array([v for _, v in edges], dtype=np.intp)
    index = {e: k for k, e in enumerate(edges)}
    emask = np.zeros(1 << n, dtype=np.int64)
    for S in range(1 << n):
        verts = [v for v in range(n) if (S >> v) & 1]
        mk = 0
        for a in range(len(verts)):
            for b in range(a + 1, len(verts)):
                mk |= 1 << index[(verts[a], verts[b])]
        emask[S] = mk
    size = np.array([bin(S).count("1") for S in range(1 << n)], dtype=np.int64)
    # (S, I) pairs for the colouring DP: I independent candidate containing lowbit(S)
    pairs = []
    for S in range(1, 1 << n):
        low = S & -S
        rest = S ^ low
        sub = rest
        while True:
            pairs.append((S, sub | low))
            if sub == 0:
                break
            sub = (sub - 1) & rest
    turan = np.array([0] + [turan_edge_count(n, r) for r in range(1, n + 1)], dtype=np.int64)
    return inc, wts, eu, ev, emask, size, pairs, turan


class BatchInvariants:
    def __init__(self, n: int, masks):
        if not 1 <= n <= BATCH_CAP:
            raise UnsupportedSizeError(f"batch invariants support 1 <= n <= {BATCH_CAP}")
        self.order = n
        self.masks = np.asarray(masks, dtype=np.int64)
        self.N = len(self.masks)
        self.n = np.full(self.N, n, dtype=np.int64)
        (self._inc, self._wts, self._eu, self._ev, self._emask,
         self._size, self._pairs, self._turan) = _tables(n)

    def subset(self, keep) -> "BatchInvariants":
        return BatchInvariants(self.order, self.masks[keep])

    # structure ---------------------------------------------------------
    @cached_property
    def bits(self) -> np.ndarray:
        E = len(self._eu)
        return (self.masks[:, None] >> np.arange(E, dtype=np.int64)) & 1

    @cached_property
    def degrees(self) -> np.ndarray:
        return self.bits @ self._inc

    @cached_property
    def m(self) -> np.ndarray:
        return self.bits.sum(axis=1)

    @cached_property
    def rows(self) -> np.ndarray:
        return self.bits @ self._wts

    @cached_property
    def adj(self) -> np.ndarray:
        a = np.zeros((self.N, self.order, self.order))
        b = self.bits.astype(float)
        a[:, self._eu, self._ev] = b
        a[:, self._ev, self._eu] = b
        return a

    @cached_property
    def sumd2(self) -> np.ndarray:
        return (self.degrees ** 2).sum(axis=1)

    @cached_property
    def delta_max(self) -> np.ndarray:
        return self.degrees.max(axis=1)

    @cached_property
    def delta_min(self) -> np.ndarray:
        return self.degrees.min(axis=1)

    @cached_property
    def no_isolated(self) -> np.ndarray:
        return self.delta_min > 0

    @cached_property
    def _dd(self):
        d = self.degrees
        return d[:, self._eu], d[:, self._ev]

    @cached_property
    def sumt2(self) -> np.ndarray:
        t = np.einsum("kij,kj->ki", self.adj, self.degrees.astype(float))
        return np.rint((t ** 2).sum(axis=1)).astype(np.int64)

    @cached_property
    def variance(self) -> np.ndarray:
        n = self.order
        return self.sumd2 / n - (2 * self.m / n) ** 2

    # distances -----------------------------------------------------------
    @cached_property
    def _bfs(self):
        n = self.order
        full = (1 << n) - 1
        rows = self.rows
        ecc = np.zeros((self.N, n), dtype=np.int64)
        reached = np.zeros((self.N, n), dtype=bool)
        for v in range(n):
            reach = np.full(self.N, 1 << v, dtype=np.int64)
            for _ in range(n - 1):
                ecc[:, v] += reach != full
                grown = reach.copy()
                for u in range(n):
                    grown |= np.where((reach >> u) & 1, rows[:, u], 0)
                reach = grown
            reached[:, v] = reach == full
        return ecc, reached[:, 0]

    @cached_property
    def connected(self) -> np.ndarray:
        return self._bfs[1]

    @cached_property
    def eccentricities(self) -> np.ndarray:
        return self._bfs[0]

    @cached_property
    def radius(self) -> np.ndarray:
        return self._bfs[0].min(axis=1)

    # spectra -------------------------------------------------------------
    @cached_property
    def mu(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.adj)[:, -1]

    @cached_property
    def q(self) -> np.ndarray:
        Q = self.adj.copy()
        idx = np.arange(self.order)
        Q[:, idx, idx] = self.degrees
        return np.linalg.eigvalsh(Q)[:, -1]

    # measures ------------------------------------------------------------
    @cached_property
    def nu(self) -> np.ndarray:
        return self.n * self.sumd2 / (4.0 * self.m ** 2)

    @cached_property
    def R_half(self) -> np.ndarray:
        du, dv = self._dd
        return (self.bits * np.sqrt(du * dv)).sum(axis=1)

    @cached_property
    def R_one(self) -> np.ndarray:
        du, dv = self._dd
        return (self.bits * du * dv).sum(axis=1)

    @cached_property
    def eps(self) -> np.ndarray:
        return self.n * self.R_half / (2.0 * self.m ** 2)

    @cached_property
    def beta(self) -> np.ndarray:
        return self.mu * self.n / (2.0 * self.m)

    @cached_property
    def gamma(self) -> np.ndarray:
        return self.q * self.n / (4.0 * self.m)

    @cached_property
    def alpha_ylt(self) -> np.ndarray:
        return self.n ** 2 * self.sumt2 / (4.0 * self.m ** 2 * self.sumd2)

    @cached_property
    def R(self) -> np.ndarray:
        du, dv = self._dd
        return (self.bits / np.sqrt(np.maximum(du * dv, 1))).sum(axis=1)

    @cached_property
    def H(self) -> np.ndarray:
        du, dv = self._dd
        return (self.bits * 2.0 / np.maximum(du + dv, 1)).sum(axis=1)

    @cached_property
    def _denom(self) -> np.ndarray:
        return self.n - 2 * np.sqrt(self.n - 1.0)

    @cached_property
    def rho_n(self):
        return (self.n - 2 * self.R) / self._denom

    @cached_property
    def nu_n(self):
        return (self.n ** 2 - self.n ** 2 / self.nu) / (self.n - 2.0) ** 2

    @cached_property
    def eps_n(self):
        return (self.n - self.n / self.eps) / self._denom

    @cached_property
    def beta_n(self):
        return (self.n - self.n / self.beta) / self._denom

    # cliques and colourings ----------------------------------------------
    @cached_property
    def _clique_table(self) -> np.ndarray:
        """(2^n, N) booleans: subset S induces a complete graph."""
        em = self._emask[:, None]
        return (self.masks[None, :] & em) == em

    @cached_property
    def _indep_table(self) -> np.ndarray:
        return (self.masks[None, :] & self._emask[:, None]) == 0

    @cached_property
    def counts(self) -> np.ndarray:
        """(N, n+1): column h counts h-cliques; column 0 is 1."""
        table = self._clique_table
        out = np.zeros((self.N, self.order + 1), dtype=np.int64)
        for h in range(self.order + 1):
            out[:, h] = table[self._size == h].sum(axis=0)
        return out

    @cached_property
    def omega(self) -> np.ndarray:
        present = self.counts > 0
        return (present * np.arange(self.order + 1)).max(axis=1)

    @property
    def t(self) -> np.ndarray:
        return self.counts[:, 3] if self.order >= 3 else np.zeros(self.N, dtype=np.int64)

    @property
    def c4(self) -> np.ndarray:
        return self.counts[:, 4] if self.order >= 4 else np.zeros(self.N, dtype=np.int64)

    @cached_property
    def chi(self) -> np.ndarray:
        indep = self._indep_table
        dp = np.zeros((1 << self.order, self.N), dtype=np.int8)
        best = None
        current = 0
        for S, I in self._pairs:
            if S != current:
                if best is not None:
                    dp[current] = best
                best = np.full(self.N, 127, dtype=np.int8)
                current = S
            np.minimum(best, np.where(indep[I], dp[S ^ I] + 1, 127).astype(np.int8), out=best)
        if best is not None:
            dp[current] = best
        return dp[-1].astype(np.int64)

    # degree partition ------------------------------------------------------
    @cached_property
    def _sorted_desc(self) -> np.ndarray:
        return -np.sort(-self.degrees, axis=1)

    @cached_property
    def phi(self) -> np.ndarray:
        n = self.order
        ds = self._sorted_desc
        pos = np.zeros(self.N, dtype=np.int64)
        parts = np.zeros(self.N, dtype=np.int64)
        rowsel = np.arange(self.N)
        for _ in range(n):
            active = pos < n
            lead = ds[rowsel, np.minimum(pos, n - 1)]
            pos = np.where(active, pos + n - lead, pos)
            parts += active
        return parts

    @cached_property
    def dstar_phi(self) -> np.ndarray:
        d = self.degrees.astype(float)
        n = self.order
        table = np.stack([((d ** r).sum(axis=1) / n) ** (1.0 / r) for r in range(1, n + 1)], axis=1)
        return table[np.arange(self.N), self.phi - 1]

    @cached_property
    def turan_m(self) -> np.ndarray:
        return self._turan[self.omega]

    @cached_property
    def lam(self) -> np.ndarray:
        # degree-multiset match only, a superset of the isomorphic copies;
        # the exact path settles membership with an isomorphism test
        out = np.full(self.N, np.nan)
        for _, h, lam in LAMBDA_FIXTURES:
            if h.n != self.order:
                continue
            ref = np.array(sorted(h.degrees, reverse=True))
            hit = (self._sorted_desc == ref).all(axis=1)
            out[hit] = lam
        return out

    @property
    def has_lambda(self) -> np.ndarray:
        return ~np.isnan(self.lam)
