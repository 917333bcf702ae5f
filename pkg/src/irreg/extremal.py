"""Exact clique, colouring and degree-partition computations for small graphs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, UnsupportedSizeError
from .graph import Graph, _bits

CLIQUE_CAP = 64
COLORING_CAP = 32
COUNT_CAP = 40


@dataclass(frozen=True)
class CliqueProfile:
    omega: int
    counts: tuple[int, ...]  # counts[h - 1] = number of h-cliques, h = 1..omega

    def c(self, h: int) -> int:
        if h < 1:
            raise ValueError("clique sizes start at 1")
        return self.counts[h - 1] if h <= len(self.counts) else 0


@dataclass(frozen=True)
class PhiResult:
    phi: int
    partition: tuple[tuple[int, ...], ...]


# maximum clique ---------------------------------------------------------

def _colour_bound(g: Graph, cand: int) -> list[tuple[int, int]]:
    """Greedy colour classes over ``cand``; returns (vertex, colour) in ascending colour."""
    order = []
    colour = 0
    rest = cand
    while rest:
        colour += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~g.rows[v] & ~low
            rest &= ~low
            order.append((v, colour))
    return order


def maximum_clique(g: Graph) -> list[int]:
    """A maximum clique, by branch and bound with greedy-colouring bounds (Tomita style)."""
    if g.n > CLIQUE_CAP:
        raise UnsupportedSizeError(f"n={g.n} exceeds clique cap {CLIQUE_CAP}")
    if g.n == 0:
        return []
    best: list[int] = []

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        order = _colour_bound(g, cand)
        for v, colour in reversed(order):
            if len(current) + colour <= len(best):
                return
            current.append(v)
            sub = cand & g.rows[v]
            if sub:
                expand(current, sub)
            elif len(current) > len(best):
                best = current.copy()
            current.pop()
            cand &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    _assert_clique(g, best)
    return sorted(best)


def _assert_clique(g: Graph, vs: Sequence[int]) -> None:
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            assert g.has_edge(u, v), "clique witness is not a clique"


def clique_number(g: Graph) -> int:
    return len(maximum_clique(g))


# chromatic number -------------------------------------------------------

def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    colour = [-1] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if colour[u] < 0),
                key=lambda u: (len(sat[u]), g.degrees[u], -u))
        c = 0
        while c in sat[v]:
            c += 1
        colour[v] = c
        for w in _bits(g.rows[v]):
            sat[w].add(c)
    return colour


def optimal_coloring(g: Graph) -> list[int]:
    """A minimum proper colouring by DSATUR-ordered branch and bound."""
    n = g.n
    if n > COLORING_CAP:
        raise UnsupportedSizeError(f"n={n} exceeds colouring cap {COLORING_CAP}")
    if n == 0:
        return []
    clique = maximum_clique(g)
    lower = len(clique)
    best = _dsatur_greedy(g)
    best_k = max(best) + 1
    if best_k == lower:
        _assert_proper(g, best)
        return best

    colour = [-1] * n
    # fixing the clique's colours removes colour-permutation symmetry
    for c, v in enumerate(clique):
        colour[v] = c
    nbr_colours = [0] * n  # bitmask of colours used by neighbours
    for v in clique:
        for w in _bits(g.rows[v]):
            nbr_colours[w] |= 1 << colour[v]

    def search(coloured: int, used: int) -> bool:
        nonlocal best, best_k
        if coloured == n:
            if used < best_k:
                best = colour.copy()
                best_k = used
            return best_k == lower
        v = -1
        key = (-1, -1)
        for u in range(n):
            if colour[u] < 0:
                k = (bin(nbr_colours[u]).count("1"), g.degrees[u])
                if k > key:
                    key, v = k, u
        for c in range(used + 1):
            if max(used, c + 1) >= best_k:
                break
            if (nbr_colours[v] >> c) & 1:
                continue
            colour[v] = c
            saved = []
            for w in _bits(g.rows[v]):
                saved.append((w, nbr_colours[w]))
                nbr_colours[w] |= 1 << c
            if search(coloured + 1, max(used, c + 1)):
                return True
            for w, old in saved:
                nbr_colours[w] = old
            colour[v] = -1
        return False

    search(len(clique), lower)
    _assert_proper(g, best)
    return best


def _assert_proper(g: Graph, colour: Sequence[int]) -> None:
    for u, v in g.edges():
        assert colour[u] != colour[v], "colouring witness is not proper"


def chromatic_number(g: Graph) -> int:
    col = optimal_coloring(g)
    return max(col) + 1 if col else 0


# clique counts ----------------------------------------------------------

def clique_counts(g: Graph, h_max: int | None = None) -> CliqueProfile:
    """Number of h-cliques for h = 1..omega (or up to ``h_max``)."""
    if g.n > COUNT_CAP:
        raise UnsupportedSizeError(f"n={g.n} exceeds clique-count cap {COUNT_CAP}")
    counts = [0] * (g.n + 1)
    limit = g.n if h_max is None else h_max
    higher = [row & ~((1 << (v + 1)) - 1) for v, row in enumerate(g.rows)]

    def walk(size: int, cand: int) -> None:
        counts[size] += 1
        if size == limit:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            walk(size + 1, cand & higher[v])

    for v in range(g.n):
        walk(1, higher[v])
    omega = max((h for h in range(1, g.n + 1) if counts[h]), default=0)
    top = omega if h_max is None else min(omega, h_max)
    return CliqueProfile(omega, tuple(counts[1:top + 1]))


def triangle_count(g: Graph) -> int:
    return clique_counts(g, 3).c(3)


# degree partition parameter ---------------------------------------------

def _check_sequence(degrees: Sequence[int]) -> int:
    n = len(degrees)
    if n < 1:
        raise DomainError("phi needs at least one value")
    for i, a in enumerate(degrees):
        if not 0 <= a <= n - 1:
            raise DomainError(f"value {a} at position {i} outside 0..{n - 1}")
    return n


def phi(degrees: Sequence[int]) -> PhiResult:
    """Smallest r with a partition V_1..V_r such that d(v) <= n - |V_i| for v in V_i.

    Greedy: take vertices by non-increasing degree; the first vertex of each
    part fixes its size at n - d.
    """
    n = _check_sequence(degrees)
    order = sorted(range(n), key=lambda v: -degrees[v])
    parts = []
    pos = 0
    while pos < n:
        size = n - degrees[order[pos]]
        parts.append(tuple(order[pos:pos + size]))
        pos += size
    for part in parts:
        assert all(degrees[v] <= n - len(part) for v in part)
    return PhiResult(len(parts), tuple(parts))


def d_star(degrees: Sequence[int], r: int) -> float:
    """r-th power mean of the degree sequence."""
    if r < 1:
        raise DomainError("d_star needs r >= 1")
    n = len(degrees)
    return (sum(d ** r for d in degrees) / n) ** (1.0 / r)


def phi_lower_chain(degrees: Sequence[int], r_max: int) -> list[float | None]:
    """``n / (n - d*_r)`` for r = 1..r_max; ``None`` marks a degenerate entry (d*_r >= n)."""
    n = _check_sequence(degrees)
    out: list[float | None] = []
    for r in range(1, r_max + 1):
        if r == 1:
            ds = Fraction(sum(degrees), n)
            out.append(float(Fraction(n) / (n - ds)) if ds < n else None)
            continue
        ds = d_star(degrees, r)
        out.append(n / (n - ds) if ds < n else None)
    return out


def phi_regular(n: int, d: int) -> int:
    """Closed form for a d-regular sequence: ceil(n / (n - d))."""
    return math.ceil(Fraction(n, n - d))
