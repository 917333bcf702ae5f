"""Simple undirected graphs stored as row bitsets.

Vertices are ``0..n-1``. Row ``i`` is a Python int whose bit ``j`` is set
when ``i`` and ``j`` are adjacent, so neighbourhood intersection is a single
``&``. Graphs are immutable and hashable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from .errors import GraphParseError, NotConnectedError, UnsupportedSizeError

GRAPH6_PARSE_CAP = 100_000
ENUMERATION_CAP = 8


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    degrees: tuple[int, ...] = field(init=False, repr=False, compare=False)
    m: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError("rows must have exactly n entries")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full or (row >> i) & 1:
                raise ValueError(f"row {i} has out-of-range bits or a self-loop")
            rest = row
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if not (self.rows[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
                rest ^= low
        degs = tuple(bin(r).count("1") for r in self.rows)
        object.__setattr__(self, "degrees", degs)
        object.__setattr__(self, "m", sum(degs) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> "Graph":
        """Build the graph whose edge ``k`` (in :func:`edge_order`) is bit ``k`` of ``mask``."""
        rows = [0] * n
        for k, (u, v) in enumerate(edge_order(n)):
            if (mask >> k) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def edge_mask(self) -> int:
        mask = 0
        for k, (u, v) in enumerate(edge_order(self.n)):
            if (self.rows[u] >> v) & 1:
                mask |= 1 << k
        return mask

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n), dtype=float)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def is_regular(self) -> bool:
        return len(set(self.degrees)) <= 1

    def isolated_vertices(self) -> list[int]:
        return [v for v, d in enumerate(self.degrees) if d == 0]

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeStats:
    n: int
    m: int
    delta_max: int
    delta_min: int
    mean_degree: Fraction
    power_sums: dict[int, int]
    neighbor_degree_sums: tuple[int, ...]


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


_EDGE_ORDER_CACHE: dict[int, list[tuple[int, int]]] = {}


def edge_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 order: column by column of the upper triangle."""
    try:
        return _EDGE_ORDER_CACHE[n]
    except KeyError:
        order = [(i, j) for j in range(1, n) for i in range(j)]
        _EDGE_ORDER_CACHE[n] = order
        return order


# graph6 -----------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise UnsupportedSizeError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph) -> str:
    if g.n < 1:
        raise UnsupportedSizeError("graph6 encoding needs n >= 1")
    if g.n > GRAPH6_PARSE_CAP:
        raise UnsupportedSizeError(f"n={g.n} exceeds cap {GRAPH6_PARSE_CAP}")
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str, cap: int = GRAPH6_PARSE_CAP) -> Graph:
    s = text.strip()
    offset = 0
    if s.startswith(">>graph6<<"):
        offset = 10
    data = s[offset:]
    for k, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"illegal byte {ch!r}", offset + k)
    if not data:
        raise GraphParseError("empty graph6 string", offset)
    if data[0] == "~":
        if len(data) > 1 and data[1] == "~":
            width, start = 6, 2
        else:
            width, start = 3, 1
        if len(data) < start + width:
            raise GraphParseError("truncated size header", offset + len(data))
        n = 0
        for ch in data[start:start + width]:
            n = (n << 6) | (ord(ch) - 63)
        pos = start + width
    else:
        n = ord(data[0]) - 63
        pos = 1
    if n > cap:
        raise UnsupportedSizeError(f"n={n} exceeds parse cap {cap}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise GraphParseError(
            f"truncated bit field: need {need} bytes, got {len(body)}", offset + len(data))
    if len(body) > need:
        raise GraphParseError("trailing bytes after bit field", offset + pos + need)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need and nbits % 6:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise GraphParseError("nonzero padding bits", offset + pos + need - 1)
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for every non-blank line."""
    for lineno, line in enumerate(lines, 1):
        if line.strip():
            try:
                yield lineno, parse_graph6(line)
            except GraphParseError as exc:
                raise GraphParseError(exc.reason, exc.offset, lineno) from None


# edge lists -------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    ids: dict[int, int] = {}
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise GraphParseError(f"expected two vertex ids, got {len(toks)} tokens", line=lineno)
        try:
            a, b = (int(t) for t in toks)
        except ValueError:
            raise GraphParseError(f"non-integer token in {line!r}", line=lineno) from None
        if a < 0 or b < 0:
            raise GraphParseError("negative vertex id", line=lineno)
        if a == b:
            raise GraphParseError(f"self-loop on vertex {a}", line=lineno)
        u = ids.setdefault(a, len(ids))
        v = ids.setdefault(b, len(ids))
        edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(len(ids), sorted(edges))


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


# enumeration ------------------------------------------------------------

def enumerate_labeled_graphs(
        n: int, filter: Callable[[Graph], bool] | None = None) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, by increasing edge bitmask."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise UnsupportedSizeError(f"labeled enumeration supports 1 <= n <= {ENUMERATION_CAP}")
    for mask in range(1 << (n * (n - 1) // 2)):
        g = Graph.from_edge_mask(n, mask)
        if filter is None or filter(g):
            yield g


# derived graphs and distances --------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.rows)))


def eccentricities(g: Graph) -> list[int]:
    if not g.is_connected():
        raise NotConnectedError("eccentricity is undefined on a disconnected graph")
    ecc = []
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in _bits(g.rows[u]):
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        ecc.append(max(dist))
    return ecc


def radius(g: Graph) -> tuple[int, list[int]]:
    """Radius and eccentricity vector of a connected graph."""
    ecc = eccentricities(g)
    for d, e in zip(g.degrees, ecc):
        # a vertex at distance e from something has e-1 non-neighbours on that path
        assert d <= g.n - e, "degree/eccentricity bound broken"
    return min(ecc), ecc


def degree_stats(g: Graph, powers: Sequence[int] = (1, 2)) -> DegreeStats:
    if any(r < 1 for r in powers):
        raise ValueError("power sums need r >= 1")
    t = [0] * g.n
    for u, v in g.edges():
        t[u] += g.degrees[v]
        t[v] += g.degrees[u]
    sums = {r: sum(d ** r for d in g.degrees) for r in sorted(set(powers) | {1, 2})}
    return DegreeStats(
        n=g.n,
        m=g.m,
        delta_max=g.max_degree,
        delta_min=g.min_degree,
        mean_degree=Fraction(2 * g.m, g.n) if g.n else Fraction(0),
        power_sums=sums,
        neighbor_degree_sums=tuple(t),
    )


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test with degree pruning; meant for n <= 10."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    n = g.n
    order = sorted(range(n), key=lambda v: -g.degrees[v])
    image = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or h.degrees[w] != g.degrees[v]:
                continue
            if all(g.has_edge(v, order[i]) == h.has_edge(w, image[order[i]]) for i in range(k)):
                image[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
        return False

    return extend(0)
