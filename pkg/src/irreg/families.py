"""Named graph families used throughout the examples and tests.

Family specs are written ``name:p1,p2,...`` (e.g. ``dutch_windmill:5,4``);
families without parameters are just the name (``petersen``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph

# Drawn figures, relabelled 0..6 from the 1..7 labels of the drawings.
FIGURE1_EDGES = [(1, 2), (1, 3), (2, 3), (1, 6), (2, 7), (1, 4), (1, 5), (2, 4), (2, 5)]
FIGURE2_EDGES = [(1, 4), (1, 2), (1, 3), (1, 5), (4, 2), (2, 3), (3, 5),
                 (4, 6), (2, 6), (3, 7), (5, 7), (6, 7)]

ARITY = {
    "star": 1, "complete": 1, "complete_bipartite": 2, "complete_multipartite": None,
    "turan": 2, "path": 1, "cycle": 1, "wheel": 1, "dutch_windmill": 2,
    "petersen": 0, "k33": 0, "k45": 0, "figure1": 0, "figure2": 0,
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in ARITY:
            raise ValueError(f"unknown family {self.family!r}; known: {', '.join(sorted(ARITY))}")
        want = ARITY[self.family]
        if want is None:
            if not self.params:
                raise ValueError("complete_multipartite needs at least one part size")
        elif len(self.params) != want:
            raise ValueError(f"{self.family} takes {want} parameter(s), got {len(self.params)}")
        if any(p < 1 for p in self.params):
            raise ValueError(f"{self.family}: parameters must be positive")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        name, _, args = text.strip().partition(":")
        try:
            params = tuple(int(a) for a in args.split(",")) if args else ()
        except ValueError:
            raise ValueError(f"bad family parameters in {text!r}") from None
        return cls(name, params)

    def __str__(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}:{','.join(map(str, self.params))}"


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_multipartite(*parts: int) -> Graph:
    label = []
    for k, size in enumerate(parts):
        label += [k] * size
    n = len(label)
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]])


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)


def star(n: int) -> Graph:
    """K_{1,n-1}: ``n`` vertices in total, vertex 0 is the centre."""
    if n < 2:
        raise ValueError("a star needs n >= 2")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def turan(n: int, r: int) -> Graph:
    if r > n:
        raise ValueError(f"turan graph needs r <= n (got n={n}, r={r})")
    q, extra = divmod(n, r)
    return complete_multipartite(*([q + 1] * extra + [q] * (r - extra)))


def turan_edge_count(n: int, r: int) -> int:
    q, extra = divmod(n, r)
    sizes = [q + 1] * extra + [q] * (r - extra)
    return (n * n - sum(s * s for s in sizes)) // 2


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle length must be at least 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(k: int) -> Graph:
    """Hub 0 joined to every vertex of a k-cycle; n = k + 1."""
    if k < 3:
        raise ValueError("wheel rim must have at least 3 vertices")
    rim = [(1 + i, 1 + (i + 1) % k) for i in range(k)]
    return Graph.from_edges(k + 1, rim + [(0, v) for v in range(1, k + 1)])


def dutch_windmill(k: int, c: int) -> Graph:
    """``k`` copies of the cycle C_c glued at the single vertex 0."""
    if c < 3:
        raise ValueError("cycle length must be at least 3")
    edges = []
    nxt = 1
    for _ in range(k):
        ring = [0] + list(range(nxt, nxt + c - 1))
        nxt += c - 1
        edges += [(ring[i], ring[(i + 1) % c]) for i in range(c)]
    return Graph.from_edges(nxt, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def figure1() -> Graph:
    return Graph.from_edges(7, [(u - 1, v - 1) for u, v in FIGURE1_EDGES])


def figure2() -> Graph:
    return Graph.from_edges(7, [(u - 1, v - 1) for u, v in FIGURE2_EDGES])


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    p = spec.params
    f = spec.family
    if f == "star":
        return star(*p)
    if f == "complete":
        return complete(*p)
    if f in ("complete_bipartite", "complete_multipartite"):
        return complete_multipartite(*p)
    if f == "turan":
        return turan(*p)
    if f == "path":
        return path(*p)
    if f == "cycle":
        return cycle(*p)
    if f == "wheel":
        return wheel(*p)
    if f == "dutch_windmill":
        return dutch_windmill(*p)
    if f == "petersen":
        return petersen()
    if f == "k33":
        return complete_bipartite(3, 3)
    if f == "k45":
        return complete_bipartite(4, 5)
    if f == "figure1":
        return figure1()
    return figure2()
