from itertools import combinations

import pytest

from irreg.families import (ARITY, FamilySpec, complete_multipartite, dutch_windmill, figure1,
                            figure2, generate, petersen, star, turan, turan_edge_count, wheel)


def test_spec_parsing_round_trip():
    spec = FamilySpec.parse("dutch_windmill:5,4")
    assert spec == FamilySpec("dutch_windmill", (5, 4))
    assert str(spec) == "dutch_windmill:5,4"
    assert str(FamilySpec.parse("petersen")) == "petersen"


@pytest.mark.parametrize("text", ["nope:3", "star", "star:1,2", "star:x", "turan:5,0",
                                  "complete_multipartite"])
def test_bad_specs(text):
    with pytest.raises(ValueError):
        FamilySpec.parse(text)


@pytest.mark.parametrize("n, r", [(n, r) for n in range(1, 11) for r in range(1, n + 1)])
def test_turan_edge_count_by_direct_count(n, r):
    g = turan(n, r)
    parts = sorted({frozenset(v for v in range(n) if not g.has_edge(u, v)) for u in range(n)},
                   key=len)
    # the non-neighbourhoods (with self) are the parts, and they are balanced
    assert len(parts) == r
    assert max(map(len, parts)) - min(map(len, parts)) <= 1
    direct = sum(1 for u, v in combinations(range(n), 2)
                 if not any(u in p and v in p for p in parts))
    assert g.m == turan_edge_count(n, r) == direct


def test_turan_7_3():
    assert turan(7, 3).m == 16


def test_star_and_wheel():
    assert star(5).degrees == (4, 1, 1, 1, 1)
    w = wheel(5)
    assert w.n == 6 and w.m == 10 and w.degrees[0] == 5


def test_dutch_windmill_shape():
    g = dutch_windmill(5, 4)
    assert (g.n, g.m) == (16, 20)
    assert sorted(g.degrees, reverse=True) == [10] + [2] * 15
    assert g.is_connected()


def test_petersen():
    g = petersen()
    assert (g.n, g.m) == (10, 15) and g.is_regular() and g.degrees[0] == 3


def test_figure_graphs():
    assert sorted(figure1().degrees, reverse=True) == [5, 5, 2, 2, 2, 1, 1]
    g = figure2()
    assert (g.n, g.m) == (7, 12)


def test_complete_multipartite():
    g = complete_multipartite(1, 1, 2)
    assert (g.n, g.m) == (4, 5)


@pytest.mark.parametrize("name", sorted(ARITY))
def test_every_family_generates(name):
    params = {0: "", 1: ":5", 2: ":4,3", None: ":2,2,1"}[ARITY[name]]
    g = generate(name + params)
    assert g.n >= 1
