from __future__ import annotations

from fractions import Fraction

import networkx as nx
import pytest

from matchgames.errors import InputError
from matchgames.exact.fractional import (
    FractionalMatching,
    explore_half_integral,
    fpm_program,
    fractional_pm,
    triangle_avoiding_fpm,
)
from matchgames.graph import Graph, HallViolator, double_cover, l_perfect_matching, maximum_matching

HALF = Fraction(1, 2)


def connected_atlas(max_nodes):
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 0 < n <= max_nodes and nx.is_connected(h):
            yield Graph.from_edges(n, h.edges())


def test_odd_cycle_has_only_the_half_matching():
    g = Graph.cycle(5)
    f = triangle_avoiding_fpm(g)
    assert f is not None
    assert set(f.weights.values()) == {HALF}
    assert f.scale == 2
    assert not f.is_integral()


def test_triangle_has_fpm_but_none_avoiding_triangles():
    k3 = Graph.complete(3)
    f = fractional_pm(k3)
    assert f is not None
    assert f.triangle_excess() == (0, 1, 2)
    assert triangle_avoiding_fpm(k3) is None


def test_perfect_matching_avoids_triangles():
    g = Graph.complete(4)
    matching = maximum_matching(g)
    f = FractionalMatching(g, {e: 1 for e in matching.edges})
    assert f.is_integral()
    assert f.avoids_triangles()
    assert triangle_avoiding_fpm(g) is not None


def test_fpm_iff_double_cover_l_matchable():
    for g in connected_atlas(7):
        f = fractional_pm(g)
        covered = not isinstance(l_perfect_matching(double_cover(g)), HallViolator)
        assert (f is not None) == covered


def test_perfect_matching_implies_triangle_avoiding_fpm():
    for g in connected_atlas(6):
        if maximum_matching(g).is_perfect(g.n):
            assert triangle_avoiding_fpm(g) is not None


def test_half_integral_exploration_finds_valid_matchings():
    for g in connected_atlas(6):
        half = explore_half_integral(g)
        if half is None:
            continue
        assert half.avoids_triangles()
        assert set(half.weights.values()) <= {Fraction(0), HALF, Fraction(1)}
        assert triangle_avoiding_fpm(g) is not None


def test_fractional_matching_validation():
    g = Graph.path(3)
    with pytest.raises(InputError):
        FractionalMatching(g, {(0, 1): 1, (1, 2): 1})
    with pytest.raises(InputError):
        FractionalMatching(g, {(0, 2): 1})
    with pytest.raises(InputError):
        FractionalMatching(Graph.cycle(4), {(0, 1): 2, (1, 2): -1, (2, 3): 2, (0, 3): -1})


def test_fractional_matching_text():
    g = Graph.cycle(5)
    f = triangle_avoiding_fpm(g)
    text = f.to_text()
    assert text.splitlines()[0] == "fpm 5"
    assert "0 1 1/2" in text
    assert FractionalMatching.from_text(g, text).weights == f.weights
    with pytest.raises(InputError):
        FractionalMatching.from_text(Graph.cycle(6), text)


def test_fpm_program_shape():
    g = Graph.complete(4)
    assert fpm_program(g).num_vars == 6
    assert len(fpm_program(g).constraints) == 4
    assert len(fpm_program(g, avoid_triangles=True).constraints) == 8
