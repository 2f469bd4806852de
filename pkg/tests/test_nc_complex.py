import itertools

import pytest
from hypothesis import given, settings

import oracles
import randtrees
from conftest import get_tree, SUITE
from treestab.nc_complex import (
    arcs,
    boundary_arcs,
    crossing,
    crossing_by_regions,
    facets,
    flip_neighbors,
)
from treestab.tree_core import EmbeddedTree

FACET_COUNTS = {"a2": 5, "star3": 1, "subseg": 42, "cyc3": 14,
                "deg45": 14, "caterpillar4": 14, "big8": 1074}


def test_a2_arcs():
    tree = get_tree("a2")
    ds = arcs(tree)
    assert len(ds) == 10
    assert len(boundary_arcs(tree)) == 5
    # boundary arcs pair cyclically adjacent leaves
    for d in boundary_arcs(tree):
        assert d.is_boundary


def test_crossing_definitions_agree(small_tree):
    ds = arcs(small_tree)
    for d1, d2 in itertools.combinations(ds, 2):
        assert crossing(d1, d2) == crossing_by_regions(d1, d2)
        assert crossing(d1, d2) == crossing(d2, d1)
    for d in ds:
        assert not crossing(d, d)


def test_boundary_arcs_cross_nothing(small_tree):
    ds = arcs(small_tree)
    for b in boundary_arcs(small_tree):
        assert not any(crossing(b, d) for d in ds)


def test_facet_counts(suite_tree):
    name = [n for n in SUITE if get_tree(n) is suite_tree][0]
    assert len(facets(suite_tree)) == FACET_COUNTS[name]


def test_facet_purity(suite_tree):
    """Every facet has the same size: leaves + interior - 1, of which
    interior - 1 arcs are colored."""
    tree = suite_tree
    L = len(tree.leaves)
    I = len(tree.interior_vertices)
    for f in facets(tree):
        assert len(f.arcs) == L + I - 1
        assert len(f.colored) == I - 1
        assert len(f.boundary) == L


def test_facets_are_noncrossing_and_maximal(small_tree):
    all_ds = arcs(small_tree)
    for f in facets(small_tree):
        members = set(f.arcs)
        for d1, d2 in itertools.combinations(f.arcs, 2):
            assert not crossing(d1, d2)
        for d in all_ds:
            if d not in members:
                assert any(crossing(d, m) for m in f.arcs), \
                    "facet %d is not maximal" % f.index


def test_brute_force_facets_a2():
    tree = get_tree("a2")
    brute = oracles.brute_facets(tree, arcs(tree), crossing)
    assert brute == {frozenset(f.arcs) for f in facets(tree)}


def test_brute_force_facets_star3():
    tree = get_tree("star3")
    brute = oracles.brute_facets(tree, arcs(tree), crossing)
    assert brute == {frozenset(f.arcs) for f in facets(tree)}


def test_every_corner_marked_once(suite_tree):
    tree = suite_tree
    corners = set(tree.corners)
    for f in facets(tree):
        marked = [c for d in f.arcs for c in f.marks[d]]
        assert sorted(marked) == sorted(corners)
        for d in f.boundary:
            assert len(f.marks[d]) == 1
        for d in f.colored:
            assert len(f.marks[d]) == 2


# frozen colors and segments for the five a2 facets, keyed by the
# colored arcs' leaf pairs
A2_FACETS = {
    frozenset({("l3", "l2"), ("l4", "l2")}):
        {("l3", "l2"): ("green", ("v1", "v2")),
         ("l4", "l2"): ("green", ("v2", "v3"))},
    frozenset({("l3", "l5"), ("l3", "l2")}):
        {("l3", "l5"): ("red", ("v2", "v3")),
         ("l3", "l2"): ("green", ("v1", "v2"))},
    frozenset({("l1", "l4"), ("l4", "l2")}):
        {("l1", "l4"): ("red", ("v1", "v2")),
         ("l4", "l2"): ("green", ("v1", "v2", "v3"))},
    frozenset({("l1", "l4"), ("l1", "l5")}):
        {("l1", "l4"): ("green", ("v2", "v3")),
         ("l1", "l5"): ("red", ("v1", "v2", "v3"))},
    frozenset({("l1", "l5"), ("l3", "l5")}):
        {("l1", "l5"): ("red", ("v1", "v2")),
         ("l3", "l5"): ("red", ("v2", "v3"))},
}


def test_a2_colors_and_segments():
    tree = get_tree("a2")
    seen = set()
    for f in facets(tree):
        key = frozenset(d.leaves for d in f.colored)
        assert key in A2_FACETS, key
        seen.add(key)
        for d in f.colored:
            color, seg = A2_FACETS[key][d.leaves]
            assert f.color[d] == color
            assert f.segment[d].vertices == seg
    assert len(seen) == 5


def test_paper_facet_marks():
    """The worked facet {l1~l4, l1~l5}: l1~l5 hugs three corners on its
    big side chain and takes the largest one."""
    tree = get_tree("a2")
    target = None
    for f in facets(tree):
        if frozenset(d.leaves for d in f.colored) == \
                frozenset({("l1", "l4"), ("l1", "l5")}):
            target = f
    assert target is not None
    marks = {d.leaves: set(target.marks[d]) for d in target.colored}
    assert marks[("l1", "l4")] == {("v3", 1), ("v2", 3)}
    assert marks[("l1", "l5")] == {("v1", 0), ("v3", 3)}


def test_supporting_arcs_chain():
    tree = get_tree("a2")
    for f in facets(tree):
        for d in f.colored:
            support = f.supporting_arcs(d)
            assert len(support) == 2
            for s in support:
                assert s in f.arcs


def test_flip_regularity(small_tree):
    """Each colored arc of a facet flips to exactly one neighbor."""
    fs = facets(small_tree)
    I = len(small_tree.interior_vertices)
    for f in fs:
        assert len(flip_neighbors(f, fs)) == I - 1


def test_a2_flip_graph_is_pentagon():
    tree = get_tree("a2")
    fs = facets(tree)
    degs = sorted(len(flip_neighbors(f, fs)) for f in fs)
    assert degs == [2, 2, 2, 2, 2]
    # connected 2-regular on five nodes = the pentagon
    seen = {fs[0]}
    frontier = [fs[0]]
    while frontier:
        f = frontier.pop()
        for g in flip_neighbors(f, fs):
            if g not in seen:
                seen.add(g)
                frontier.append(g)
    assert len(seen) == 5


@settings(max_examples=15, deadline=None)
@given(randtrees.rotations())
def test_random_tree_facets(rotation):
    tree = EmbeddedTree(rotation)
    fs = facets(tree)
    L = len(tree.leaves)
    I = len(tree.interior_vertices)
    for f in fs:
        assert len(f.arcs) == L + I - 1
    corners = sorted(tree.corners)
    for f in fs[:10]:
        marked = sorted(c for d in f.arcs for c in f.marks[d])
        assert marked == corners
