from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from turantools.counting import (
    all_pattern_classes,
    are_isomorphic,
    automorphism_count,
    count_copies,
    count_copies_bruteforce,
    count_family,
    labeled_copies,
    strip_isolated,
)
from turantools.graphs import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph_from_mask,
    make_graph,
    matching_graph,
    pair_count,
    path_graph,
    star_graph,
)


@st.composite
def graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << pair_count(n)) - 1))
    return graph_from_mask(n, mask)


def test_strip_isolated():
    g = disjoint_union(complete_graph(3), empty_graph(2))
    assert strip_isolated(g) == complete_graph(3)
    assert strip_isolated(empty_graph(5)) == empty_graph(0)
    assert strip_isolated(path_graph(3)) == path_graph(3)


def test_automorphism_counts():
    assert automorphism_count(complete_graph(3)) == 6
    assert automorphism_count(path_graph(3)) == 2
    assert automorphism_count(cycle_graph(4)) == 8
    assert automorphism_count(matching_graph(4)) == 8
    assert automorphism_count(star_graph(4)) == 24


def test_automorphism_order_cap():
    with pytest.raises(ValueError):
        automorphism_count(empty_graph(11))


def test_count_copies_examples():
    assert count_copies(complete_graph(4), complete_graph(3)) == 4
    assert count_copies(complete_graph(5), complete_graph(3)) == 10
    assert count_copies(cycle_graph(4), path_graph(3)) == 4
    tri_pendant = make_graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert count_copies(tri_pendant, matching_graph(4)) == 1


def test_count_copies_larger_pattern_is_zero():
    assert count_copies(complete_graph(3), complete_graph(4)) == 0


def test_count_copies_k2_is_edge_count():
    g = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)])
    assert count_copies(g, complete_graph(2)) == g.edge_count()


def test_count_copies_self_is_one():
    for g in (complete_graph(4), cycle_graph(5), path_graph(4)):
        assert count_copies(g, g) == 1


def test_count_family_examples():
    k4 = complete_graph(4)
    assert count_family(k4, [complete_graph(3), cycle_graph(4)]) == 7
    from turantools.families import tree_classes

    assert count_family(path_graph(4), list(tree_classes(4))) == 1
    assert count_family(empty_graph(5), [complete_graph(3)]) == 0


def test_count_family_rejects_duplicates():
    with pytest.raises(ValueError, match="non-isomorphic"):
        count_family(complete_graph(4), [path_graph(3), star_graph(2)])


@given(graphs(max_n=6), st.sampled_from(range(10)))
@settings(max_examples=200, deadline=None)
def test_bruteforce_equivalence(host, pattern_idx):
    patterns = [p for p in all_pattern_classes(4)]
    pattern = patterns[pattern_idx % len(patterns)]
    assert count_copies(host, pattern) == count_copies_bruteforce(host, pattern)


def test_bruteforce_equivalence_exhaustive_small():
    # every host on 4 vertices against every pattern class on <= 4 vertices
    patterns = all_pattern_classes(4)
    for mask in range(1 << pair_count(4)):
        host = graph_from_mask(4, mask)
        for pattern in patterns:
            assert count_copies(host, pattern) == count_copies_bruteforce(
                host, pattern
            )


@given(graphs(min_n=1, max_n=6))
@settings(max_examples=100, deadline=None)
def test_count_invariant_under_relabeling(host):
    pattern = path_graph(3)
    base = count_copies(host, pattern)
    for perm in list(permutations(range(host.n)))[:12]:
        assert count_copies(host.relabel(perm), pattern) == base


def test_labeled_copies_match_counts():
    # containment counting over placements equals the embeddings route
    tri = complete_graph(3)
    masks = labeled_copies(5, tri)
    assert len(masks) == 10
    host = make_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    hmask = host.edge_mask()
    assert sum(1 for p in masks if p & hmask == p) == count_copies(host, tri)


def test_labeled_copies_empty_pattern():
    assert labeled_copies(4, empty_graph(3)) == (0,)


def test_are_isomorphic():
    assert are_isomorphic(cycle_graph(3), complete_graph(3))
    assert not are_isomorphic(path_graph(4), star_graph(3))
    assert are_isomorphic(empty_graph(0), empty_graph(0))


def test_pattern_classes_small():
    # connected and disconnected patterns on <= 4 vertices, no isolated vertices
    classes = all_pattern_classes(4)
    assert len(classes) == 10
    assert all(g.min_degree() >= 1 for g in classes)
