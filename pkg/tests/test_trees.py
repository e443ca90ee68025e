from collections import Counter, defaultdict

import pytest

from oracles import swap_orbit
from wcatalan.catalan import BoundExceededError, catalan, dyck_paths, weighted_catalan_dp
from wcatalan.trees import (LEAF, DecompositionError, Node, OrbitWeightError, canonical_shape,
                            census_summary, enumerate_shapes, enumerate_trees, left_depths,
                            make_shape, orbit_census, orbit_decomposition_check, orbit_size,
                            parens_to_shape, reduced_weight, shape_to_parens, shape_to_tree,
                            size_histogram, tree_size, tree_to_path, tree_weight)
from wcatalan.valuation import digit_sum, double_factorial
from wcatalan.weights import ONE, geometric, odd_squares, polynomial, table, window_witness

ODDSQ = odd_squares()
GEOM5 = geometric(5)

LEFT_CHAIN = Node(Node(LEAF, None), None)
RIGHT_CHAIN = Node(None, Node(None, LEAF))
CHERRY = Node(LEAF, LEAF)


def orbits_by_shape(n):
    groups = defaultdict(list)
    for t in enumerate_trees(n):
        groups[canonical_shape(t)].append(t)
    return groups


@pytest.mark.parametrize("n", range(9))
def test_enumerate_trees_counts(n):
    trees = enumerate_trees(n)
    assert len(trees) == len(set(trees)) == catalan(n)
    assert all(tree_size(t) == n for t in trees)


def test_enumerate_trees_small():
    assert enumerate_trees(0) == [None]
    assert len(enumerate_trees(3)) == 5
    assert len(enumerate_trees(4)) == 14
    with pytest.raises(BoundExceededError):
        enumerate_trees(15)


def test_tree_to_path_examples():
    assert tree_to_path(None).steps == ()
    assert tree_to_path(LEAF).steps == (1, -1)
    left_only = Node(LEAF, None)
    p = tree_to_path(left_only)
    assert p.steps == (1, 1, -1, -1)
    assert p.ascent_heights() == [0, 1] == sorted(left_depths(left_only))


@pytest.mark.parametrize("n", range(11))
def test_bijection_and_depth_multisets(n):
    trees = enumerate_trees(n)
    paths = [tree_to_path(t) for t in trees]
    assert set(paths) == set(dyck_paths(n))
    assert len(set(paths)) == len(trees)
    for t, p in zip(trees, paths):
        assert Counter(left_depths(t)) == Counter(p.ascent_heights())


@pytest.mark.parametrize("b", [ODDSQ, GEOM5, polynomial([1, 4]), table([3, -1, 7, 5, 9, 11, 13, 1, 3, 5])])
def test_weight_transport(b):
    for n in range(9):
        for t in enumerate_trees(n):
            assert tree_to_path(t).weight(b) == tree_weight(t, b, 0)


def test_tree_weight_examples():
    assert tree_weight(None, ODDSQ, 5) == 1
    assert tree_weight(LEFT_CHAIN, ODDSQ, 0) == 225
    assert tree_weight(RIGHT_CHAIN, ODDSQ, 0) == 1
    assert tree_weight(LEAF, ODDSQ, 2) == 25


def test_canonical_shape_examples():
    assert canonical_shape(Node(LEAF, None)) == canonical_shape(Node(None, LEAF))
    assert canonical_shape(CHERRY) != canonical_shape(LEFT_CHAIN)
    assert canonical_shape(LEFT_CHAIN) == canonical_shape(RIGHT_CHAIN)
    s = canonical_shape(LEFT_CHAIN)
    assert canonical_shape(shape_to_tree(s)) == s


@pytest.mark.parametrize("n", range(6))
def test_shapes_agree_with_swap_closure(n):
    for t in enumerate_trees(n):
        s = canonical_shape(t)
        closure = swap_orbit(t)
        assert {canonical_shape(u) for u in closure} == {s}
        assert closure == set(orbits_by_shape(n)[s])


@pytest.mark.parametrize("n", range(7))
def test_orbit_size_matches_class_size(n):
    groups = orbits_by_shape(n)
    assert sorted(groups) == enumerate_shapes(n)
    for s, members in groups.items():
        assert orbit_size(s) == len(members)


def test_orbit_size_examples():
    assert orbit_size(()) == 1
    chain = canonical_shape(LEFT_CHAIN)
    cherry = canonical_shape(CHERRY)
    assert (orbit_size(chain), orbit_size(cherry)) == (4, 1)


@pytest.mark.parametrize("n", range(12))
def test_orbit_sizes_are_powers_of_two_summing_to_catalan(n):
    sizes = [orbit_size(s) for s in enumerate_shapes(n)]
    assert all(z & (z - 1) == 0 for z in sizes)
    assert sum(sizes) == catalan(n)


def test_parens_round_trip():
    for n in range(8):
        for s in enumerate_shapes(n):
            text = shape_to_parens(s)
            assert len(text) == 2 * n
            assert parens_to_shape(text) == s
    assert shape_to_parens(canonical_shape(CHERRY)) == "(()())"
    assert shape_to_parens(canonical_shape(LEFT_CHAIN)) == "((()))"
    with pytest.raises(ValueError):
        parens_to_shape("((()()()))")


def test_make_shape_is_order_independent():
    a, b = canonical_shape(LEAF), canonical_shape(LEFT_CHAIN)
    assert make_shape(a, b) == make_shape(b, a)


def test_reduced_weight_examples():
    assert reduced_weight((), ODDSQ, length=4).values == (1, 1, 1, 1)
    assert reduced_weight(canonical_shape(LEAF), ODDSQ).values == (1,)
    chain = canonical_shape(LEFT_CHAIN)
    members = orbits_by_shape(3)[chain]
    assert len(members) == 4
    expected = sum(tree_weight(t, ODDSQ, 0) for t in members) // 4
    assert reduced_weight(chain, ODDSQ).values == (expected,) == (79,)


@pytest.mark.parametrize("b", [ODDSQ, GEOM5])
def test_reduced_weight_orbit_sum_oracle(b):
    for n in range(9):
        for s, members in orbits_by_shape(n).items():
            r = reduced_weight(s, b, length=4)
            for x in range(4):
                total = sum(tree_weight(t, b, x) for t in members)
                assert total == len(members) * r[x]


@pytest.mark.parametrize("b", [ONE, ODDSQ, GEOM5, geometric(-3), polynomial([1, 4])])
def test_reduced_weights_odd_and_in_class(b):
    for n in range(11):
        for rec in orbit_census(n, b, length=9):
            assert all(v & 1 for v in rec.reduced_weight.values)
    # deep windows of r stay in F as far as we can see
    for rec in orbit_census(6, b, length=24):
        assert window_witness(rec.reduced_weight) is None


def test_reduced_weight_inexact_names_shape():
    with pytest.raises(OrbitWeightError) as info:
        # (b(1) + b(0)) / 2 = 3 / 2 for b(x) = x + 1
        reduced_weight(canonical_shape(Node(LEAF, None)), polynomial([1, 1]))
    assert info.value.x == 0


def test_census_examples():
    recs = orbit_census(3, ONE)
    assert sorted(r.size for r in recs) == [1, 4]
    summary = census_summary(3, recs)
    assert (summary.min_exponent, summary.min_count) == (0, 1)
    recs = orbit_census(4, ONE)
    assert min(size_histogram(recs)) == 1
    assert size_histogram(recs)[1] == 1
    with pytest.raises(BoundExceededError):
        orbit_census(19, ONE)


@pytest.mark.parametrize("n", range(14))
def test_minimal_orbits(n):
    summary = census_summary(n, orbit_census(n, ONE))
    s = digit_sum(n + 1) - 1
    assert summary.total_size == catalan(n)
    assert summary.min_exponent == s
    assert summary.min_count == double_factorial(2 * s - 1)


def test_decomposition_examples():
    assert orbit_decomposition_check(3, ODDSQ) == 325
    for n in range(10):
        assert orbit_decomposition_check(n, ONE) == catalan(n)
        assert all(rec.reduced_weight[0] == 1 for rec in orbit_census(n, ONE))
    assert orbit_decomposition_check(4, GEOM5) == weighted_catalan_dp(4, GEOM5).value


def test_decomposition_rejects_non_member():
    with pytest.raises(DecompositionError):
        orbit_decomposition_check(3, polynomial([1, 2]))
