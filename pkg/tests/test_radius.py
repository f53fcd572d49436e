from fractions import Fraction as Q

import pytest

from chromix import ChromaticPointSet
from chromix.mosaic import chromatic_delaunay
from chromix.radius import (
    constrained_miniball,
    empty_stack_check,
    equidistant_subspace,
    radius_function,
    radius_oracle,
    stack_radius_squared,
)

from helpers import EX1, random_chromatic


def test_stack_radius_examples():
    single = ChromaticPointSet.from_coords([(0,)], [0])
    assert stack_radius_squared(single, [0], (2,)) == 4
    assert stack_radius_squared(EX1, [0, 1], (Q(1, 2),)) == Q(1, 4)
    assert stack_radius_squared(EX1, [0, 1], (1,)) == 1
    with pytest.raises(ValueError):
        stack_radius_squared(EX1, [], (0,))


@pytest.mark.parametrize("groups, y, e", [
    ({0: [(0,), (2,)]}, (1,), {0: 1}),
    ({0: [(0,)], 1: [(1,)]}, (Q(1, 2),), {0: Q(1, 4), 1: Q(1, 4)}),
    ({0: [(0,), (2,)], 1: [(1,)]}, (1,), {0: 1, 1: 0}),
])
def test_constrained_miniball_examples(groups, y, e):
    E = equidistant_subspace(groups, 1)
    assert E is not None
    got_y, got_e = constrained_miniball(groups, E)
    assert got_y == y and got_e == e


def test_equidistant_subspace_dimensions():
    assert equidistant_subspace({0: [(0, 0)]}, 2).dim == 2
    assert equidistant_subspace({0: [(0, 0), (2, 0)]}, 2).dim == 1
    assert equidistant_subspace({0: [(0, 0), (2, 0), (0, 2)]}, 2).dim == 0


def test_empty_stack_examples():
    assert empty_stack_check(EX1, (0, 1), (Q(1, 2),), {0: Q(1, 4), 1: Q(1, 4)})
    assert empty_stack_check(EX1, (0, 2), (1,), {0: 1})
    far = ChromaticPointSet.from_coords([(0,), (1,), (10,), (11,)], [0, 1, 0, 1])
    y = (Q(11, 2),)
    assert not empty_stack_check(far, (0, 3), y, {0: Q(121, 4), 1: Q(121, 4)})


def test_worked_example_values():
    F = radius_function(EX1, chromatic_delaunay(EX1))
    assert F.values == {(0,): 0, (1,): 0, (2,): 0, (0, 1): Q(1, 4), (1, 2): Q(1, 4),
                        (0, 2): 1, (0, 1, 2): 1}
    for s, v in F.values.items():
        assert radius_oracle(EX1, s) == v


def test_monochrome_is_alpha_radius():
    chi = ChromaticPointSet.from_coords([(0,), (1,), (2,)], [0, 0, 0])
    F = radius_function(chi, chromatic_delaunay(chi))
    assert F.values[(0, 1)] == F.values[(1, 2)] == Q(1, 4)
    assert all(F.values[(v,)] == 0 for v in range(3))


@pytest.mark.parametrize("seed", range(8))
def test_neighbour_and_exhaustive_checks_agree(seed):
    chi = random_chromatic(100 + seed, 12, 1 + seed % 3)
    K = chromatic_delaunay(chi)
    a = radius_function(chi, K)
    b = radius_function(chi, K, exhaustive=True)
    assert a.values == b.values
    assert a.is_monotone()


def test_radius_in_one_dimension_with_two_colours_matches_oracle():
    chi = ChromaticPointSet.from_coords([(0,), (1,), (10,), (11,)], [0, 1, 0, 1])
    K = chromatic_delaunay(chi)
    F = radius_function(chi, K)
    for s in K:
        assert radius_oracle(chi, s) == F.values[s]


def test_oracle_rejects_simplex_outside_mosaic():
    chi = ChromaticPointSet.from_coords([(0,), (1,), (2,)], [0, 0, 0])
    with pytest.raises(RuntimeError):
        radius_oracle(chi, (0, 2))


def test_values_scale_with_coordinates():
    pts = [(Q(1, 7), Q(2, 3)), (Q(5, 9), Q(1, 8)), (Q(3, 4), Q(4, 5)), (Q(1, 11), Q(1, 13))]
    chi = ChromaticPointSet.from_coords(pts, [0, 1, 0, 1])
    big = ChromaticPointSet.from_coords([tuple(3 * c for c in p) for p in pts], [0, 1, 0, 1])
    F = radius_function(chi, chromatic_delaunay(chi))
    G = radius_function(big, chromatic_delaunay(big))
    assert G.values == {s: 9 * v for s, v in F.values.items()}
