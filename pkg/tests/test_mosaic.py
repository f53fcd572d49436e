from fractions import Fraction as Q

import pytest

from chromix import ChromaticPointSet, GenericityError, SimplicialComplex
from chromix.mosaic import (
    chromatic_delaunay,
    delaunay_mosaic,
    k_chromatic_subcomplex,
    lifted_points,
    subcomplex_by_colors,
)
from chromix.predicates import in_sphere

from helpers import EX1, random_chromatic


def _euler(K):
    return sum((-1) ** (len(s) - 1) for s in K.simplices)


def test_delaunay_1d_is_sorted_path():
    K = delaunay_mosaic([(0,), (1,), (2,)])
    assert K == SimplicialComplex([(0, 1), (1, 2)])


def test_delaunay_square_with_inner_point():
    # (1,1) is cocircular with the other three, so (9/10, 9/10) lies inside
    # the circumcircle of the corners and the diagonal runs from (0,0) to it
    K = delaunay_mosaic([(0, 0), (1, 0), (0, 1), (Q(9, 10), Q(9, 10))])
    assert K.maximal == frozenset({(0, 1, 3), (0, 2, 3)})
    assert in_sphere([(0, 0), (1, 0), (0, 1)], (Q(9, 10), Q(9, 10))) == 1


def test_delaunay_single_point_and_empty():
    assert delaunay_mosaic([(3, 4)]) == SimplicialComplex([(0,)])
    assert len(delaunay_mosaic([])) == 0


def test_cocircular_square_is_rejected():
    chi = ChromaticPointSet.from_coords([(0, 0), (1, 0), (0, 1), (1, 1)], [0, 0, 0, 0])
    with pytest.raises(GenericityError):
        chromatic_delaunay(chi)


def test_worked_example_mosaic():
    K = chromatic_delaunay(EX1)
    assert K == SimplicialComplex([(0, 1, 2)])
    assert lifted_points(EX1) == [(0, 0), (1, 1), (2, 0)]


def test_nine_points_on_a_line_three_colours():
    xs = [0, 1.3, 2.1, 3.7, 4.2, 5.9, 6.4, 7.5, 8.8]
    colors = [0, 1, 2, 2, 0, 1, 1, 2, 0]
    chi = ChromaticPointSet.from_coords([(Q(str(x)),) for x in xs], colors)
    K = chromatic_delaunay(chi)
    assert K.dim == 3
    for j in range(3):
        cls = chi.color_classes[j]
        for a, b in zip(cls, cls[1:]):
            assert (a, b) in K
    assert _euler(K) == 1


@pytest.mark.parametrize("seed", range(6))
def test_empty_sphere_property(seed):
    chi = random_chromatic(seed, 10, 2)
    K = chromatic_delaunay(chi)
    lifted = lifted_points(chi)
    m = len(lifted[0])
    for cell in K.maximal:
        assert len(cell) == m + 1
        pts = [lifted[v] for v in cell]
        for q in range(len(chi)):
            if q not in cell:
                assert in_sphere(pts, lifted[q]) == -1
    assert _euler(K) == 1


@pytest.mark.parametrize("seed", range(4))
def test_unit_length_does_not_change_mosaic(seed):
    chi = random_chromatic(10 + seed, 12, 3)
    assert chromatic_delaunay(chi, unit=2) == chromatic_delaunay(chi)


@pytest.mark.parametrize("seed", range(4))
def test_colour_restriction_is_delaunay_of_restricted_set(seed):
    chi = random_chromatic(20 + seed, 14, 3)
    K = chromatic_delaunay(chi)
    for tau in ([0], [1, 2], [0, 2]):
        sub, keep = chi.restrict(tau)
        want = chromatic_delaunay(sub).relabel(keep)
        assert subcomplex_by_colors(K, chi, tau) == want


def test_subcomplex_examples():
    K = chromatic_delaunay(EX1)
    assert subcomplex_by_colors(K, EX1, [0]) == SimplicialComplex([(0, 2)])
    assert subcomplex_by_colors(K, EX1, [1]) == SimplicialComplex([(1,)])
    assert subcomplex_by_colors(K, EX1, [0, 1]) == K
    assert len(subcomplex_by_colors(K, EX1, [])) == 0
    assert k_chromatic_subcomplex(K, EX1, 1) == SimplicialComplex([(0, 2), (1,)])
    assert k_chromatic_subcomplex(K, EX1, 2) == K
    with pytest.raises(ValueError):
        k_chromatic_subcomplex(K, EX1, 3)


def test_k_chromatic_counts_colours():
    chi = random_chromatic(3, 15, 3)
    K = chromatic_delaunay(chi)
    K2 = k_chromatic_subcomplex(K, chi, 2)
    assert K2.is_closed()
    assert all(len(chi.colors_of(s)) <= 2 for s in K2)
    assert all(s in K2 for s in K if len(chi.colors_of(s)) <= 2)


def test_mosaic_is_connected():
    chi = random_chromatic(4, 20, 2)
    assert chromatic_delaunay(chi).skeleton_connected()


def test_lower_dimensional_input():
    # collinear points in the plane
    chi = ChromaticPointSet.from_coords([(0, 0), (1, 1), (3, 3)], [0, 0, 0])
    K = chromatic_delaunay(chi)
    assert K == SimplicialComplex([(0, 1), (1, 2)])
