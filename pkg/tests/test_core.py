from fractions import Fraction as Q

import pytest

from chromix import ChromaticPointSet, Filtration, SimplicialComplex, validate_genericity
from chromix.core import DiagramPoint, PersistenceDiagram

from helpers import EX1


def test_point_set_basics():
    assert len(EX1) == 3
    assert EX1.s == 1 and EX1.n_colors == 2
    assert EX1.color_classes == ((0, 2), (1,))
    assert EX1.int_points == ((0,), (1,), (2,))


def test_scale_clears_denominators():
    chi = ChromaticPointSet.from_coords([(Q(1, 2), Q(1, 3)), (Q(3, 4), 0)], [0, 0])
    assert chi.scale == 12
    assert chi.int_points == ((6, 4), (9, 0))


def test_colours_must_be_dense():
    with pytest.raises(ValueError):
        ChromaticPointSet.from_coords([(0,), (1,)], [0, 2])
    with pytest.raises(ValueError):
        ChromaticPointSet.from_coords([(0, 0), (1,)], [0, 0])


def test_relabeled_maps_sorted_labels():
    chi, mapping = ChromaticPointSet.relabeled([(0,), (1,), (2,)], [5, 9, 5])
    assert mapping == {5: 0, 9: 1}
    assert chi.colors == (0, 1, 0)


def test_restrict_and_monochrome():
    sub, keep = EX1.restrict([1])
    assert keep == (1,) and sub.colors == (0,)
    assert set(EX1.monochrome().colors) == {0}


def test_complex_closure_and_queries():
    K = SimplicialComplex([(0, 1, 2), (2, 3)])
    assert len(K) == 9
    assert K.dim == 2
    assert K.is_closed()
    assert K.maximal == frozenset({(0, 1, 2), (2, 3)})
    assert K.of_dim(1) == [(0, 1), (0, 2), (1, 2), (2, 3)]
    assert K.skeleton_connected()
    assert not SimplicialComplex([(0,), (1,)]).skeleton_connected()


def test_filtration_order_breaks_ties_by_dimension_then_vertices():
    F = Filtration({(0,): 0, (1,): 0, (0, 1): 0, (2,): 1})
    assert F.order == [(0,), (1,), (0, 1), (2,)]
    assert F.critical_values == [0, 1]
    assert F.default_cutoff() == 2


def test_filtration_rejects_non_monotone_and_open():
    with pytest.raises(ValueError):
        Filtration({(0,): 1, (1,): 0, (0, 1): 0})
    with pytest.raises(ValueError):
        Filtration({(0, 1): 0})
    F = Filtration({(0,): 1, (1,): 0, (0, 1): 0}, validate=False)
    assert F.monotonicity_violations()


def test_default_cutoff_all_zero():
    assert Filtration({(0,): 0}).default_cutoff() == 1


def test_diagram_helpers():
    D = PersistenceDiagram(0, (DiagramPoint(Q(0), Q(1)), DiagramPoint(Q(0), None)))
    assert D.betti_at(Q(1, 2)) == 2
    assert D.betti_at(1) == 1
    assert D.points[1].persistence(Q(3)) == 3
    with pytest.raises(ValueError):
        D.points[1].persistence()


def test_genericity_examples():
    mono = ChromaticPointSet.from_coords([(0,), (1,), (2,)], [0, 0, 0])
    assert validate_genericity(mono).ok
    square = ChromaticPointSet.from_coords([(0, 0), (1, 0), (0, 1), (1, 1)], [0, 0, 0, 0])
    rep = validate_genericity(square)
    assert not rep.ok and rep.subset == (0, 1, 2, 3)
    assert validate_genericity(EX1, exhaustive=True).ok
