import pytest

from chromix import Filtration
from chromix.mosaic import chromatic_delaunay
from chromix.oracle import RankOracle, oracle_diagrams, rank_oracle
from chromix.persistence import MODULES, FilteredPair
from chromix.radius import radius_function
from chromix.sixpack import select_subcomplex

from helpers import EX1, random_pair


@pytest.fixture(scope="module")
def ex1():
    K = chromatic_delaunay(EX1)
    F = radius_function(EX1, K)
    return F, select_subcomplex(EX1, K, [0])


def _step(F, value):
    """Last step index whose sublevel set has value ``<= value``."""
    return sum(1 for s in F.order if F.values[s] <= value)


def test_worked_example_ranks(ex1):
    F, L = ex1
    i = _step(F, 0.25)
    assert rank_oracle(F, L, "kernel", 0, i, i) == 1
    assert rank_oracle(F, L, "domain", 0, i, i) == 2
    assert rank_oracle(F, L, "image", 0, i, i) == 1
    n = len(F)
    assert rank_oracle(F, L, "image", 0, n, n) == 1
    assert rank_oracle(F, L, "relative", 0, n, n) == 0
    for m in MODULES:
        assert rank_oracle(F, L, m, 0, 0, 0) == 0


def test_rank_table_is_monotone_in_j(ex1):
    F, L = ex1
    o = RankOracle(FilteredPair.from_filtration(F, L))
    for m in MODULES:
        table = o.ranks(m, 0)
        for i in range(len(table)):
            row = [table[i][j] for j in range(i, len(table))]
            assert row == sorted(row, reverse=True)


def test_betti_series_matches_diagonal(ex1):
    F, L = ex1
    o = RankOracle(FilteredPair.from_filtration(F, L))
    for m in MODULES:
        for p in range(2):
            assert o.betti_series(m, p) == [o.rank(m, p, i, i) for i in range(len(F) + 1)]


def test_size_guard():
    F = Filtration({(v,): 0 for v in range(20)})
    with pytest.raises(ValueError):
        RankOracle(FilteredPair.from_filtration(F), max_simplices=10)
    RankOracle(FilteredPair.from_filtration(F), max_simplices=None)


@pytest.mark.parametrize("seed", range(5))
def test_oracle_diagrams_have_all_modules(seed):
    F, L, M = random_pair(seed, with_M=True)
    dg = oracle_diagrams(F, L, M)
    assert set(dg) == set(MODULES)
