from fractions import Fraction as Q

import pytest

from chromix import ChromaticPointSet, SimplicialComplex
from chromix.generate import blobs, uniform_random
from chromix.mosaic import chromatic_delaunay
from chromix.radius import radius_function
from chromix.sixpack import (
    CASES,
    SHARED,
    alternating_sum_residual,
    mingling_patterns,
    persistence_gap,
    select_subcomplex,
    six_pack,
    step_betti,
    triple_analysis,
    verify_norm_relations,
    verify_rank_identities,
)
from chromix.oracle import RankOracle
from chromix.persistence import MODULES

from helpers import EX1


def test_worked_example_pack_norms():
    pack = six_pack(EX1, [0], cutoff=2)
    assert pack.one_norm("domain", 0) == 3
    assert pack.one_norm("kernel", 0) == Q(3, 4)
    assert pack.one_norm("image", 0) == Q(9, 4)
    assert pack.one_norm("codomain", 0) == Q(5, 2)
    assert pack.one_norm("cokernel", 0) == Q(1, 4)
    assert pack.one_norm("relative", 1) == Q(3, 4)
    for p in range(2):
        assert verify_norm_relations(pack, p) == (0, 0, 0)
    assert alternating_sum_residual(pack) == 0
    assert pack.provenance["selector"] == "colors 0"


def test_cutoff_must_exceed_values():
    with pytest.raises(ValueError):
        six_pack(EX1, [0], cutoff=1)


def test_selectors():
    K = chromatic_delaunay(EX1)
    assert select_subcomplex(EX1, K, "0") == select_subcomplex(EX1, K, [0])
    assert select_subcomplex(EX1, K, "k=1") == select_subcomplex(EX1, K, 1)
    assert select_subcomplex(EX1, K, "0,1") == K
    with pytest.raises(ValueError):
        select_subcomplex(EX1, K, [4])
    with pytest.raises(ValueError):
        select_subcomplex(EX1, K, SimplicialComplex([(0, 1, 2, 3)]))


def test_full_subcomplex_has_empty_kernel_and_cokernel():
    pack = six_pack(EX1, "0,1")
    for p in range(pack.top_dim + 1):
        assert not pack.dgm("kernel", p).points and not pack.dgm("cokernel", p).points


def test_rank_identities_on_worked_example():
    K = chromatic_delaunay(EX1)
    F = radius_function(EX1, K)
    rep = verify_rank_identities(F, select_subcomplex(EX1, K, [0]))
    assert rep.ok and rep.checks > 0


def test_step_betti_matches_oracle():
    chi = uniform_random(10, 2, 2, seed=3)
    pack = six_pack(chi, [0])
    o = RankOracle(pack.pair())
    for m in MODULES:
        for p in range(pack.top_dim + 1):
            assert step_betti(pack, m, p) == o.betti_series(m, p)


def test_triple_analysis_on_random_three_colour_set():
    chi = uniform_random(20, 3, 2, seed=1)
    rep = triple_analysis(chi)
    assert rep.ok
    assert set(rep.packs) == {"L⊆K", "M⊆K", "M⊆L", "(L,M)⊆(K,M)"}
    assert set(rep.shared) == set(SHARED)
    assert len(rep.unique_diagrams()) == 18


def test_triple_needs_three_colours():
    with pytest.raises(ValueError):
        triple_analysis(EX1)
    with pytest.raises(ValueError):
        ChromaticPointSet.from_coords([(0,), (1,), (2,)], [0, 2, 2])


def test_mingling_patterns_labels():
    chi = uniform_random(15, 3, 2, seed=2)
    cases = mingling_patterns(chi)
    assert tuple(cases) == CASES
    with pytest.raises(ValueError):
        mingling_patterns(EX1)


def test_separated_blobs_have_no_mingling():
    chi = blobs(12, 3, seed=0)
    cases = mingling_patterns(chi)
    F = radius_function(chi, chromatic_delaunay(chi))
    C = F.default_cutoff()

    def top(fam):
        finite = [pt.persistence() for D in fam for pt in D if pt.death is not None]
        return max(finite, default=Q(0))

    base = top(cases["1+0"])
    for case in ("2+0", "3+0", "2+1", "1+2"):
        assert top(cases[case]) < base, case
    assert C > F.max_value()


def test_persistence_gap():
    pack = six_pack(EX1, [0], cutoff=2)
    assert persistence_gap(pack.dgm("codomain", 0), 2) == (2, Q(1, 4), 8)
    assert persistence_gap(pack.dgm("kernel", 0), 2) == (Q(3, 4), 0, None)
