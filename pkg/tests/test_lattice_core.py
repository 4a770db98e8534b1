import numpy as np
import pytest

from torslab.errors import NotALattice, NotAPoset, NotJoinIrreducible, TooLarge, UnknownElement
from torslab.lattice_core import (JOIN, MEET, FinPoset, HasseArrow, bound, build_lattice, cjr,
                                  extended_kappa, irreducibles, is_completely_semidistributive, kappa,
                                  kappa_data, kappa_poset, mu_label, poset_isomorphic, refines,
                                  validate_cjr_sampled)

# 0 < 1 < 3 < 4 and 0 < 2 < 4
PENTAGON = [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)]
M3 = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]


@pytest.fixture
def pentagon():
    return build_lattice(5, PENTAGON)


class TestPoset:
    def test_closure_and_covers(self, pentagon):
        assert pentagon.le(0, 4)
        assert pentagon.le(1, 4)
        assert not pentagon.le(1, 2)
        assert pentagon.lower_covers[4] == [2, 3]
        assert pentagon.upper_covers[0] == [1, 2]

    def test_hasse_arrows_point_down(self, pentagon):
        arrows = pentagon.hasse_arrows()
        assert len(arrows) == 5
        assert HasseArrow(3, 1) in arrows
        assert HasseArrow(1, 3) not in arrows

    def test_cycle_is_rejected(self):
        with pytest.raises(NotAPoset):
            FinPoset.from_pairs(2, [(0, 1), (1, 0)])

    def test_unknown_element(self, pentagon):
        with pytest.raises(UnknownElement):
            pentagon.le(0, 9)
        with pytest.raises(UnknownElement):
            FinPoset.from_pairs(2, [(0, 5)])

    def test_longest_chain(self, pentagon):
        assert pentagon.longest_chain() == 4

    def test_to_dict(self):
        chain = build_lattice(2, [(0, 1)])
        assert chain.to_dict() == {"n": 2, "leq": [[0, 1]], "covers": [[0, 1]]}


class TestLattice:
    def test_meet_join(self, pentagon):
        assert pentagon.join(1, 2) == 4
        assert pentagon.meet(3, 2) == 0
        assert pentagon.bottom == 0 and pentagon.top == 4

    def test_bound_of_nothing(self, pentagon):
        assert bound(pentagon, JOIN, []) == 0
        assert bound(pentagon, MEET, []) == 4

    def test_bowtie_is_not_a_lattice(self):
        with pytest.raises(NotALattice):
            build_lattice(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


class TestSemidistributivity:
    def test_pentagon_is_semidistributive(self, pentagon):
        assert is_completely_semidistributive(pentagon)

    def test_m3_is_not(self):
        assert not is_completely_semidistributive(build_lattice(5, M3))

    def test_chain_is(self):
        assert is_completely_semidistributive(build_lattice(4, [(0, 1), (1, 2), (2, 3)]))


class TestKappa:
    def test_irreducibles(self, pentagon):
        assert irreducibles(pentagon, JOIN) == {1: 0, 2: 0, 3: 1}
        assert irreducibles(pentagon, MEET) == {1: 3, 2: 4, 3: 4}

    def test_kappa_values(self, pentagon):
        assert kappa(pentagon, 1) == 2
        assert kappa(pentagon, 2) == 3
        assert kappa(pentagon, 3) == 1

    def test_kappa_needs_join_irreducible(self, pentagon):
        with pytest.raises(NotJoinIrreducible):
            kappa(pentagon, 4)

    def test_kappa_is_the_label_of_the_lower_cover_arrow(self, pentagon):
        assert mu_label(pentagon, HasseArrow(3, 1)) == kappa(pentagon, 3)

    def test_kappa_maximality(self, pentagon):
        """j ^ kappa(j) = j_* and nothing strictly above kappa(j) keeps that meet."""
        for j, lower in irreducibles(pentagon, JOIN).items():
            k = kappa(pentagon, j)
            assert pentagon.meet(j, k) == lower
            for y in range(pentagon.n):
                if pentagon.lt(k, y):
                    assert pentagon.meet(j, y) != lower

    def test_chain_kappa(self):
        chain = build_lattice(3, [(0, 1), (1, 2)])
        assert kappa(chain, 1) == 0
        assert kappa(chain, 2) == 1


class TestCanonicalJoins:
    def test_top_of_pentagon(self, pentagon):
        assert cjr(pentagon, 4) == frozenset({1, 2})
        assert cjr(pentagon, 3) == frozenset({3})
        assert cjr(pentagon, 0) == frozenset()

    def test_refines(self, pentagon):
        assert refines(pentagon, {1, 2}, {3, 2})
        assert not refines(pentagon, {3, 2}, {1, 2})

    def test_sampled_representations_are_refined(self, pentagon):
        reps = {x: cjr(pentagon, x) for x in range(pentagon.n)}
        assert validate_cjr_sampled(pentagon, reps, samples=300, seed=0) is None

    def test_extended_kappa(self, pentagon):
        assert extended_kappa(pentagon, 4) == pentagon.meet(kappa(pentagon, 1), kappa(pentagon, 2))
        assert extended_kappa(pentagon, 0) == 4


class TestKappaPoset:
    def test_pentagon_kappa_poset(self, pentagon):
        data = kappa_data(pentagon)
        assert sorted(data.l0) == [0, 1, 2, 3, 4]
        kp = kappa_poset(pentagon, data)
        assert kp.n == 5
        assert sorted(kp.labels) == [0, 1, 2, 3, 4]

    def test_isomorphism_with_candidate(self):
        p = FinPoset.from_pairs(3, [(0, 1), (1, 2)])
        q = FinPoset.from_pairs(3, [(2, 1), (1, 0)])
        assert poset_isomorphic(p, q, {0: 2, 1: 1, 2: 0}) == (True, {0: 2, 1: 1, 2: 0})
        assert poset_isomorphic(p, q, {0: 0, 1: 1, 2: 2})[0] is False

    def test_generic_isomorphism(self):
        p = FinPoset.from_pairs(3, [(0, 1), (1, 2)])
        antichain = FinPoset(np.eye(3, dtype=bool))
        assert poset_isomorphic(p, FinPoset.from_pairs(3, [(2, 0), (0, 1)]))[0]
        assert not poset_isomorphic(p, antichain)[0]

    def test_generic_isomorphism_is_capped(self):
        p = FinPoset(np.eye(4, dtype=bool))
        with pytest.raises(TooLarge):
            poset_isomorphic(p, p, max_size=3)
