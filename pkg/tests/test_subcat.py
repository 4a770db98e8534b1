import random

import pytest

from torslab.errors import NotExtensionClosed, NotMinimalExtending, TooLarge
from torslab.lattice_core import MEET, irreducibles
from torslab.nakayama import Indec, indecomposables, parse_algebra
from torslab.subcat import (LEFT, RIGHT, TORF, TORS, WIDE, SubcatSet, alpha, alpha_direct, beta,
                            beta_direct, covers, enumerate_by_closure, enumerate_classes, eta,
                            filt_closure, filt_contains, gen_closure, is_finitely_generated,
                            is_torf_widely_generated, is_torsion_class, is_torsion_free_class, is_wide,
                            is_widely_generated, minimal_coextending,
                            minimal_extending, perp, sim_in, sub_closure, tors_closure, tors_lattice,
                            torf_closure, zeta)

# simples and the projective-injective of linA:2
S1, S2, P1 = Indec(1, 1), Indec(2, 1), Indec(1, 2)


def sc(a, *members):
    return SubcatSet.of(a, members)


class TestClosures:
    def test_gen_and_sub(self, lin2):
        assert gen_closure(sc(lin2, P1)) == sc(lin2, P1, S1)
        assert sub_closure(sc(lin2, P1)) == sc(lin2, P1, S2)

    def test_filt_of_simples_is_everything(self, lin2):
        assert filt_closure(sc(lin2, S1, S2)) == SubcatSet.everything(lin2)

    def test_filt_contains(self, lin2):
        assert filt_contains(sc(lin2, S1, S2), P1)
        assert not filt_contains(sc(lin2, S1), P1)
        assert filt_contains(sc(lin2, P1), P1)

    @pytest.mark.parametrize("spec", ["linA:3", "nakayama:linear:2,2,1", "nakayama:cyclic:3,3"])
    def test_tors_closure_is_a_closure_operator(self, spec):
        a = parse_algebra(spec)
        indecs = indecomposables(a)
        rng = random.Random(0)
        for _ in range(40):
            x = SubcatSet.of(a, [m for m in indecs if rng.random() < 0.3])
            y = x.with_members(m for m in indecs if rng.random() < 0.2)
            t = tors_closure(x)
            assert x.members <= t.members
            assert tors_closure(t) == t
            assert t.members <= tors_closure(y).members

    def test_tors_and_torf_closure(self, lin2):
        assert tors_closure(sc(lin2, P1)) == sc(lin2, P1, S1)
        assert torf_closure(sc(lin2, S1)) == sc(lin2, S1)
        assert torf_closure(sc(lin2, P1)) == sc(lin2, P1, S2)

    def test_membership_tests(self, lin2):
        assert is_torsion_class(sc(lin2, S2))
        assert not is_torsion_class(sc(lin2, P1))
        assert is_torsion_free_class(sc(lin2, P1, S2))
        assert not is_torsion_free_class(sc(lin2, S1, S2))


class TestPerp:
    def test_right_and_left(self, lin2):
        assert perp(sc(lin2, S1), RIGHT) == sc(lin2, P1, S2)
        assert perp(sc(lin2, S2), LEFT) == sc(lin2, S1, P1)

    def test_is_a_bijection_between_tors_and_torf(self, lin3):
        torf = {f.members for f in enumerate_classes(lin3, TORF)}
        for t in enumerate_classes(lin3, TORS):
            f = perp(t, RIGHT)
            assert f.members in torf
            assert perp(f, LEFT) == t


class TestSimples:
    def test_simples_of_everything(self, lin2):
        assert sim_in(SubcatSet.everything(lin2)) == {S1, S2}
        assert sim_in(sc(lin2, P1)) == {P1}

    def test_needs_extension_closed(self, lin2):
        with pytest.raises(NotExtensionClosed):
            sim_in(sc(lin2, S1, S2))


class TestWide:
    def test_a2(self, lin2):
        assert is_wide(sc(lin2, P1))
        assert not is_wide(sc(lin2, P1, S1))
        assert not is_wide(sc(lin2, S1, S2))

    def test_single_arrow_kernels(self, lin3):
        # M(1,3) ->> M(1,2) has kernel M(3,1)
        assert not is_wide(sc(lin3, Indec(1, 3), Indec(1, 2)))
        assert is_wide(sc(lin3, Indec(1, 3), Indec(2, 1)))


class TestMinimalExtending:
    def test_a2_values(self, lin2):
        assert minimal_extending(sc(lin2, S1)) == {P1}
        assert minimal_extending(sc(lin2, S2)) == {S1}
        assert minimal_extending(sc(lin2)) == {S1, S2}

    def test_eta_gives_the_cover(self, lin2):
        assert eta(sc(lin2, S1), P1) == sc(lin2, S1, P1)
        with pytest.raises(NotMinimalExtending):
            eta(sc(lin2, S1), S2)

    def test_coextending_dual(self, lin2):
        assert minimal_coextending(sc(lin2, S2)) == {P1}
        assert zeta(sc(lin2, S2), P1) == sc(lin2, S2, P1)

    def test_one_cover_per_brick(self, lin3):
        tl = tors_lattice(lin3)
        for k, t in enumerate(tl.classes):
            me = minimal_extending(t)
            assert len(me) == len(covers(tl, k))
            assert {eta(t, b).members for b in me} == {tl.classes[c].members for c in covers(tl, k)}


class TestAlphaBeta:
    def test_alpha_a2(self, lin2):
        assert alpha(sc(lin2, S1, P1)) == sc(lin2, P1)

    @pytest.mark.parametrize("spec", ["linA:3", "nakayama:linear:2,2,1"])
    def test_direct_definitions_agree(self, spec):
        a = parse_algebra(spec)
        for t in enumerate_classes(a, TORS):
            assert alpha(t) == alpha_direct(t)
        for f in enumerate_classes(a, TORF):
            assert beta(f) == beta_direct(f)

    def test_all_widely_and_finitely_generated(self, lin3):
        for t in enumerate_classes(lin3, TORS):
            assert is_widely_generated(t)
            assert is_finitely_generated(t)
        for f in enumerate_classes(lin3, TORF):
            assert is_torf_widely_generated(f)
            assert is_finitely_generated(f, kind=TORF)

    def test_torf_widely_generated_a2(self, lin2):
        assert [is_torf_widely_generated(f) for f in enumerate_classes(lin2, TORF)] == [True] * 5


class TestEnumerate:
    @pytest.mark.parametrize("spec,count", [("linA:1", 2), ("linA:2", 5), ("linA:3", 14), ("linA:4", 42)])
    def test_catalan(self, spec, count):
        a = parse_algebra(spec)
        assert len(enumerate_classes(a, TORS)) == count
        assert len(enumerate_classes(a, TORF)) == count
        assert len(enumerate_by_closure(a, TORS)) == count

    @pytest.mark.slow
    def test_catalan_a5(self):
        a = parse_algebra("linA:5")
        assert len(enumerate_classes(a, TORS)) == 132
        assert len(enumerate_classes(a, WIDE)) == 132

    @pytest.mark.parametrize("spec", ["linA:3", "linA:4"])
    def test_wide_matches_tors_count(self, spec):
        a = parse_algebra(spec)
        assert len(enumerate_classes(a, WIDE)) == len(enumerate_classes(a, TORS))

    @pytest.mark.parametrize("spec", ["nakayama:linear:3,2,2,1", "nakayama:cyclic:3,3", "nakayama:cyclic:2,2,2"])
    def test_brute_force_matches_closure(self, spec):
        a = parse_algebra(spec)
        for kind in (TORS, TORF):
            assert enumerate_classes(a, kind) == enumerate_by_closure(a, kind)

    def test_sorted_by_size_then_members(self, lin2):
        classes = enumerate_classes(lin2, TORS)
        assert [c.sorted_members() for c in classes] == [[], [S1], [S2], [S1, P1], [S1, P1, S2]]

    def test_worker_pool_gives_the_same_answer(self, lin3):
        assert enumerate_classes(lin3, TORS, jobs=2) == enumerate_classes(lin3, TORS)

    def test_cap(self, lin4):
        with pytest.raises(TooLarge):
            enumerate_classes(lin4, TORS, max_indecs=5)


class TestTorsLattice:
    @pytest.mark.parametrize("spec", ["linA:3", "nakayama:linear:2,2,1", "nakayama:cyclic:3,3"])
    @pytest.mark.parametrize("kind", [TORS, TORF])
    def test_mu_labels_are_meet_irreducible_complements(self, spec, kind):
        tl = tors_lattice(parse_algebra(spec), kind)
        l = tl.lattice
        mirr = irreducibles(l, MEET)
        assert set(tl.mu_labels) == set(l.hasse_arrows())
        for arrow, mu in tl.mu_labels.items():
            assert mu in mirr
            assert l.meet(arrow.src, mu) == arrow.dst

    def test_pentagon(self, lin2):
        tl = tors_lattice(lin2)
        assert len(tl.classes) == 5
        assert len(tl.lattice.hasse_arrows()) == 5
        assert tl.lattice.bottom == tl.find(sc(lin2))
        assert tl.lattice.top == tl.find(SubcatSet.everything(lin2))

    def test_brick_labels(self, lin2):
        tl = tors_lattice(lin2)
        labels = {(tl.classes[a.dst], tl.classes[a.src]): b for a, b in tl.brick_labels.items()}
        assert labels[(sc(lin2, S1), sc(lin2, S1, P1))] == P1
        assert labels[(sc(lin2), sc(lin2, S2))] == S2
        assert sorted(labels.values()) == sorted([S1, S1, S2, S2, P1])

    def test_kappa_on_tors(self, lin2):
        tl = tors_lattice(lin2)
        kap = tl.kappa.kappa
        assert tl.classes[kap[tl.find(sc(lin2, S1))]] == sc(lin2, S2)
        assert tl.classes[kap[tl.find(sc(lin2, S2))]] == sc(lin2, S1, P1)
        assert tl.classes[kap[tl.find(sc(lin2, S1, P1))]] == sc(lin2, S1)

    def test_torf_lattice(self, lin3):
        tl = tors_lattice(lin3, TORF)
        assert len(tl.classes) == 14
        assert len(tl.brick_labels) == len(tl.lattice.hasse_arrows())

    def test_indecomposables_in_top(self, lin3):
        tl = tors_lattice(lin3)
        assert len(tl.classes[tl.lattice.top]) == len(indecomposables(lin3))
