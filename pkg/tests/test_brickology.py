import pytest

from torslab.brickology import (CC_MONOBRICK, MONOBRICK, SEMIBRICK, BrickSet, bricks, enumerate_cc_monobricks,
                                enumerate_monobricks, enumerate_semibricks, is_cofinally_closed,
                                is_monobrick, is_semibrick, phi)
from torslab.errors import NotABrick, NotMonobrick, NotSemibrick, TooLarge
from torslab.nakayama import Indec, parse_algebra
from torslab.subcat import TORF, enumerate_classes

# simples and the projective-injective of linA:2
S1, S2, P1 = Indec(1, 1), Indec(2, 1), Indec(1, 2)


class TestBricks:
    def test_counts(self, lin2, lin4):
        assert bricks(lin2) == [S1, P1, S2]
        assert len(bricks(lin4)) == 10

    def test_cyclic_projective_is_not_a_brick(self, cyc33):
        assert Indec(1, 3) not in bricks(cyc33)
        with pytest.raises(NotABrick):
            BrickSet.of(cyc33, [Indec(1, 3)])


class TestSemibricks:
    def test_a2(self, lin2):
        sbs = enumerate_semibricks(lin2)
        assert [s.sorted_members() for s in sbs] == [[], [S1], [P1], [S2], [S1, S2]]
        assert all(s.kind == SEMIBRICK for s in sbs)

    def test_membership(self, lin2):
        assert is_semibrick(BrickSet.of(lin2, [S1, S2]))
        assert not is_semibrick(BrickSet.of(lin2, [S1, P1]))

    def test_cap(self, lin4):
        with pytest.raises(TooLarge):
            enumerate_semibricks(lin4, max_bricks=3)


class TestMonobricks:
    def test_a2(self, lin2):
        mbs = enumerate_monobricks(lin2)
        assert len(mbs) == 6
        assert BrickSet(lin2, frozenset({P1, S2}), MONOBRICK) in mbs
        assert not is_monobrick(BrickSet.of(lin2, [P1, S1]))

    def test_cofinally_closed_a2(self, lin2):
        cc = enumerate_cc_monobricks(lin2)
        assert [m.sorted_members() for m in cc] == [[], [S1], [S2], [S1, S2], [P1, S2]]
        assert not is_cofinally_closed(BrickSet.of(lin2, [P1], MONOBRICK))

    def test_cofinal_closedness_needs_a_monobrick(self, lin2):
        with pytest.raises(NotMonobrick):
            is_cofinally_closed(BrickSet.of(lin2, [P1, S1]))

    @pytest.mark.parametrize("spec", ["linA:3", "nakayama:linear:2,2,1", "nakayama:cyclic:2,2"])
    def test_as_many_as_torsion_free_classes(self, spec):
        a = parse_algebra(spec)
        assert len(enumerate_cc_monobricks(a)) == len(enumerate_classes(a, TORF))


class TestPhi:
    def test_a2_values(self, lin2):
        assert phi(BrickSet.of(lin2, [P1])).members == {P1, S2}
        assert phi(BrickSet.of(lin2, [S1, S2])).members == {S1, S2}
        assert phi(BrickSet.of(lin2, [])).kind == CC_MONOBRICK

    def test_bijection_onto_cc_monobricks(self, lin3):
        images = {phi(s).members for s in enumerate_semibricks(lin3)}
        assert images == {m.members for m in enumerate_cc_monobricks(lin3)}
        assert len(images) == len(enumerate_semibricks(lin3))

    def test_rejects_non_semibricks(self, lin2):
        with pytest.raises(NotSemibrick):
            phi(BrickSet.of(lin2, [P1, S1]))


def test_serialization(lin2):
    assert BrickSet.of(lin2, [S2, S1]).to_dict() == {
        "kind": SEMIBRICK, "members": [{"top": 1, "len": 1}, {"top": 2, "len": 1}]}
    assert str(BrickSet.of(lin2, [S2, S1])) == "{M(1,1),M(2,1)}"
