import numpy as np

from torslab import gfp


class TestRank:
    def test_rank_mod_2(self):
        m = [[1, 1], [1, 1]]
        assert gfp.rank(m, 2) == 1
        assert gfp.rank([[1, 0], [0, 1]], 2) == 2

    def test_rank_depends_on_characteristic(self):
        m = [[1, 1], [1, 3]]
        assert gfp.rank(m, 2) == 1
        assert gfp.rank(m, 3) == 2

    def test_empty(self):
        assert gfp.rank(np.zeros((0, 3), dtype=np.int64), 2) == 0


class TestNullspace:
    def test_basis_is_annihilated(self):
        m = np.array([[1, 2, 0], [0, 1, 1]])
        basis = gfp.nullspace(m, 3)
        assert basis.shape == (1, 3)
        assert not (gfp.matmul(m, basis.T, 3)).any()

    def test_no_rows_means_whole_space(self):
        assert gfp.nullspace(np.zeros((0, 2), dtype=np.int64), 5, ncols=2).tolist() == [[1, 0], [0, 1]]


class TestComplement:
    def test_extends_a_basis(self):
        sub = np.array([[1, 0, 0]])
        space = np.array([[1, 0, 0], [1, 1, 0], [0, 1, 0]])
        out = gfp.complement_basis(sub, space, 2)
        assert out.tolist() == [[1, 1, 0]]

    def test_row_space(self):
        rows = gfp.row_space_basis([[1, 1], [2, 2]], 3)
        assert rows.tolist() == [[1, 1]]
