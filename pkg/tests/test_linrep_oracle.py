import itertools

import numpy as np
import pytest

from torslab import gfp
from torslab.errors import NotIntertwiner, ShapeMismatch, TruncatedEnumeration
from torslab.linrep_oracle import (RepMorphism, decompose, decompose_by_homs, extension_classes,
                                   extension_middles, hom_basis_dim, hom_elements, is_intertwiner,
                                   kernel_cokernel, morphism_from_arrow, path_rank, realize)
from torslab.nakayama import Indec, hom_arrows, hom_dim, indecomposables, parse_algebra

# simples and the projective-injective of linA:2
S1, S2, P1 = Indec(1, 1), Indec(2, 1), Indec(1, 2)


class TestRealize:
    def test_projective_of_a2(self, lin2):
        x = realize(lin2, [P1])
        assert x.dims == (1, 1)
        assert x.arrow(1).tolist() == [[1]]

    def test_cyclic_wraps(self, cyc33):
        x = realize(cyc33, [Indec(1, 3)])
        assert x.dims == (2, 1)
        assert path_rank(x, 1, 2) == 1
        assert path_rank(x, 1, 3) == 0


class TestHom:
    @pytest.mark.parametrize("spec", ["linA:3", "nakayama:linear:2,2,1", "nakayama:cyclic:3,3"])
    @pytest.mark.parametrize("p", [2, 3])
    def test_dimension_matches_interval_rule(self, spec, p):
        a = parse_algebra(spec)
        for m, x in itertools.product(indecomposables(a), repeat=2):
            assert hom_basis_dim(realize(a, [m], p), realize(a, [x], p)) == hom_dim(a, m, x), (m, x)

    def test_arrows_are_intertwiners(self, cyc33):
        for m, x in itertools.product(indecomposables(cyc33), repeat=2):
            for arr in hom_arrows(cyc33, m, x):
                assert is_intertwiner(morphism_from_arrow(arr, cyc33))

    def test_every_element_is_listed(self, lin3):
        x = realize(lin3, [Indec(2, 2), Indec(3, 1)], 3)
        y = realize(lin3, [Indec(1, 3)], 3)
        dim = hom_basis_dim(x, y)
        assert dim == 2
        assert len(list(hom_elements(x, y))) == 9

    def test_mixed_fields_rejected(self, lin2):
        with pytest.raises(ShapeMismatch):
            hom_basis_dim(realize(lin2, [S1], 2), realize(lin2, [S1], 3))


class TestKernelCokernel:
    def test_projection_onto_top(self, lin2):
        (arr,) = hom_arrows(lin2, P1, S1)
        ker, coker = kernel_cokernel(morphism_from_arrow(arr, lin2))
        assert decompose(ker) == (S2,)
        assert decompose(coker) == ()

    def test_inclusion_of_socle(self, lin2):
        (arr,) = hom_arrows(lin2, S2, P1)
        ker, coker = kernel_cokernel(morphism_from_arrow(arr, lin2))
        assert decompose(ker) == ()
        assert decompose(coker) == (S1,)

    def test_non_intertwiner(self, lin2):
        x, y = realize(lin2, [S1]), realize(lin2, [P1])
        bad = RepMorphism(x, y, (np.array([[1]]), np.zeros((1, 0), dtype=np.int64)))
        assert not is_intertwiner(bad)
        with pytest.raises(NotIntertwiner):
            kernel_cokernel(bad)


class TestComposition:
    @pytest.mark.parametrize("spec", ["linA:3", "nakayama:linear:2,2,1", "nakayama:cyclic:3,3",
                                      "nakayama:cyclic:2,2,2", "nakayama:cyclic:2,2"])
    def test_composite_image_length(self, spec):
        a = parse_algebra(spec)
        for m, x, y in itertools.product(indecomposables(a), repeat=3):
            for f in hom_arrows(a, m, x):
                for g in hom_arrows(a, x, y):
                    F, G = morphism_from_arrow(f, a), morphism_from_arrow(g, a)
                    got = sum(gfp.rank((G.maps[v] @ F.maps[v]) % 2, 2) for v in range(a.n))
                    assert got == max(0, f.t + g.t - x.len) <= min(f.t, g.t)
                    if got:
                        assert got in {h.t for h in hom_arrows(a, m, y)}


class TestDecompose:
    @pytest.mark.parametrize("spec", ["linA:3", "nakayama:linear:3,2,2,1", "nakayama:cyclic:2,2"])
    def test_inverts_realize(self, spec):
        a = parse_algebra(spec)
        for size in (1, 2, 3):
            for ms in itertools.combinations_with_replacement(indecomposables(a), size):
                assert decompose(realize(a, ms)) == tuple(sorted(ms))

    def test_hom_counts_agree(self, lin3):
        ms = (Indec(1, 2), Indec(2, 2), Indec(2, 2))
        x = realize(lin3, ms)
        assert decompose_by_homs(x) == decompose(x) == ms


class TestExtensions:
    def test_projective_is_the_extension_of_simples(self, lin2):
        assert extension_middles(lin2, S2, S1) == [(P1,)]
        assert extension_middles(lin2, S1, S2) == []

    def test_interval_exchange(self, lin3):
        assert extension_middles(lin3, Indec(2, 2), Indec(1, 2)) == [(Indec(1, 3), Indec(2, 1))]

    def test_relations_kill_extensions(self):
        a = parse_algebra("nakayama:linear:2,2,1")
        assert extension_middles(a, Indec(2, 2), Indec(1, 1)) == []
        assert extension_classes(a, Indec(2, 2), Indec(1, 1)).dim == 0

    def test_truncation_is_reported(self, lin2):
        assert extension_classes(lin2, S2, S1, max_classes=0).truncated
        with pytest.raises(TruncatedEnumeration):
            extension_middles(lin2, S2, S1, max_classes=0)
