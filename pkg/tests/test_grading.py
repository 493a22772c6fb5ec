from fractions import Fraction

import pytest

from conftest import (
    compositions,
    diag_matrix,
    elem,
    element,
    jordan_nilpotent,
    nontrivial_partitions,
)
from orbitcharts.grading import (
    NonIntegerSpectrumError,
    WitnessNotFoundError,
    grading_by,
    grading_to_json,
    parabolic_data,
    semisimple_for_levi,
)
from orbitcharts.liealg import (
    LieAlgebra,
    block_levi,
    build_classical,
    centralizer_basis,
)
from orbitcharts.sl2 import jacobson_morozov

F = Fraction


class TestGradingBy:
    def test_sl2_by_h(self, sl2):
        g = grading_by(sl2, element(sl2, [[1, 0], [0, -1]]))
        assert g.piece_dims() == {-2: 1, 0: 1, 2: 1}

    def test_sl3_by_diag_101(self, sl3):
        g = grading_by(sl3, sl3.element_from_matrix(diag_matrix([1, 0, -1])))
        assert g.piece_dims() == {-2: 1, -1: 2, 0: 2, 1: 2, 2: 1}

    def test_sl3_by_diag_202(self, sl3):
        g = grading_by(sl3, sl3.element_from_matrix(diag_matrix([2, 0, -2])))
        assert g.piece_dims() == {-4: 1, -2: 2, 0: 2, 2: 2, 4: 1}

    def test_non_diagonalizable_rejected(self, sl2):
        e = element(sl2, [[0, 1], [0, 0]])
        with pytest.raises(NonIntegerSpectrumError):
            grading_by(sl2, e)

    def test_non_integer_spectrum_rejected(self, sl2):
        h3 = element(sl2, [[F(1, 3), 0], [0, F(-1, 3)]])
        with pytest.raises(NonIntegerSpectrumError):
            grading_by(sl2, h3)

    def test_bracket_compatibility_all_pairs(self, sl3):
        from orbitcharts.liealg import ad_matrix
        from orbitcharts.linalg import mat_vec

        h = sl3.element_from_matrix(diag_matrix([1, 0, -1]))
        g = grading_by(sl3, h)
        ad_h = ad_matrix(sl3, h)
        for i, xs in g.pieces.items():
            for j, ys in g.pieces.items():
                for x in xs:
                    for y in ys:
                        prod = x.matrix * y.matrix - y.matrix * x.matrix
                        coords = sl3.coords_of_matrix(prod)
                        assert coords is not None
                        assert mat_vec(ad_h, coords) == tuple(
                            c * (i + j) for c in coords)

    def test_json_shape(self, sl2):
        g = grading_by(sl2, element(sl2, [[1, 0], [0, -1]]))
        data = grading_to_json(g)
        assert set(data["pieces"].keys()) == {"-2", "0", "2"}


class TestParabolicData:
    def test_sl2(self, sl2):
        pd = parabolic_data(grading_by(sl2, element(sl2, [[1, 0], [0, -1]])))
        assert (len(pd.p), len(pd.u), len(pd.u2), len(pd.u_minus)) == (2, 1, 1, 1)
        assert not pd.u2_differs_from_u

    def test_sl3_odd_grading(self, sl3):
        pd = parabolic_data(grading_by(sl3, sl3.element_from_matrix(diag_matrix([1, 0, -1]))))
        assert (len(pd.p), len(pd.u), len(pd.u2), len(pd.u_minus)) == (5, 3, 1, 3)
        assert pd.u2_differs_from_u

    def test_sl3_even_grading(self, sl3):
        pd = parabolic_data(grading_by(sl3, sl3.element_from_matrix(diag_matrix([2, 0, -2]))))
        assert (len(pd.u), len(pd.u2)) == (3, 3)
        assert not pd.u2_differs_from_u

    def test_levi0_closed_and_nilpotent_pieces(self, sl3):
        pd = parabolic_data(grading_by(sl3, sl3.element_from_matrix(diag_matrix([1, 0, -1]))))
        assert pd.levi0.dim == 2
        for el in pd.u + pd.u_minus + pd.u2:
            assert el.matrix.is_nilpotent()

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_jm_gradings_symmetric_and_centralizer_dims(self, n):
        algebra = build_classical("sl", n)
        for part in nontrivial_partitions(n):
            e = algebra.element_from_matrix(jordan_nilpotent(n, part))
            t = jacobson_morozov(algebra, e)
            g = grading_by(algebra, t.h)
            dims = g.piece_dims()
            for i, d in dims.items():
                assert dims.get(-i, 0) == d, part
            cent = centralizer_basis(algebra, e)
            assert cent.dim == dims.get(0, 0) + dims.get(1, 0), part


class TestWitness:
    def test_sl3_block_levi(self, sl3):
        levi = block_levi(3, (2, 1))
        z = semisimple_for_levi(sl3, levi, 42)
        assert z.matrix == diag_matrix([1, 1, -2])

    def test_sl2_cartan(self, sl2):
        cartan = LieAlgebra((diag_matrix([1, -1]),), "cartan of sl2")
        z = semisimple_for_levi(sl2, cartan, 42)
        assert z.matrix == diag_matrix([1, -1])

    def test_sl4_two_blocks(self, sl4):
        levi = block_levi(4, (2, 2))
        z = semisimple_for_levi(sl4, levi, 42)
        assert z.matrix == diag_matrix([1, 1, -1, -1])

    def test_witness_grading_zero_piece_is_levi(self, sl3):
        levi = block_levi(3, (2, 1))
        z = semisimple_for_levi(sl3, levi, 42)
        pd = parabolic_data(grading_by(sl3, z))
        assert pd.levi0.same_span(levi)

    def test_deterministic_given_seed(self, sl4):
        levi = block_levi(4, (1, 2, 1))
        z1 = semisimple_for_levi(sl4, levi, 17)
        z2 = semisimple_for_levi(sl4, levi, 17)
        assert z1.matrix == z2.matrix

    def test_full_algebra_gets_zero_witness(self, sl3):
        levi = block_levi(3, (3,))
        z = semisimple_for_levi(sl3, levi, 42)
        assert z.is_zero()
        assert centralizer_basis(sl3, z).same_span(levi)

    def test_trivial_center_proper_fails_fast(self, sl2):
        borel = LieAlgebra((elem(2, 0, 1), diag_matrix([1, -1])), "borel")
        with pytest.raises(WitnessNotFoundError):
            semisimple_for_levi(sl2, borel, 42)

    def test_nilpotent_center_exhausts_budget(self, sl2):
        line = LieAlgebra((elem(2, 0, 1),), "nilpotent line")
        with pytest.raises(WitnessNotFoundError):
            semisimple_for_levi(sl2, line, 42)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_every_block_composition(self, n):
        algebra = build_classical("sl", n)
        for comp in compositions(n):
            levi = block_levi(n, comp)
            z = semisimple_for_levi(algebra, levi, 42)
            assert centralizer_basis(algebra, z).same_span(levi), comp
