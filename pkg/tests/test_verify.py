from fractions import Fraction

import pytest

from conftest import diag_matrix, elem, element, jordan_nilpotent, nontrivial_partitions
from orbitcharts.charts import build_chart, chart_nilpotent, chart_semisimple, exp_nilpotent
from orbitcharts.jordan import jordan_decompose
from orbitcharts.liealg import build_classical
from orbitcharts.linalg import RatMatrix, char_poly
from orbitcharts.rng import SplitMix64
from orbitcharts.verify import (
    OrbitClassId,
    ZeroSemisimplePartError,
    check_centralizer_reductive,
    hamiltonian_class,
    invariants,
    jacobian_rank_at,
    kostant_rep,
    redstab_suite,
    report_to_json,
    verify_chart,
)

F = Fraction


class TestJacobianRank:
    def test_sl2_nilpotent_at_base(self, sl2):
        e = element(sl2, [[0, 1], [0, 0]])
        chart = chart_nilpotent(sl2, e)
        assert jacobian_rank_at(chart, (0, 1)) == 2

    def test_sl2_semisimple_at_origin(self, sl2):
        h = element(sl2, [[1, 0], [0, -1]])
        chart = chart_semisimple(sl2, h, 42)
        assert jacobian_rank_at(chart, (0, 0)) == 2

    def test_sl3_minimal_at_base(self, sl3):
        e13 = sl3.element_from_matrix(elem(3, 0, 2))
        chart = chart_nilpotent(sl3, e13)
        assert jacobian_rank_at(chart, chart.base_params) == 4


class TestVerifyChart:
    def test_sl2_nilpotent_all_pass(self, sl2):
        e = element(sl2, [[0, 1], [0, 0]])
        chart = chart_nilpotent(sl2, e)
        rep = verify_chart(sl2, e, chart, 42, 10)
        assert rep.overall_pass
        assert rep.check("jacobian_rank_base").observed == 2

    def test_sl2_semisimple_all_pass_det(self, sl2):
        h = element(sl2, [[1, 0], [0, -1]])
        chart = chart_semisimple(sl2, h, 42)
        rep = verify_chart(sl2, h, chart, 42, 10)
        assert rep.overall_pass
        assert rep.check("jacobian_rank_base").observed == 2

    def test_sl3_minimal_flags_u2(self, sl3):
        e13 = sl3.element_from_matrix(elem(3, 0, 2))
        chart = chart_nilpotent(sl3, e13)
        rep = verify_chart(sl3, e13, chart, 42, 10)
        assert rep.overall_pass
        assert rep.check("jacobian_rank_base").observed == 4
        assert rep.check("u2_differs_from_u").observed is True

    def test_mixed_composition_check(self, sl3):
        x = sl3.element_from_matrix(diag_matrix([1, 1, -2]) + elem(3, 0, 1))
        chart = build_chart(sl3, x, 42)
        rep = verify_chart(sl3, x, chart, 42, 10)
        assert rep.overall_pass
        assert rep.check("centralizer_composition").passed

    def test_report_is_seed_deterministic(self, sl3):
        e13 = sl3.element_from_matrix(elem(3, 0, 2))
        chart = chart_nilpotent(sl3, e13)
        r1 = report_to_json(verify_chart(sl3, e13, chart, 7, 5))
        r2 = report_to_json(verify_chart(sl3, e13, chart, 7, 5))
        assert r1 == r2

    def test_deserialized_chart_verifies(self, sl3):
        # a chart rebuilt from JSON has no construction scaffolding; the
        # verifier re-derives it from (algebra, element, seed)
        from orbitcharts.charts import chart_from_json, chart_to_json

        x = sl3.element_from_matrix(diag_matrix([1, 1, -2]) + elem(3, 0, 1))
        chart = build_chart(sl3, x, 42)
        rebuilt = chart_from_json(sl3, chart_to_json(chart))
        rep = verify_chart(sl3, x, rebuilt, 42, 5)
        assert rep.overall_pass

    def test_report_json_shape(self, sl2):
        e = element(sl2, [[0, 1], [0, 0]])
        chart = chart_nilpotent(sl2, e)
        data = report_to_json(verify_chart(sl2, e, chart, 42, 3))
        assert set(data) == {"subject", "seed", "sample_count", "checks", "overall_pass"}
        for c in data["checks"]:
            assert set(c) == {"name", "expected", "observed", "pass"}


class TestReductiveProxy:
    def test_semisimple_reductive(self, sl2):
        h = element(sl2, [[1, 0], [0, -1]])
        assert check_centralizer_reductive(sl2, h) is True

    def test_nilpotent_not_reductive(self, sl2):
        e = element(sl2, [[0, 1], [0, 0]])
        assert check_centralizer_reductive(sl2, e) is False

    def test_mixed_not_reductive(self, sl3):
        x = sl3.element_from_matrix(diag_matrix([1, 1, -2]) + elem(3, 0, 1))
        assert check_centralizer_reductive(sl3, x) is False


class TestRedstabSuite:
    def test_semisimple_with_witness(self, sl2):
        h = element(sl2, [[1, 0], [0, -1]])
        rep = redstab_suite(sl2, h, 42)
        assert rep.overall_pass
        assert rep.check("levi_witness_found").observed == [["1", "0"], ["0", "-1"]]

    def test_nilpotent(self, sl2):
        e = element(sl2, [[0, 1], [0, 0]])
        rep = redstab_suite(sl2, e, 42)
        assert rep.overall_pass
        assert rep.check("semisimple_iff_reductive").expected is False

    def test_sl3_block_semisimple(self, sl3):
        x = sl3.element_from_matrix(diag_matrix([1, 1, -2]))
        rep = redstab_suite(sl3, x, 42)
        assert rep.overall_pass
        assert rep.check("levi_witness_found").observed == [
            ["1", "0", "0"], ["0", "1", "0"], ["0", "0", "-2"]]

    def test_zero_element(self, sl3):
        rep = redstab_suite(sl3, sl3.zero_element(), 42)
        assert rep.overall_pass

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_nilpotent_types_never_reductive(self, n):
        algebra = build_classical("sl", n)
        for part in nontrivial_partitions(n):
            e = algebra.element_from_matrix(jordan_nilpotent(n, part))
            rep = redstab_suite(algebra, e, 42)
            assert rep.overall_pass, part


class TestInvariants:
    def test_sl2_h(self, sl2):
        h = element(sl2, [[1, 0], [0, -1]])
        assert invariants(sl2, h).invariant_vector == (F(-1),)

    def test_sl3_block(self, sl3):
        x = sl3.element_from_matrix(diag_matrix([1, 1, -2]))
        assert invariants(sl3, x).invariant_vector == (F(-3), F(2))

    def test_nilpotent_all_zero(self, sl3):
        e = sl3.element_from_matrix(elem(3, 0, 1) + elem(3, 1, 2))
        assert invariants(sl3, e).is_zero()

    def test_rejects_non_sl(self):
        so4 = build_classical("so", 4)
        x = so4.element(so4.basis and [1] + [0] * (so4.dim - 1))
        with pytest.raises(ValueError):
            invariants(so4, x)

    def test_conjugation_invariance(self, sl3):
        rng = SplitMix64(55)
        nil_basis = [elem(3, i, j) for i in range(3) for j in range(3) if i != j]
        for _ in range(50):
            x = sl3.element([rng.fraction() for _ in range(sl3.dim)])
            g = RatMatrix.identity(3)
            g_inv = RatMatrix.identity(3)
            for _ in range(3):
                b = nil_basis[rng.randint(0, len(nil_basis) - 1)].scale(rng.fraction())
                g = g * exp_nilpotent(b)
                g_inv = exp_nilpotent(-b) * g_inv
            y = sl3.element_from_matrix(g * x.matrix * g_inv)
            assert invariants(sl3, y).invariant_vector == \
                invariants(sl3, x).invariant_vector


class TestHamiltonianClass:
    def test_sl2_mixed_jordan_block(self, sl2):
        x = element(sl2, [[1, 1], [0, -1]])
        assert hamiltonian_class(sl2, x).invariant_vector == (F(-1),)

    def test_sl3_mixed(self, sl3):
        x = sl3.element_from_matrix(diag_matrix([1, 1, -2]) + elem(3, 0, 1))
        assert hamiltonian_class(sl3, x).invariant_vector == (F(-3), F(2))

    def test_rejects_nilpotent(self, sl2):
        e = element(sl2, [[0, 1], [0, 0]])
        with pytest.raises(ZeroSemisimplePartError):
            hamiltonian_class(sl2, e)


class TestKostantRep:
    def test_n2(self, sl2):
        rep = kostant_rep(2, OrbitClassId((F(-1),)))
        assert rep.matrix == RatMatrix.from_rows([[0, 1], [1, 0]])

    def test_n3_non_squarefree(self, sl3):
        cid = OrbitClassId((F(-3), F(2)))
        rep = kostant_rep(3, cid)
        assert char_poly(rep.matrix).coefficients == (F(2), F(-3), F(0), F(1))
        assert invariants(sl3, rep).invariant_vector == cid.invariant_vector
        # the companion itself is not semisimple here; its Jordan part is
        pair = jordan_decompose(sl3, rep)
        assert pair.nilpotent.is_zero()

    def test_rejects_zero_class(self):
        with pytest.raises(ValueError):
            kostant_rep(3, OrbitClassId((F(0), F(0))))
        with pytest.raises(ValueError):
            kostant_rep(3, OrbitClassId((F(1),)))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_round_trip_random(self, n):
        algebra = build_classical("sl", n)
        rng = SplitMix64(60 + n)
        for _ in range(25):
            vec = tuple(rng.fraction() for _ in range(n - 1))
            if not any(vec):
                vec = (F(1),) + vec[1:]
            cid = OrbitClassId(vec)
            rep = kostant_rep(n, cid)
            assert invariants(algebra, rep).invariant_vector == vec
