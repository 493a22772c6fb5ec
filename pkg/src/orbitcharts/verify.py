"""Exact verification engine and the orbit classification maps.

Reports are pure functions of (inputs, seed). Every sampled quantity flows
from one splitmix64 stream, so reruns are byte-identical. Failures are
recorded in the report, never thrown.

The reductivity of a centralizer is tested through its proxy: the ambient
trace form restricted to the centralizer is nondegenerate. This is valid
for the algebraic subalgebras arising here (centralizers of semisimple
elements are Levis; centralizers of non-semisimple elements contain the
nilpotent part in the radical of the form) and is asserted only as the
test proxy, not as a general theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .charts import (
    OrbitChart,
    build_chart,
    eval_chart_with_derivatives,
    exp_nilpotent,
)
from .grading import WitnessNotFoundError, semisimple_for_levi
from .jordan import jordan_decompose
from .liealg import (
    LieAlgebra,
    LieElement,
    bracket,
    centralizer_basis,
    trace_form_gram,
)
from .linalg import (
    ONE,
    RatMatrix,
    VectorSpan,
    ZERO,
    char_poly,
    det,
    matrix_to_json,
    rank,
    rational_str,
)
from .rng import SplitMix64


class ZeroSemisimplePartError(ValueError):
    """The zero orbit is excluded from the classification."""


@dataclass
class Check:
    name: str
    expected: object
    observed: object
    passed: bool


@dataclass(eq=False)
class VerificationReport:
    subject: dict
    seed: int
    sample_count: int
    checks: List[Check]

    @property
    def overall_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def report_to_json(report: VerificationReport) -> dict:
    return {
        "subject": report.subject,
        "seed": report.seed,
        "sample_count": report.sample_count,
        "checks": [
            {"name": c.name, "expected": c.expected, "observed": c.observed,
             "pass": c.passed}
            for c in report.checks
        ],
        "overall_pass": report.overall_pass,
    }


# ---------------------------------------------------------------------------
# Jacobians
# ---------------------------------------------------------------------------


def jacobian_rank_at(chart: OrbitChart, params: Sequence) -> int:
    """Exact rank of the differential of the chart at ``params``.

    Columns are the directional derivatives, one dual-number perturbation
    per parameter, flattened to ambient coordinates.
    """
    _, derivs = eval_chart_with_derivatives(chart, params)
    return _rank_of_derivs(derivs)


def _rank_of_derivs(derivs: Sequence[RatMatrix]) -> int:
    if not derivs:
        return 0
    rows = [list(d.flatten()) for d in derivs]
    return rank(RatMatrix.from_rows(rows))


# ---------------------------------------------------------------------------
# Sampling
# ---------------------------------------------------------------------------


def _diag_det_one(n: int, rng: SplitMix64) -> tuple:
    """Random diagonal matrix with determinant 1 (entries small integers,
    last entry the correcting reciprocal)."""
    entries = [Fraction(rng.randint(1, 9)) for _ in range(n - 1)]
    prod = ONE
    for e in entries:
        prod *= e
    entries.append(ONE / prod)
    d = RatMatrix.from_rows([[entries[i] if i == j else ZERO for j in range(n)]
                             for i in range(n)])
    d_inv = RatMatrix.from_rows([[ONE / entries[i] if i == j else ZERO for j in range(n)]
                                 for i in range(n)])
    return d, d_inv


def _sample_slice_coords(chart: OrbitChart, rng: SplitMix64) -> tuple:
    """Coordinates of a random point of the group-orbit slice.

    The point is Ad(g)(base slice point) with g a product of exponentials
    of random elements of u (and, over sl with a diagonal grading element,
    a determinant-one diagonal factor), so membership in the slice holds by
    construction.
    """
    nil = chart if chart.case_tag == "nilpotent" else chart.inner
    pd = nil.parabolic
    algebra = nil.algebra
    n = algebra.ambient_size
    base = nil.base_element.matrix
    gs = []
    for _ in range(2):
        combo = RatMatrix.zeros(n, n)
        for el in pd.u:
            c = rng.fraction()
            if c:
                combo = combo + el.matrix.scale(c)
        gs.append((exp_nilpotent(combo), exp_nilpotent(-combo)))
    use_diag = (algebra.family == "sl"
                and _is_diagonal(pd.grading.grading_element.matrix))
    if use_diag:
        d, d_inv = _diag_det_one(n, rng)
    point = base
    if use_diag:
        point = gs[1][0] * point * gs[1][1]
        point = d * point * d_inv
        point = gs[0][0] * point * gs[0][1]
    else:
        point = gs[1][0] * point * gs[1][1]
        point = gs[0][0] * point * gs[0][1]
    span = VectorSpan([m.flatten() for m in nil.target_space], length=n * n)
    coords = span.coords_of(point.flatten())
    if coords is None:
        raise AssertionError("sampled orbit point left the slice")
    return coords


def _is_diagonal(m: RatMatrix) -> bool:
    return all(not m.at(i, j) for i in range(m.rows) for j in range(m.cols) if i != j)


def _sample_params(chart: OrbitChart, rng: SplitMix64) -> tuple:
    factor_count = chart.param_count - _slice_count(chart)
    params = [rng.fraction() for _ in range(factor_count)]
    if _slice_count(chart):
        params.extend(_sample_slice_coords(chart, rng))
    return tuple(params)


def _slice_count(chart: OrbitChart) -> int:
    if chart.case_tag == "nilpotent":
        return len(chart.target_space)
    if chart.case_tag == "mixed":
        return len(chart.inner.target_space)
    return 0


# ---------------------------------------------------------------------------
# Chart verification
# ---------------------------------------------------------------------------


def verify_chart(algebra: LieAlgebra, x: LieElement, chart: OrbitChart,
                 seed: int, samples: int = 10) -> VerificationReport:
    """Run the full exact check battery on a chart for (algebra, x)."""
    if chart.parabolic is None and chart.case_tag != "mixed":
        chart = build_chart(algebra, x, seed)
    elif chart.case_tag == "mixed" and (chart.inner is None
                                        or chart.inner.parabolic is None):
        chart = build_chart(algebra, x, seed)
    rng = SplitMix64(seed)
    checks: List[Check] = []

    oracle_cdim = centralizer_basis(algebra, x).dim
    expected_dim = algebra.dim - oracle_cdim
    checks.append(Check(
        "dimension_identity",
        expected=expected_dim,
        observed=chart.param_count,
        passed=(chart.param_count == expected_dim
                and chart.expected_orbit_dim == expected_dim),
    ))

    if chart.case_tag == "nilpotent":
        checks.append(_tangent_check(chart, "tangent_identity"))
    elif chart.case_tag == "mixed":
        checks.append(_tangent_check(chart.inner, "inner_tangent_identity"))
        inner_cdim = centralizer_basis(chart.inner.algebra,
                                       chart.inner.base_element).dim
        checks.append(Check(
            "centralizer_composition",
            expected=oracle_cdim,
            observed=inner_cdim,
            passed=(inner_cdim == oracle_cdim),
        ))

    base_value, base_derivs = eval_chart_with_derivatives(chart, chart.base_params)
    base_rank = _rank_of_derivs(base_derivs)
    checks.append(Check(
        "base_point_identity",
        expected=True,
        observed=(base_value == x.matrix),
        passed=(base_value == x.matrix),
    ))
    checks.append(Check(
        "jacobian_rank_base",
        expected=chart.expected_orbit_dim,
        observed=base_rank,
        passed=(base_rank == chart.expected_orbit_dim),
    ))

    values = []
    ranks = []
    seen = set()
    for _ in range(samples):
        # Resample coinciding tuples: sampled parameter tuples are pairwise
        # distinct, so equal outputs below would witness a genuine
        # injectivity failure rather than a duplicated input.
        params = _sample_params(chart, rng)
        for _retry in range(32):
            if params not in seen:
                break
            params = _sample_params(chart, rng)
        seen.add(params)
        value, derivs = eval_chart_with_derivatives(chart, params)
        values.append(value)
        ranks.append(_rank_of_derivs(derivs))
    checks.append(Check(
        "jacobian_rank_samples",
        expected=[chart.expected_orbit_dim] * samples,
        observed=ranks,
        passed=all(r == chart.expected_orbit_dim for r in ranks),
    ))

    distinct = len({v.entries for v in values})
    checks.append(Check(
        "injectivity_sampling",
        expected=samples,
        observed=distinct,
        passed=(distinct == samples),
    ))

    target_poly = char_poly(x.matrix)
    preserved = all(char_poly(v) == target_poly for v in values) \
        and char_poly(base_value) == target_poly
    checks.append(Check(
        "char_poly_preserved",
        expected=True,
        observed=preserved,
        passed=preserved,
    ))

    if chart.case_tag == "nilpotent":
        n = algebra.ambient_size
        base_ranks = [rank(x.matrix.power(k)) for k in range(1, n)]
        observed_ranks = sorted({
            tuple(rank(v.power(k)) for k in range(1, n)) for v in values
        })
        ok = (not values) or observed_ranks == [tuple(base_ranks)]
        checks.append(Check(
            "jordan_type_preserved",
            expected=[base_ranks],
            observed=[list(r) for r in observed_ranks],
            passed=ok,
        ))

    checks.append(Check(
        "u2_differs_from_u",
        expected=None,
        observed=chart.u2_differs_from_u,
        passed=True,
    ))

    subject = {
        "algebra": algebra.label,
        "element": matrix_to_json(x.matrix),
        "case": chart.case_tag,
    }
    return VerificationReport(subject, seed, samples, checks)


def _tangent_check(nil_chart: OrbitChart, name: str) -> Check:
    """dim [p, e] == dim u2, as the rank of the restricted bracket map."""
    pd = nil_chart.parabolic
    algebra = nil_chart.algebra
    e = nil_chart.base_element
    rows = []
    for el in pd.p:
        rows.append(list(bracket(el, e).coords))
    observed = rank(RatMatrix.from_rows(rows)) if rows else 0
    expected = len(pd.u2)
    return Check(name, expected=expected, observed=observed,
                 passed=(observed == expected))


# ---------------------------------------------------------------------------
# Reductive-centralizer suite
# ---------------------------------------------------------------------------


def check_centralizer_reductive(algebra: LieAlgebra, x: LieElement) -> bool:
    """Trace-form proxy: the Gram matrix on the centralizer is nonsingular."""
    cent = centralizer_basis(algebra, x)
    return det(trace_form_gram(algebra, cent)) != 0


def redstab_suite(algebra: LieAlgebra, x: LieElement, seed: int) -> VerificationReport:
    """Semisimplicity, the reductivity proxy, and the Levi witness, cross-checked."""
    pair = jordan_decompose(algebra, x)
    semisimple = pair.nilpotent.is_zero()
    proxy = check_centralizer_reductive(algebra, x)
    checks: List[Check] = [Check(
        "semisimple_iff_reductive",
        expected=semisimple,
        observed=proxy,
        passed=(semisimple == proxy),
    )]
    if semisimple:
        levi = centralizer_basis(algebra, x)
        witness_json = None
        zero_piece_ok = False
        found = False
        try:
            z = semisimple_for_levi(algebra, levi, seed)
            found = True
            witness_json = matrix_to_json(z.matrix)
            zero_piece_ok = centralizer_basis(algebra, z).same_span(levi)
        except WitnessNotFoundError:
            pass
        checks.append(Check(
            "levi_witness_found",
            expected=True,
            observed=witness_json,
            passed=found,
        ))
        checks.append(Check(
            "witness_zero_piece_matches_centralizer",
            expected=True,
            observed=zero_piece_ok,
            passed=zero_piece_ok,
        ))
    else:
        checks.append(Check(
            "nonsemisimple_not_reductive",
            expected=False,
            observed=proxy,
            passed=(proxy is False),
        ))
    subject = {
        "algebra": algebra.label,
        "element": matrix_to_json(x.matrix),
        "semisimple": semisimple,
    }
    return VerificationReport(subject, seed, 0, checks)


# ---------------------------------------------------------------------------
# Classification scaffold
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitClassId:
    """Chevalley-invariant vector (for sl(n): c_(n-2), ..., c_0 of the
    characteristic polynomial); identifies the unique semisimple orbit in a
    fiber of the adjoint quotient. The all-zero vector is the zero orbit."""

    invariant_vector: tuple

    def is_zero(self) -> bool:
        return all(not c for c in self.invariant_vector)


def class_id_to_json(cid: OrbitClassId) -> list:
    return [rational_str(c) for c in cid.invariant_vector]


def invariants(algebra: LieAlgebra, x: LieElement) -> OrbitClassId:
    """Adjoint-invariant coordinates of x (sl only)."""
    if algebra.family != "sl":
        raise ValueError("invariants are implemented for sl algebras only")
    n = algebra.ambient_size
    p = char_poly(x.matrix)
    coeffs = p.coefficients + (ZERO,) * (n + 1 - len(p.coefficients))
    if coeffs[n - 1] != 0:
        raise AssertionError("trace coefficient nonzero for a traceless matrix")
    return OrbitClassId(tuple(coeffs[k] for k in range(n - 2, -1, -1)))


def hamiltonian_class(algebra: LieAlgebra, x: LieElement) -> OrbitClassId:
    """Class of the unique semisimple orbit in the fiber through x.

    Rejects elements whose semisimple part vanishes: the zero orbit carries
    no nonzero semisimple representative.
    """
    pair = jordan_decompose(algebra, x)
    if pair.semisimple.is_zero():
        raise ZeroSemisimplePartError("semisimple part is zero")
    return invariants(algebra, pair.semisimple)


def kostant_rep(n: int, class_id: OrbitClassId) -> LieElement:
    """Semisimple representative of the class: the Jordan-semisimple part of
    the companion matrix of t^n + c_(n-2) t^(n-2) + ... + c_0."""
    from .liealg import build_classical

    vec = class_id.invariant_vector
    if len(vec) != n - 1:
        raise ValueError(f"class vector must have length {n - 1}")
    if class_id.is_zero():
        raise ValueError("the zero class is the zero orbit; no representative")
    low_coeffs = list(reversed(vec)) + [ZERO]  # c_0 ... c_(n-2), then c_(n-1) = 0
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = ONE
    for i in range(n):
        rows[i][n - 1] = -low_coeffs[i]
    algebra = build_classical("sl", n)
    companion = algebra.element_from_matrix(RatMatrix.from_rows(rows))
    return jordan_decompose(algebra, companion).semisimple
