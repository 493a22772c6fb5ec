"""Integer gradings by ad of a grading element, and parabolic data.

g(i) is the eigenspace of ad h for the integer eigenvalue i. Candidate
eigenvalues come from the integer roots of the characteristic polynomial of
ad h (divisor test on the constant term of its squarefree part), so the
scan is complete; the grading is accepted only when the eigenspaces fill
the whole algebra.

`semisimple_for_levi` realizes the witness statement behind the charts: a
semisimple integer element z, central in the given Levi, whose full
centralizer is exactly that Levi. The search is a verify-and-retry loop
over integer coordinates in the center (first the all-ones vector, then
seeded random draws), since over the rationals a verified random witness
replaces the generic-element existence argument that holds over large
fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .liealg import (
    LieAlgebra,
    LieElement,
    ad_matrix,
    center_basis,
    subalgebra_from_coords,
)
from .linalg import (
    RatMatrix,
    ZERO,
    char_poly,
    integer_roots,
    is_semisimple_matrix,
    kernel_basis,
    mat_vec,
    matrix_to_json,
    rank,
)
from .rng import SplitMix64


class NonIntegerSpectrumError(ValueError):
    """ad of the grading element is not diagonalizable with integer eigenvalues."""


class WitnessNotFoundError(RuntimeError):
    """No central semisimple witness found within the retry budget."""


_PAIR_CHECK_EXHAUSTIVE_DIM = 15
_PAIR_CHECK_SAMPLES = 64


@dataclass(eq=False)
class Grading:
    """Eigenspace decomposition g = (+) g(i) under ad of the grading element."""

    algebra: LieAlgebra
    grading_element: LieElement
    pieces: Dict[int, Tuple[LieElement, ...]]

    def piece_dims(self) -> Dict[int, int]:
        return {i: len(els) for i, els in self.pieces.items()}


@dataclass(eq=False)
class ParabolicData:
    """Subspaces derived from a grading: p = g(>=0), u = g(>0), their opposite,
    and the chart target u2 = g(>=2)."""

    grading: Grading
    p: Tuple[LieElement, ...]
    u: Tuple[LieElement, ...]
    u_minus: Tuple[LieElement, ...]
    u2: Tuple[LieElement, ...]
    levi0: LieAlgebra

    @property
    def u2_differs_from_u(self) -> bool:
        return len(self.u2) != len(self.u)


def grading_by(algebra: LieAlgebra, h: LieElement) -> Grading:
    """Decompose ``algebra`` into integer eigenspaces of ad h."""
    if h.algebra is not algebra:
        raise ValueError("element does not belong to the given algebra")
    ad_h = ad_matrix(algebra, h)
    dim = algebra.dim
    if dim == 0:
        return Grading(algebra, h, {})
    roots = integer_roots(char_poly(ad_h))
    ident = RatMatrix.identity(dim)
    pieces: Dict[int, Tuple[LieElement, ...]] = {}
    total = 0
    for i in roots:
        vectors = kernel_basis(ad_h - ident.scale(i))
        if not vectors:
            continue
        pieces[i] = tuple(algebra.element(v) for v in vectors)
        total += len(vectors)
    if total != dim:
        raise NonIntegerSpectrumError(
            f"integer eigenspaces of ad h span {total} of {dim} dimensions"
        )
    grading = Grading(algebra, h, dict(sorted(pieces.items())))
    _check_piece_compatibility(grading, ad_h)
    return grading


def _check_piece_compatibility(grading: Grading, ad_h: RatMatrix) -> None:
    """Verify [g(i), g(j)] lands in g(i+j), via the eigen-equation
    ad h [x, y] = (i+j) [x, y]. Exhaustive in low dimension, sampled above."""
    algebra = grading.algebra
    items = [(i, el) for i, els in grading.pieces.items() for el in els]
    pairs = [(a, b) for a in range(len(items)) for b in range(a + 1, len(items))]
    if algebra.dim > _PAIR_CHECK_EXHAUSTIVE_DIM and len(pairs) > _PAIR_CHECK_SAMPLES:
        rng = SplitMix64(0xC0FFEE)
        pairs = [pairs[rng.randint(0, len(pairs) - 1)] for _ in range(_PAIR_CHECK_SAMPLES)]
    for a, b in pairs:
        i, x = items[a]
        j, y = items[b]
        prod = x.matrix * y.matrix - y.matrix * x.matrix
        coords = algebra.coords_of_matrix(prod)
        if coords is None:
            raise NonIntegerSpectrumError("bracket of graded pieces leaves the algebra")
        if mat_vec(ad_h, coords) != tuple(c * (i + j) for c in coords):
            raise NonIntegerSpectrumError(
                f"[g({i}), g({j})] is not contained in g({i + j})"
            )


def parabolic_data(grading: Grading) -> ParabolicData:
    """Assemble p, u, u-, u2 and g(0) from a grading; validate their shape."""
    pieces = grading.pieces
    pos = sorted(i for i in pieces if i > 0)
    neg = sorted((i for i in pieces if i < 0), reverse=True)
    u = tuple(el for i in pos for el in pieces[i])
    u_minus = tuple(el for i in neg for el in pieces[i])
    u2 = tuple(el for i in pos if i >= 2 for el in pieces[i])
    zero_piece = pieces.get(0, ())
    p = tuple(zero_piece) + u
    algebra = grading.algebra
    if len(p) + len(u_minus) != algebra.dim:
        raise AssertionError("p and u- do not complement each other")
    if len(u) != len(u_minus):
        raise AssertionError("u and u- have different dimensions")
    for el in u + u_minus:
        if not el.matrix.is_nilpotent():
            raise AssertionError("graded piece of nonzero weight is not nilpotent")
    levi0 = subalgebra_from_coords(algebra, [el.coords for el in zero_piece],
                                   label=f"g(0) of {algebra.label}")
    return ParabolicData(grading, p, u, u_minus, u2, levi0)


def semisimple_for_levi(algebra: LieAlgebra, levi: LieAlgebra, seed: int,
                        budget: int = 64) -> LieElement:
    """Integer semisimple z, central in ``levi``, with centralizer exactly ``levi``.

    Attempt 0 takes the all-ones coordinate vector in the center basis (which
    already succeeds for block Levis and keeps the output canonical); later
    attempts draw integer coordinates from [-n^2, n^2] with the seeded
    generator. Each candidate is fully verified before being returned.
    """
    levi_coords = [algebra.coords_of_matrix(b) for b in levi.basis]
    if any(c is None for c in levi_coords):
        raise ValueError("levi is not contained in the ambient algebra")
    center = center_basis(levi)
    n = algebra.ambient_size
    if center.dim == 0:
        zero = algebra.zero_element()
        if levi.same_span(algebra):
            return zero
        raise WitnessNotFoundError(
            f"{levi.label} has trivial center and is proper: no torus witness exists"
        )
    rng = SplitMix64(seed)
    bound = n * n
    for attempt in range(budget):
        if attempt == 0:
            coords = [1] * center.dim
        else:
            coords = [rng.randint(-bound, bound) for _ in range(center.dim)]
        z_mat = RatMatrix.zeros(n, n)
        for c, b in zip(coords, center.basis):
            if c:
                z_mat = z_mat + b.scale(c)
        if z_mat.is_zero():
            continue
        if not is_semisimple_matrix(z_mat):
            continue
        coords_in_l = algebra.coords_of_matrix(z_mat)
        if coords_in_l is None:
            continue
        z = algebra.element(coords_in_l)
        ad_z = ad_matrix(algebra, z)
        if algebra.dim - rank(ad_z) != levi.dim:
            continue
        zero_vec = (ZERO,) * algebra.dim
        if any(mat_vec(ad_z, bc) != zero_vec for bc in levi_coords):
            continue
        try:
            grading_by(algebra, z)
        except NonIntegerSpectrumError:
            continue
        return z
    raise WitnessNotFoundError(
        f"no witness for {levi.label} within {budget} attempts (seed {seed})"
    )


def grading_to_json(grading: Grading) -> dict:
    return {
        "grading_element": matrix_to_json(grading.grading_element.matrix),
        "pieces": {
            str(i): [matrix_to_json(el.matrix) for el in els]
            for i, els in grading.pieces.items()
        },
    }
