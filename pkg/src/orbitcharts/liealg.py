"""Classical matrix Lie algebras, subalgebras, and their basic operators.

A `LieAlgebra` is an ordered basis of ambient n x n rational matrices that
is linearly independent and closed under the commutator; both conditions
are checked at construction and the adjoint matrices of the basis elements
are cached. Subalgebras (Levis, centralizers, centers, graded pieces) are
first-class `LieAlgebra` values, which is what lets the mixed-case orbit
construction recurse uniformly into centralizers.

Basis conventions (frozen, since chart coordinates refer to basis indices):

* sl(n): elementary matrices E_ij, i != j, in lexicographic (i, j) order,
  followed by the diagonal differences E_kk - E_(k+1)(k+1).
* so(n): annihilator of the split symmetric form S (ones on the
  antidiagonal), basis produced by kernel extraction in row-major entry
  order; entries are integers. The split form is used so that nonzero
  nilpotents and integer gradings exist over the rationals.
* sp(n), n even: same construction for the split antidiagonal symplectic
  form (+1 in the top half, -1 in the bottom half).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import (
    ONE,
    ZERO,
    RatMatrix,
    VectorSpan,
    commutator,
    kernel_basis,
    matrix_from_json,
    matrix_to_json,
    vstack,
)


class NotInAlgebraError(ValueError):
    """A matrix does not lie in the span of the algebra's basis."""


class LieAlgebra:
    """Bracket-closed matrix Lie algebra with a fixed ordered basis."""

    def __init__(self, basis: Sequence[RatMatrix], label: str,
                 ambient_size: Optional[int] = None, family: Optional[str] = None):
        basis = tuple(basis)
        if basis:
            ambient_size = basis[0].rows
        elif ambient_size is None:
            raise ValueError("an empty algebra needs an explicit ambient size")
        for b in basis:
            if b.rows != ambient_size or b.cols != ambient_size:
                raise ValueError("basis matrices must share the ambient size")
        self.basis = basis
        self.label = label
        self.ambient_size = ambient_size
        self.family = family
        try:
            self._span = VectorSpan([b.flatten() for b in basis],
                                    length=ambient_size * ambient_size)
        except ValueError as exc:
            raise ValueError(f"{label}: basis is linearly dependent") from exc
        self._ad_basis = self._validate_closure()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _validate_closure(self) -> tuple:
        """Check [b_i, b_j] stays in the span; cache ad matrices of the basis."""
        m = self.dim
        cols = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
        for i in range(m):
            for j in range(i + 1, m):
                prod = commutator(self.basis[i], self.basis[j])
                coords = self._span.coords_of(prod.flatten())
                if coords is None:
                    raise ValueError(
                        f"{self.label}: basis is not bracket-closed "
                        f"([b_{i}, b_{j}] leaves the span)"
                    )
                for k, c in enumerate(coords):
                    cols[i][k][j] = c
                    cols[j][k][i] = -c
        return tuple(RatMatrix.from_rows(cols[i]) for i in range(m))

    def ad_of_basis(self, i: int) -> RatMatrix:
        return self._ad_basis[i]

    def coords_of_matrix(self, matrix: RatMatrix):
        if matrix.rows != self.ambient_size or matrix.cols != self.ambient_size:
            return None
        return self._span.coords_of(matrix.flatten())

    def contains_matrix(self, matrix: RatMatrix) -> bool:
        return self.coords_of_matrix(matrix) is not None

    def element(self, coords: Sequence) -> "LieElement":
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError("coordinate length mismatch")
        n = self.ambient_size
        mat = RatMatrix.zeros(n, n)
        for c, b in zip(coords, self.basis):
            if c:
                mat = mat + b.scale(c)
        return LieElement(self, coords, mat)

    def element_from_matrix(self, matrix: RatMatrix) -> "LieElement":
        coords = self.coords_of_matrix(matrix)
        if coords is None:
            raise NotInAlgebraError(f"matrix does not lie in {self.label}")
        return LieElement(self, coords, matrix)

    def zero_element(self) -> "LieElement":
        return self.element((ZERO,) * self.dim)

    def basis_element(self, i: int) -> "LieElement":
        coords = tuple(ONE if k == i else ZERO for k in range(self.dim))
        return LieElement(self, coords, self.basis[i])

    def same_span(self, other: "LieAlgebra") -> bool:
        if self.ambient_size != other.ambient_size or self.dim != other.dim:
            return False
        return all(self.contains_matrix(b) for b in other.basis)

    def __repr__(self):
        return f"LieAlgebra({self.label!r}, dim={self.dim}, ambient={self.ambient_size})"


@dataclass(frozen=True)
class LieElement:
    """Element of a LieAlgebra: coordinates plus the cached ambient matrix."""

    algebra: LieAlgebra
    coords: tuple
    matrix: RatMatrix

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """[x, y] = xy - yx, expressed in the common basis."""
    if x.algebra is not y.algebra:
        raise ValueError("bracket of elements of different algebras")
    return x.algebra.element_from_matrix(commutator(x.matrix, y.matrix))


def ad_matrix(algebra: LieAlgebra, x: LieElement) -> RatMatrix:
    """Matrix of z -> [x, z] in the basis of ``algebra``."""
    if x.algebra is not algebra:
        raise ValueError("element does not belong to the given algebra")
    m = algebra.dim
    out = RatMatrix.zeros(m, m)
    for c, adb in zip(x.coords, algebra._ad_basis):
        if c:
            out = out + adb.scale(c)
    return out


def subalgebra_from_coords(algebra: LieAlgebra, coord_vectors: Sequence[Sequence[Fraction]],
                           label: str) -> LieAlgebra:
    mats = [algebra.element(v).matrix for v in coord_vectors]
    return LieAlgebra(mats, label, ambient_size=algebra.ambient_size)


def centralizer_basis(algebra: LieAlgebra, x: LieElement) -> LieAlgebra:
    """Centralizer of x in ``algebra``: the kernel of ad x, as a subalgebra."""
    vectors = kernel_basis(ad_matrix(algebra, x))
    return subalgebra_from_coords(algebra, vectors,
                                  label=f"centralizer in {algebra.label}")


def center_basis(algebra: LieAlgebra) -> LieAlgebra:
    """Center of ``algebra``: intersection of the kernels of all ad b_i."""
    if algebra.dim == 0:
        return LieAlgebra((), f"center of {algebra.label}",
                          ambient_size=algebra.ambient_size)
    stacked = vstack([ad_matrix(algebra, algebra.basis_element(i))
                      for i in range(algebra.dim)])
    vectors = kernel_basis(stacked)
    return subalgebra_from_coords(algebra, vectors,
                                  label=f"center of {algebra.label}")


def trace_form_gram(algebra: LieAlgebra, sub: LieAlgebra) -> RatMatrix:
    """Gram matrix of the ambient trace form restricted to ``sub``'s basis."""
    if sub.ambient_size != algebra.ambient_size:
        raise ValueError("ambient sizes differ")
    n = algebra.ambient_size
    m = sub.dim
    gram = []
    for i in range(m):
        bi = sub.basis[i]
        row = []
        for j in range(m):
            bj = sub.basis[j]
            s = ZERO
            for a in range(n):
                for k in range(n):
                    x = bi.at(a, k)
                    if x:
                        y = bj.at(k, a)
                        if y:
                            s += x * y
            row.append(s)
        gram.append(row)
    if m == 0:
        return RatMatrix.zeros(0, 0)
    return RatMatrix.from_rows(gram)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def _elementary(n: int, i: int, j: int) -> RatMatrix:
    return RatMatrix(n, n, tuple(ONE if (a, b) == (i, j) else ZERO
                                 for a in range(n) for b in range(n)))


def _form_annihilator_basis(n: int, pairing) -> list:
    """Solve A^T S + S A = 0 entrywise; ``pairing(i)`` gives the sign of the
    antidiagonal form at row i. Returns integer basis matrices."""
    rows = []
    for i in range(n):
        for j in range(n):
            row = [ZERO] * (n * n)
            row[(n - 1 - j) * n + i] += pairing(n - 1 - j)
            row[(n - 1 - i) * n + j] += pairing(i)
            rows.append(row)
    constraint = RatMatrix.from_rows(rows)
    return [RatMatrix(n, n, vec) for vec in kernel_basis(constraint)]


_CLASSICAL_CACHE: dict = {}


def build_classical(family: str, n: int) -> LieAlgebra:
    """sl(n), so(n) or sp(n) over the rationals, with the documented basis order."""
    key = (family, n)
    if key in _CLASSICAL_CACHE:
        return _CLASSICAL_CACHE[key]
    if family == "sl":
        if n < 2:
            raise ValueError("sl(n) needs n >= 2")
        basis = [_elementary(n, i, j) for i in range(n) for j in range(n) if i != j]
        basis += [_elementary(n, k, k) - _elementary(n, k + 1, k + 1) for k in range(n - 1)]
        expected = n * n - 1
    elif family == "so":
        if n < 3:
            raise ValueError("so(n) needs n >= 3")
        basis = _form_annihilator_basis(n, lambda i: ONE)
        expected = n * (n - 1) // 2
    elif family == "sp":
        if n < 2 or n % 2:
            raise ValueError("sp(n) needs even n >= 2")
        half = n // 2
        basis = _form_annihilator_basis(n, lambda i: ONE if i < half else -ONE)
        expected = n * (n + 1) // 2
    else:
        raise ValueError(f"unsupported family {family!r}")
    algebra = LieAlgebra(basis, f"{family}{n}", family=family)
    if algebra.dim != expected:
        raise AssertionError(f"{family}{n}: dimension {algebra.dim} != {expected}")
    _CLASSICAL_CACHE[key] = algebra
    return algebra


_LEVI_CACHE: dict = {}


def block_levi(n: int, composition: Sequence[int]) -> LieAlgebra:
    """Block-diagonal Levi subalgebra of sl(n) for an ordered composition of n.

    Basis: off-diagonal E_ij inside each diagonal block (lexicographic), then
    all diagonal differences, matching the sl(n) convention.
    """
    composition = tuple(int(c) for c in composition)
    if any(c < 1 for c in composition) or sum(composition) != n:
        raise ValueError("composition parts must be >= 1 and sum to n")
    key = (n, composition)
    if key in _LEVI_CACHE:
        return _LEVI_CACHE[key]
    blocks = []
    start = 0
    for size in composition:
        blocks.append(range(start, start + size))
        start += size
    basis = []
    for blk in blocks:
        for i in blk:
            for j in blk:
                if i != j:
                    basis.append(_elementary(n, i, j))
    basis += [_elementary(n, k, k) - _elementary(n, k + 1, k + 1) for k in range(n - 1)]
    label = "s(" + "x".join(f"gl{c}" for c in composition) + f") in sl{n}"
    algebra = LieAlgebra(basis, label)
    _LEVI_CACHE[key] = algebra
    return algebra


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def algebra_to_json(algebra: LieAlgebra) -> dict:
    return {
        "label": algebra.label,
        "ambient_size": algebra.ambient_size,
        "basis": [matrix_to_json(b) for b in algebra.basis],
    }


def algebra_from_json(data: dict) -> LieAlgebra:
    basis = [matrix_from_json(b) for b in data["basis"]]
    return LieAlgebra(basis, data["label"], ambient_size=data["ambient_size"])


def element_to_json(x: LieElement) -> dict:
    return {"algebra_label": x.algebra.label, "matrix": matrix_to_json(x.matrix)}


def element_from_json(algebra: LieAlgebra, data: dict) -> LieElement:
    if "matrix" in data:
        return algebra.element_from_matrix(matrix_from_json(data["matrix"]))
    if "coords" in data:
        from .linalg import parse_rational

        return algebra.element([parse_rational(c) for c in data["coords"]])
    raise ValueError("element JSON needs 'matrix' or 'coords'")
