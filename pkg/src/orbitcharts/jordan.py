"""Additive Jordan decomposition of a rational matrix.

Chevalley's Newton iteration: with q the squarefree part of the
characteristic polynomial and u*q + v*q' = 1, the map
x -> x - q(x) v(x) squares the q-adic order each step, so after at most
ceil(log2 n) steps it lands on the semisimple part. Everything happens in
the commutative subring Q[x]; no eigenvalues are ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .liealg import LieAlgebra, LieElement
from .linalg import (
    char_poly,
    matrix_to_json,
    poly_extended_gcd,
    squarefree_part,
)


@dataclass(frozen=True)
class JordanPair:
    """x = semisimple + nilpotent with commuting parts."""

    semisimple: LieElement
    nilpotent: LieElement


def jordan_decompose(algebra: LieAlgebra, x: LieElement) -> JordanPair:
    """Split x into its commuting semisimple and nilpotent parts.

    The semisimple part is a polynomial in x with rational coefficients, so
    it lies in sl automatically; for so/sp membership is solved and checked
    when the parts are re-expressed in the basis.
    """
    if x.algebra is not algebra:
        raise ValueError("element does not belong to the given algebra")
    mat = x.matrix
    if mat.is_zero():
        zero = algebra.zero_element()
        return JordanPair(zero, zero)
    n = mat.rows
    q = squarefree_part(char_poly(mat))
    g, _, v = poly_extended_gcd(q, q.derivative())
    if g.degree != 0:
        raise ArithmeticError("squarefree polynomial shares a factor with its derivative")
    xs = mat
    qx = q.evaluate_matrix(xs)
    steps = 0
    while not qx.is_zero():
        xs = xs - qx * v.evaluate_matrix(xs)
        qx = q.evaluate_matrix(xs)
        steps += 1
        if steps > 2 * n:
            raise ArithmeticError("Jordan iteration failed to converge")
    semis = algebra.element_from_matrix(xs)
    nil = algebra.element_from_matrix(mat - xs)
    return JordanPair(semis, nil)


def jordan_pair_to_json(pair: JordanPair) -> dict:
    return {
        "semisimple": matrix_to_json(pair.semisimple.matrix),
        "nilpotent": matrix_to_json(pair.nilpotent.matrix),
    }
