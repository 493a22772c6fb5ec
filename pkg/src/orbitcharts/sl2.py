"""Jacobson-Morozov: an sl2-triple through a nonzero nilpotent element.

Two exact linear solves. First h: writing h = [e, u] forces h into the
image of ad e, and [h, e] = 2e then reads (ad e)^2 u = -2e. Then f: the
joint system [e, f] = h, [h, f] = -2f. Both systems take the deterministic
minimal-support solution (free variables zero) of the row-reduced form.
Works inside any bracket-closed reductive matrix algebra, in particular
inside the Levi subalgebras the mixed case recurses into.
"""

from __future__ import annotations

from dataclasses import dataclass

from .liealg import LieAlgebra, LieElement, ad_matrix, bracket
from .linalg import (
    NotNilpotentError,
    RatMatrix,
    ZERO,
    mat_vec,
    matrix_to_json,
    solve_linear,
)


class NoTripleFoundError(RuntimeError):
    """The defining linear systems are inconsistent (non-reductive input)."""


@dataclass(frozen=True)
class Sl2Triple:
    """(e, h, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h."""

    e: LieElement
    h: LieElement
    f: LieElement


def jacobson_morozov(algebra: LieAlgebra, e: LieElement) -> Sl2Triple:
    if e.algebra is not algebra:
        raise ValueError("element does not belong to the given algebra")
    if e.is_zero():
        raise ValueError("Jacobson-Morozov needs a nonzero element")
    if not e.matrix.is_nilpotent():
        raise NotNilpotentError("element is not nilpotent")

    ade = ad_matrix(algebra, e)
    ade2 = ade * ade
    rhs = tuple(-2 * c for c in e.coords)
    u = solve_linear(ade2, rhs)
    if u is None:
        raise NoTripleFoundError("no h with [h,e] = 2e inside [e, g]")
    h = algebra.element(mat_vec(ade, u))

    adh = ad_matrix(algebra, h)
    m = algebra.dim
    two_id = RatMatrix.identity(m).scale(2)
    stacked_rows = (adh + two_id).row_lists() + ade.row_lists()
    stacked = RatMatrix.from_rows(stacked_rows)
    joint_rhs = tuple([ZERO] * m) + h.coords
    f_coords = solve_linear(stacked, joint_rhs)
    if f_coords is None:
        raise NoTripleFoundError("no f completing the triple")
    f = algebra.element(f_coords)

    triple = Sl2Triple(e, h, f)
    _check_relations(algebra, triple)
    return triple


def _check_relations(algebra: LieAlgebra, t: Sl2Triple) -> None:
    if bracket(t.h, t.e).matrix != t.e.matrix.scale(2):
        raise NoTripleFoundError("[h, e] != 2e")
    if bracket(t.h, t.f).matrix != t.f.matrix.scale(-2):
        raise NoTripleFoundError("[h, f] != -2f")
    if bracket(t.e, t.f).matrix != t.h.matrix:
        raise NoTripleFoundError("[e, f] != h")


def triple_to_json(t: Sl2Triple) -> dict:
    return {
        "e": matrix_to_json(t.e.matrix),
        "h": matrix_to_json(t.h.matrix),
        "f": matrix_to_json(t.f.matrix),
    }
