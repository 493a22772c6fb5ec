from fractions import Fraction

import pytest

from conftest import diag_matrix, elem, element, jordan_nilpotent, nontrivial_partitions
from orbitcharts.liealg import LieAlgebra, ad_matrix, bracket, build_classical
from orbitcharts.linalg import NotNilpotentError, solve_linear
from orbitcharts.sl2 import NoTripleFoundError, jacobson_morozov

F = Fraction


def test_standard_sl2_triple(sl2):
    e = element(sl2, [[0, 1], [0, 0]])
    t = jacobson_morozov(sl2, e)
    assert t.h.matrix == diag_matrix([1, -1])
    assert t.f.matrix == elem(2, 1, 0)


def test_sl3_regular(sl3):
    e = sl3.element_from_matrix(elem(3, 0, 1) + elem(3, 1, 2))
    t = jacobson_morozov(sl3, e)
    assert t.h.matrix == diag_matrix([2, 0, -2])
    assert t.f.matrix == elem(3, 1, 0).scale(2) + elem(3, 2, 1).scale(2)


def test_sl3_minimal(sl3):
    e = sl3.element_from_matrix(elem(3, 0, 2))
    t = jacobson_morozov(sl3, e)
    assert t.h.matrix == diag_matrix([1, 0, -1])
    assert t.f.matrix == elem(3, 2, 0)


def test_not_nilpotent_rejected(sl2):
    h = element(sl2, [[1, 0], [0, -1]])
    with pytest.raises(NotNilpotentError):
        jacobson_morozov(sl2, h)


def test_zero_rejected(sl2):
    with pytest.raises(ValueError):
        jacobson_morozov(sl2, sl2.zero_element())


def test_borel_has_no_triple():
    # span{e, h} is closed but not reductive; the h-system is inconsistent
    borel = LieAlgebra((elem(2, 0, 1), diag_matrix([1, -1])), "borel of sl2")
    e = borel.element_from_matrix(elem(2, 0, 1))
    with pytest.raises(NoTripleFoundError):
        jacobson_morozov(borel, e)


def test_triple_serialization(sl2):
    from orbitcharts.sl2 import triple_to_json

    e = element(sl2, [[0, 1], [0, 0]])
    data = triple_to_json(jacobson_morozov(sl2, e))
    assert data == {
        "e": [["0", "1"], ["0", "0"]],
        "h": [["1", "0"], ["0", "-1"]],
        "f": [["0", "0"], ["1", "0"]],
    }


def _relations_hold(algebra, t):
    return (bracket(t.h, t.e).matrix == t.e.matrix.scale(2)
            and bracket(t.h, t.f).matrix == t.f.matrix.scale(-2)
            and bracket(t.e, t.f).matrix == t.h.matrix)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_all_jordan_types(n):
    algebra = build_classical("sl", n)
    for part in nontrivial_partitions(n):
        e = algebra.element_from_matrix(jordan_nilpotent(n, part))
        t = jacobson_morozov(algebra, e)
        assert _relations_hold(algebra, t), part
        # h lies in the image of ad e
        sol = solve_linear(ad_matrix(algebra, e), t.h.coords)
        assert sol is not None, part
        # e sits in weight 2 of its own grading
        assert bracket(t.h, t.e).matrix == e.matrix.scale(2)
