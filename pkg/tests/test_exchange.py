"""JSON exchange round trips."""

import json
from fractions import Fraction

import pytest

from qgfourier import core, exchange, fixtures, padic
from qgfourier.scalars import FLOAT, scalar_from_obj, zeta


def test_quantum_group_round_trip():
    for name, A in fixtures.standard_fixtures():
        obj = json.loads(exchange.dumps(exchange.qgroup_to_obj(A)))
        back = exchange.qgroup_from_obj(obj)
        assert core.tensors_equal(back, A), name
        assert back.name == A.name


def test_element_and_functional_round_trip():
    A = fixtures.sweedler_fixture()
    a = A.element([1, Fraction(-2, 3), 0, 4])
    back = exchange.element_from_obj(A, exchange.element_to_obj(a))
    assert back == a
    w = core.fourier(A, a)
    obj = exchange.functional_to_obj(w)
    assert A.functional([scalar_from_obj(v) for v in obj["values"]]) == w


def test_schwartz_round_trip():
    f = padic.SchwartzFunction(3, 2, {Fraction(1, 3): zeta(9), Fraction(2): Fraction(5, 7)})
    obj = json.loads(exchange.dumps(exchange.schwartz_to_obj(f)))
    assert exchange.schwartz_from_obj(obj) == f


def test_float_values_refuse_to_serialize():
    A = fixtures.function_algebra(fixtures.FiniteGroupTable.builtin("Z2"), FLOAT)
    with pytest.raises(ValueError):
        exchange.qgroup_to_obj(A)
