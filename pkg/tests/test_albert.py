import random

import pytest
from hypothesis import given, settings
from strategies import alberts

from e7cg import albert
from e7cg.albert import AlbertElement, cross, det, jordan_mul, trace_form, trilinear
from e7cg.octonion import Octonion


def test_calibration():
    e = AlbertElement.unit()
    assert cross(e, e) == e
    assert det(e) == 1
    assert det(AlbertElement.diag(2, 3, 5)) == 30
    assert cross(AlbertElement.diag(2, 3, 5), AlbertElement.diag(2, 3, 5)) == AlbertElement.diag(15, 10, 6)
    assert jordan_mul(AlbertElement.idempotent(2), AlbertElement.idempotent(2)) == AlbertElement.idempotent(2)


def test_slot_pairing_is_octonion_form():
    a = Octonion((1, 2, 0, -1, 3, 0, 1, 4))
    b = Octonion((0, 1, 1, 0, 2, -1, 0, 1))
    from e7cg.octonion import oct_bilinear
    for i in (1, 2, 3):
        assert trace_form(AlbertElement.slot(i, a), AlbertElement.slot(i, b)) == oct_bilinear(a, b)


@settings(max_examples=25, deadline=None)
@given(alberts, alberts)
def test_jordan_identity(x, y):
    x2 = x * x
    assert (x2 * y) * x == x2 * (y * x)


@settings(max_examples=25, deadline=None)
@given(alberts, alberts, alberts)
def test_trace_form_associative(x, y, z):
    assert trace_form(x * y, z) == trace_form(x, y * z)


@settings(max_examples=15, deadline=None)
@given(alberts, alberts, alberts)
def test_trilinear_symmetric(x, y, z):
    v = trilinear(x, y, z)
    assert trilinear(y, x, z) == v == trilinear(z, y, x)


def test_operator_forms_match_products():
    rng = random.Random(4)
    for _ in range(5):
        x, y = albert.random_albert(rng), albert.random_albert(rng)
        assert albert.L_op(x) * y.column() == jordan_mul(x, y).column()
        assert albert.cross_matrix(x) * y.column() == cross(x, y).column()
    assert albert.gram().rank() == 27


def test_derivations_kill_det():
    rng = random.Random(1)
    a, b = albert.random_traceless(rng), albert.random_traceless(rng)
    d = albert.derivation_comm(a, b)
    x = albert.random_albert(rng)
    dx = AlbertElement.from_column(d * x.column())
    # d/dt det(x + t dx) at t = 0 is 3 <x, x, dx>
    assert trilinear(x, x, dx) == 0


def test_derivation_requires_traceless():
    with pytest.raises(ValueError):
        albert.derivation_L(AlbertElement.unit())
