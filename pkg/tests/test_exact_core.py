from fractions import Fraction

import pytest
from flint import fmpq, fmpq_mat
from hypothesis import given, strategies as st

from e7cg import exact_core as ec


def test_coercions():
    assert ec.Q(3) == fmpq(3)
    assert ec.Q(Fraction(-2, 6)) == fmpq(-1, 3)
    assert ec.Q(" 5/10 ") == fmpq(1, 2)
    with pytest.raises(TypeError):
        ec.Q(0.5)


def test_qstr_always_writes_denominator():
    assert ec.qstr(4) == "4/1"
    assert ec.qstr(fmpq(-3, 6)) == "-1/2"


@given(st.fractions(max_denominator=50))
def test_qstr_round_trip(x):
    assert ec.Q(ec.qstr(ec.Q(x))) == ec.Q(x)


def test_shape_mismatch_names_both_shapes():
    with pytest.raises(ec.ShapeError, match=r"\(2, 3\).*\(2, 2\)"):
        ec.mat_mul(fmpq_mat(2, 3), fmpq_mat(2, 2))


def test_trace_jordan_commutator():
    a = ec.from_rows([[1, 2], [3, 4]])
    b = ec.from_rows([[0, 1], [1, 0]])
    assert ec.trace(a) == 5
    assert ec.jordan(a, b) == ec.jordan(b, a)
    assert ec.commutator(a, b) == -ec.commutator(b, a)
    assert ec.is_zero(ec.commutator(a, a))


def test_rank_mod_p():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, fmpq(1, 3)]]
    assert ec.rank_mod_p(rows) == 2
    assert ec.rank_mod_p(rows, 23) == 2


@pytest.mark.parametrize("p", [2, 19, 21, 1000])
def test_rank_rejects_bad_primes(p):
    with pytest.raises(ValueError):
        ec.rank_mod_p([[1]], p)


def test_solve_linear_square_and_rectangular():
    a = ec.from_rows([[2, 1], [1, 3]])
    x = ec.solve_linear(a, ec.column([3, 5]))
    assert a * x == ec.column([3, 5])
    tall = ec.from_rows([[1, 0], [0, 1], [1, 1]])
    assert ec.solve_linear(tall, ec.column([1, 2, 3])) == ec.column([1, 2])
    assert ec.solve_linear(tall, ec.column([1, 2, 4])) is None


def test_combine_matches_weighted_sum():
    m1, m2 = ec.from_rows([[1, 0], [0, 0]]), ec.from_rows([[0, 1], [1, 0]])
    stack = ec.stack_flat([m1, m2])
    assert ec.combine(ec.row([2, fmpq(1, 2)]), stack, 2, 2) == m1 * 2 + m2 * fmpq(1, 2)
