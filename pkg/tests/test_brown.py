import random

from hypothesis import given, settings
from strategies import browns, sparse_browns

from e7cg import brown, exact_core as ec
from e7cg.brown import BrownElement, brown_mul, involution, omega, s0, triple_t


def test_hand_values():
    u1, u2 = BrownElement.build(1), BrownElement.build(beta=1)
    assert omega(u1, u2) == 1
    assert brown_mul(s0(), s0()) == BrownElement.unit()
    assert involution(s0()) == -s0()
    assert triple_t(u1, u1, u1).is_zero()


def test_skew_space_is_a_line():
    # conj(x) = -x forces j = j' = 0 and beta = -alpha
    minus = brown.involution_matrix() + ec.identity(brown.DIM)
    assert brown.DIM - minus.rank() == 1


@settings(max_examples=15, deadline=None)
@given(browns, browns)
def test_omega_defining_equation(x, y):
    lhs = brown_mul(brown_mul(x, involution(y)) - brown_mul(y, involution(x)), s0())
    assert lhs == omega(x, y) * BrownElement.unit()


@settings(max_examples=15, deadline=None)
@given(browns, browns)
def test_fast_paths(x, y):
    assert brown.omega_fast(x, y) == omega(x, y)
    assert brown.mul_fast(x, y) == brown_mul(x, y).column()


def test_t_operator_matches_definition():
    rng = random.Random(2)
    for _ in range(3):
        x, y, z = (brown.random_brown(rng, 2) for _ in range(3))
        assert brown.triple_t_fast(x, y, z) == triple_t(x, y, z)


@settings(max_examples=10, deadline=None)
@given(sparse_browns(), sparse_browns(), sparse_browns(), sparse_browns())
def test_omega_t_totally_symmetric(x, y, z, w):
    def f(a, b, c, d):
        return brown.omega_fast(a, brown.triple_t_fast(b, c, d).column())
    v = f(x, y, z, w)
    assert f(y, x, z, w) == v == f(x, z, y, w) == f(x, y, w, z)


@settings(max_examples=8, deadline=None)
@given(sparse_browns(6), sparse_browns(6), sparse_browns(6), sparse_browns(6))
def test_structurable_identity(x, y, z, w):
    V = brown.v_operator
    vxy = V(x, y)
    lhs = ec.commutator(vxy, V(z, w))
    rhs = (V(BrownElement.from_column(vxy * z.column()), w)
           - V(z, BrownElement.from_column(V(y, x) * w.column())))
    assert lhs == rhs


def test_symplectic_basis():
    assert brown.symplectic_basis().failures() == []
    assert len(brown.symplectic_basis().pairs) == 28


def test_derivations_preserve_omega():
    rng = random.Random(3)
    from e7cg import albert
    a = albert.random_traceless(rng)
    om = brown.omega_gram()
    for d in (brown.l_deriv(a),
              brown.albert_to_brown_derivation(albert.derivation_comm(a, albert.random_traceless(rng)))):
        assert d.transpose() * om == -(om * d)
