import random

from flint import fmpq

from e7cg import brown, exact_core as ec, gift
from e7cg import cg_algebra as cg


def _cols(rng, k):
    return [brown.random_brown(rng, 2).column() for _ in range(k)]


def test_phi_omega_basics():
    rng = random.Random(1)
    a, b = _cols(rng, 2)
    assert cg.wedge(a, b) == gift.phi_omega(b, a) - gift.phi_omega(a, b)
    assert ec.trace(gift.phi_omega(a, b)) == brown.omega_fast(b, a)


def test_phi_omega_spans_endomorphisms():
    assert gift.phi_span_rank() == 3136


def test_sigma():
    rng = random.Random(2)
    a, b = _cols(rng, 2)
    assert gift.sigma_inv(cg.wedge(a, b)) == cg.wedge(a, b)
    assert gift.sigma_inv(cg.l_op(a, b)) == -cg.l_op(a, b)
    for _ in range(20):
        m = gift.random_matrix(rng)
        assert gift.sigma_inv(gift.sigma_inv(m)) == m


def test_sand_identity_and_flip():
    rng = random.Random(3)
    x = gift.random_matrix(rng)
    xs, ys = brown.dual_bases()
    # id = sum_v phi(e_v (x) b_v) on both sides
    ones = gift.rank_ones(cg.identity())
    u = gift.TensorSum([(ec.ONE, gift.RankOnePair(a, b, c, d)) for a, b in ones for c, d in ones])
    assert gift.sand(u, x) == x
    a, b, c, d = _cols(rng, 4)
    u = gift.TensorSum.single(a, b, c, d)
    flip = gift.TensorSum.single(c, d, a, b)
    assert gift.sand(u, x) != gift.sand(flip, x)
    assert gift.sand(u + u.scale(2), x) == gift.sand(u, x) * 3


def test_sigma2_defining_equation():
    rng = random.Random(4)
    for _ in range(20):
        u = gift.random_rank_one_pair(rng)
        x = gift.random_matrix(rng, 20)
        assert gift.sand(gift.sigma2(u), x) == gift.sand(u, gift.sigma_inv(x))
        assert gift.sand(gift.sigma2(gift.sigma2(u)), x) == gift.sand(u, x)


def test_rank_ones_reassemble():
    rng = random.Random(5)
    m = gift.random_matrix(rng)
    total = ec.zeros(56)
    for a, b in gift.rank_ones(m):
        total += gift.phi_omega(a, b)
    assert total == m


def test_pi_on_wedges_and_identity():
    rng = random.Random(6)
    a, b = _cols(rng, 2)
    # pi kills symmetric elements: p(b (x) a) = p(a (x) b)
    assert ec.is_zero(gift.pi_map(cg.wedge(a, b)))
    assert ec.is_zero(gift.pi_map([(a, b)]))
    assert ec.is_zero(gift.pi_map(cg.identity()))
    skew = gift.phi_omega(a, b) + gift.phi_omega(b, a)
    assert gift.pi_map(skew) == gift.p_map(a, b) * 2


def test_axioms_g1_g2_g3():
    rng = random.Random(7)
    assert gift.check_g1(rng, 5).passed
    assert gift.check_g2(rng).passed
    assert gift.check_g3(rng, 5).passed


def test_g4_residual_closed_form():
    # lhs - rhs of the literal axiom is 2 w(a,c) phi(b,d) - 2 w(a,b) phi(c,d)
    rng = random.Random(8)
    for _ in range(3):
        a, b, c, d = _cols(rng, 4)
        lhs, rhs = gift.g4_sides(gift.TensorSum.single(a, b, c, d))
        assert lhs - rhs == gift.g4_residual(a, b, c, d)


def test_g4_holds_with_sigma_sign_flipped():
    rng = random.Random(9)
    a, b, c, d = _cols(rng, 4)
    u = gift.TensorSum.single(a, b, c, d)

    def f(x):
        return gift.pi_map(x) + gift.sigma_inv(x) - x
    assert gift.hat(f, u) == -gift.hat(f, gift.sigma2(u))


def test_g5_ratio_is_a_single_constant():
    rng = random.Random(10)
    ratios = {gift.g5_ratio(gift.random_skew(rng), gift.random_skew(rng)) for _ in range(4)}
    ratios.discard(None)
    assert len(ratios) == 1 and abs(ratios.pop()) == 24


def test_phi_l_relations():
    rng = random.Random(11)
    x, y, u, v = _cols(rng, 4)
    luv = cg.l_op(u, v)
    assert gift.phi_omega(x, y) * luv == -gift.phi_omega(x, luv * y)
    assert luv * gift.phi_omega(x, y) == gift.phi_omega(luv * x, y)


def test_sandwich_expansion_and_products():
    rng = random.Random(12)
    for _ in range(3):
        a, b, c, d = (brown.random_sparse_brown(rng, 4).column() for _ in range(4))
        assert gift.m_pi_pi_sigma2([(a, b)], [(c, d)]) == gift.sandwich_expansion(a, b, c, d)
        assert gift.circledast([(a, b)], [(c, d)]) == cg.star_generators(a, b, c, d)


def test_circledast_unit():
    rng = random.Random(13)
    m = cg.WedgeSum.from_pairs([(brown.random_sparse_brown(rng, 3).column(),
                                 brown.random_sparse_brown(rng, 3).column())])
    assert gift.circledast(cg.identity_wedges(), m) == m.matrix
    assert gift.circledast(cg.identity(), m) == m.matrix
    assert gift.G5_CONSTANT == fmpq(-24)
