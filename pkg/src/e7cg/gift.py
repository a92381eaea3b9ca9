"""The split gift (End(W), sigma_omega, p phi_omega^-1) and the product on its symmetric part.

Elements of A (x) A are kept as lists of rank-one pairs
``phi(a (x) b) (x) phi(c (x) d)``; nothing of size 3136 x 3136 is built.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from flint import fmpq, fmpq_mat

from . import brown
from . import cg_algebra as cg
from . import exact_core as ec
from .brown import as_column, omega_fast, omega_gram, omega_gram_inverse

DIM = brown.DIM
G5_CONSTANT = -24


def phi_omega(a, b) -> fmpq_mat:
    """x -> w(b, x) a."""
    a, b = as_column(a), as_column(b)
    return a * (b.transpose() * omega_gram())


def sigma_inv(m: fmpq_mat) -> fmpq_mat:
    """omega-adjoint: w(m x, y) = w(x, sigma(m) y)."""
    return omega_gram_inverse() * m.transpose() * omega_gram()


def is_skew(m: fmpq_mat) -> bool:
    return sigma_inv(m) == -m


# -- A (x) A ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RankOnePair:
    """phi(a (x) b) (x) phi(c (x) d)."""

    a: fmpq_mat
    b: fmpq_mat
    c: fmpq_mat
    d: fmpq_mat

    @classmethod
    def of(cls, a, b, c, d) -> "RankOnePair":
        return cls(*(as_column(v) for v in (a, b, c, d)))

    def left(self) -> fmpq_mat:
        return phi_omega(self.a, self.b)

    def right(self) -> fmpq_mat:
        return phi_omega(self.c, self.d)


@dataclass
class TensorSum:
    terms: list = field(default_factory=list)   # [(coeff, RankOnePair)]

    @classmethod
    def single(cls, a, b, c, d, coeff=1) -> "TensorSum":
        return cls([(ec.Q(coeff), RankOnePair.of(a, b, c, d))])

    @classmethod
    def of_operators(cls, m, n) -> "TensorSum":
        """m (x) n through rank-one decompositions of both factors."""
        return cls([(ec.ONE, RankOnePair(a, b, c, d))
                    for a, b in rank_ones(m) for c, d in rank_ones(n)])

    def __add__(self, other):
        return TensorSum(self.terms + other.terms)

    def scale(self, s) -> "TensorSum":
        s = ec.Q(s)
        return TensorSum([(s * c, r) for c, r in self.terms])


def sand(u: TensorSum, x: fmpq_mat) -> fmpq_mat:
    """Sand(u)(x): a (x) b acts as x -> a x b."""
    out = fmpq_mat(DIM, DIM)
    for c, r in u.terms:
        out += r.left() * x * r.right() * c
    return out


def sigma2(u: TensorSum) -> TensorSum:
    return TensorSum([(-c, RankOnePair(r.a, r.c, r.b, r.d)) for c, r in u.terms])


def hat(f, u: TensorSum) -> fmpq_mat:
    """m o (f (x) id) applied to u."""
    out = fmpq_mat(DIM, DIM)
    for c, r in u.terms:
        out += f(r.left()) * r.right() * c
    return out


# -- pi ------------------------------------------------------------------------

def p_map(a, b) -> fmpq_mat:
    """p(a (x) b)(x) = t(a, b, x) + w(a, x) b + w(b, x) a."""
    return cg.l_op(a, b) + phi_omega(a, b) + phi_omega(b, a)


def rank_ones(m) -> list:
    """Pairs (a, b) with m = sum phi(a (x) b).

    Wedge sums use a^b = phi(b (x) a) - phi(a (x) b); plain matrices use
    the columns m e_v against the omega-dual vectors of the standard basis.
    """
    if isinstance(m, (cg.WedgeSum, list, tuple)):
        out = []
        for a, b in cg.as_wedge_sum(m).terms:
            out += [(b, a), (-a, b)]
        return out
    dual = omega_gram_inverse().transpose()
    cols, duals = m.entries(), dual.entries()
    out = []
    for v in range(DIM):
        col = cols[v::DIM]
        if any(col):
            out.append((fmpq_mat(DIM, 1, col), fmpq_mat(DIM, 1, duals[v::DIM])))
    return out


def pi_map(m) -> fmpq_mat:
    out = fmpq_mat(DIM, DIM)
    for a, b in rank_ones(m):
        out += p_map(a, b)
    return out


# -- the symmetric product ----------------------------------------------------

def m_pi_pi_sigma2(m, n) -> fmpq_mat:
    """m o (pi (x) pi) o sigma2 (m (x) n), termwise on rank-ones."""
    out = fmpq_mat(DIM, DIM)
    for a, b in rank_ones(m):
        for c, d in rank_ones(n):
            out -= p_map(a, c) * p_map(b, d)
    return out


def sandwich_expansion(a, b, c, d) -> fmpq_mat:
    """Closed form of m o (pi (x) pi) o sigma2 on a^b (x) c^d."""
    w = omega_fast
    lac, lbd, lad, lbc = cg.l_op(a, c), cg.l_op(b, d), cg.l_op(a, d), cg.l_op(b, c)
    return ((ec.jordan(lad, lbc) - ec.jordan(lac, lbd)) * 2
            + cg.jordan_sum_generators(a, b, c, d)
            + cg.wedge(a, b) * (2 * w(c, d)) + cg.wedge(c, d) * (2 * w(a, b)))


def circledast(m, n) -> fmpq_mat:
    mm, nn = cg.as_matrix(m), cg.as_matrix(n)
    tm, tn = ec.trace(mm), ec.trace(nn)
    return (ec.jordan(mm, nn) * fmpq(1, 4)
            - m_pi_pi_sigma2(m, n) * fmpq(1, 192)
            + (nn * tm + mm * tn) * fmpq(1, 48)
            + cg.identity() * (fmpq(1, 576) * (tm * tn + ec.trace(mm * nn))))


# -- sampling ------------------------------------------------------------------

def random_skew(rng: random.Random, bound: int = 2) -> fmpq_mat:
    """A short combination of L_{x,y} plus an antisymmetrized rank-one."""
    x, y, z, w = (brown.random_brown(rng, bound) for _ in range(4))
    r = phi_omega(z, w)
    return cg.l_op(x, y) * rng.randint(1, 3) + (r - sigma_inv(r))


def random_matrix(rng: random.Random, nonzero: int = 40, bound: int = 3) -> fmpq_mat:
    m = fmpq_mat(DIM, DIM)
    for _ in range(nonzero):
        m[rng.randrange(DIM), rng.randrange(DIM)] = rng.randint(-bound, bound)
    return m


def random_rank_one_pair(rng: random.Random, bound: int = 2) -> TensorSum:
    return TensorSum.single(*(brown.random_brown(rng, bound) for _ in range(4)))


# -- the axioms ------------------------------------------------------------------

@dataclass
class AxiomResult:
    name: str
    passed: bool
    checks: int = 0
    detail: str = ""
    witness: dict | None = None


def check_g1(rng, samples: int) -> AxiomResult:
    for k in range(samples):
        m = random_matrix(rng)
        p = pi_map(m)
        if sigma_inv(p) != -p or pi_map(sigma_inv(m)) != -p:
            return AxiomResult("G1", False, k + 1, "sigma pi = pi sigma = -pi fails",
                               {"sample": k})
    return AxiomResult("G1", True, samples)


def check_g2(rng, draws: int = 100) -> AxiomResult:
    for k in range(draws):
        a = random_skew(rng)
        if a * pi_map(a) != a * a * 2:
            return AxiomResult("G2", True, k + 1, f"witness found on draw {k + 1}")
    return AxiomResult("G2", False, draws, "a pi(a) = 2 a^2 on every draw")


def check_g3(rng, samples: int) -> AxiomResult:
    for k in range(samples):
        a = random_skew(rng)
        if not ec.is_zero(pi_map(pi_map(a) * a)):
            return AxiomResult("G3", False, k + 1, "pi(pi(a) a) != 0", {"sample": k})
    return AxiomResult("G3", True, samples)


def g4_sides(u: TensorSum) -> tuple[fmpq_mat, fmpq_mat]:
    def f(x):
        return pi_map(x) - sigma_inv(x) - x
    return hat(f, u), -hat(f, sigma2(u))


def g4_residual(a, b, c, d) -> fmpq_mat:
    """Closed form of lhs - rhs in ``g4_sides`` on phi(a (x) b) (x) phi(c (x) d)."""
    return (phi_omega(b, d) * omega_fast(a, c) - phi_omega(c, d) * omega_fast(a, b)) * 2


def check_g4(rng, samples: int) -> AxiomResult:
    for k in range(samples):
        u = random_rank_one_pair(rng)
        lhs, rhs = g4_sides(u)
        if lhs != rhs:
            diff = lhs - rhs
            r = u.terms[0][1]
            return AxiomResult("G4", False, k + 1, "both sides differ on a rank-one pair", {
                **{k: [ec.qstr(v) for v in getattr(r, k).entries()] for k in "abcd"},
                "nonzero_entries_of_difference": sum(1 for v in diff.entries() if v),
            })
    return AxiomResult("G4", True, samples)


def g5_ratio(a: fmpq_mat, a2: fmpq_mat):
    pa = pi_map(a)
    den = ec.trace(pa * a2)
    if den == 0:
        return None
    return ec.trace(pa * pi_map(a2)) / den


def check_g5(rng, samples: int) -> AxiomResult:
    done = 0
    ratios = set()
    while done < samples:
        r = g5_ratio(random_skew(rng), random_skew(rng))
        if r is None:
            continue
        done += 1
        ratios.add(r)
    ok = ratios == {fmpq(G5_CONSTANT)}
    detail = "ratios observed: " + ", ".join(sorted(ec.qstr(r) for r in ratios))
    return AxiomResult("G5", ok, samples, detail,
                       None if ok else {"expected": ec.qstr(G5_CONSTANT),
                                        "observed": sorted(ec.qstr(r) for r in ratios)})


def check_gift_axioms(seed: int = 0, samples: int = 20) -> list[AxiomResult]:
    rng = random.Random(seed)
    return [check_g1(rng, samples), check_g2(rng), check_g3(rng, samples),
            check_g4(rng, samples), check_g5(rng, samples)]


def phi_span_rank(p: int = ec.DEFAULT_PRIME) -> int:
    """Rank mod p of the 3136 rank-ones phi(e_i (x) e_j)."""
    basis = [ec.column([int(r == k) for r in range(DIM)]) for k in range(DIM)]
    return ec.rank_mod_p((ec.flatten(phi_omega(a, b)) for a in basis for b in basis), p)
