"""Verification suites behind the ``e7cg verify`` command.

Each check receives its own RNG (seeded from the suite seed and the check
name) and a sample count, and returns ``None`` on success or a witness dict
holding the inputs and both sides of the failed equality as "p/q" strings.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from flint import fmpq, fmpq_mat

from . import albert, brown, gift
from . import cg_algebra as cg
from . import exact_core as ec
from .albert import AlbertElement
from .brown import BrownElement
from .exact_core import qstr
from .octonion import Octonion, isotropic_pair, oct_bilinear, oct_mul, oct_norm, random_octonion

SUITES = ("octonion", "albert", "brown", "cg", "gift", "paper-coefficients")
ALL = "all"

_REGISTRY: dict[str, list] = {s: [] for s in SUITES}


def check(suite: str, name: str):
    def deco(fn):
        _REGISTRY[suite].append((name, fn))
        return fn
    return deco


@dataclass
class CheckResult:
    name: str
    status: str
    witness: dict | None = None


@dataclass
class SuiteReport:
    suite: str
    seed: int
    samples: int
    checks: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def failures(self) -> list:
        return [c for c in self.checks if c.status != "pass"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "suite": self.suite, "seed": self.seed, "samples": self.samples,
            "checks": [{"name": c.name, "status": c.status,
                        **({"witness": c.witness} if c.witness is not None else {})}
                       for c in self.checks],
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def run_suite(name: str, seed: int = 0, samples: int = 5) -> SuiteReport:
    if name != ALL and name not in _REGISTRY:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES + (ALL,))}")
    t0 = time.perf_counter()
    report = SuiteReport(name, seed, samples)
    for suite in (SUITES if name == ALL else (name,)):
        for cname, fn in _REGISTRY[suite]:
            full = f"{suite}.{cname}"
            rng = random.Random(f"{seed}:{full}")
            try:
                witness = fn(rng, samples)
            except Exception as exc:  # a crashing check is a failure, not a crash
                witness = {"error": f"{type(exc).__name__}: {exc}"}
            report.checks.append(CheckResult(full, "pass" if witness is None else "fail", witness))
    report.wall_time = time.perf_counter() - t0
    return report


# -- witness helpers ------------------------------------------------------------

def _vec(x) -> list:
    if isinstance(x, fmpq_mat):
        return [qstr(v) for v in x.entries()]
    if hasattr(x, "coords"):
        return [qstr(v) for v in x.coords]
    return qstr(x)


def _eq(lhs, rhs, **inputs):
    """None if lhs == rhs, otherwise a witness."""
    if lhs == rhs:
        return None
    w = {"inputs": {k: _vec(v) for k, v in inputs.items()}}
    if isinstance(lhs, fmpq_mat):
        n = lhs.ncols()
        for k, (a, b) in enumerate(zip(lhs.entries(), rhs.entries())):
            if a != b:
                w["entry"] = [k // n, k % n]
                w["lhs"], w["rhs"] = qstr(a), qstr(b)
                break
    elif hasattr(lhs, "coords"):
        w["lhs"], w["rhs"] = _vec(lhs), _vec(rhs)
    else:
        w["lhs"], w["rhs"] = qstr(lhs), qstr(rhs)
    return w


def _first(witnesses):
    for w in witnesses:
        if w is not None:
            return w
    return None


def _true(cond: bool, **info):
    return None if cond else {"inputs": {k: _vec(v) if not isinstance(v, (str, int)) else v
                                         for k, v in info.items()}}


# -- octonion ---------------------------------------------------------------------

@check("octonion", "composition")
def _oct_composition(rng, n):
    def one():
        x, y = random_octonion(rng), random_octonion(rng)
        return _eq(oct_norm(oct_mul(x, y)), oct_norm(x) * oct_norm(y), x=x, y=y)
    return _first(one() for _ in range(n))


@check("octonion", "alternativity")
def _oct_alternative(rng, n):
    def one():
        x, y = random_octonion(rng), random_octonion(rng)
        return _first([_eq(x * (x * y), (x * x) * y, x=x, y=y),
                       _eq((y * x) * x, y * (x * x), x=x, y=y)])
    return _first(one() for _ in range(n))


@check("octonion", "conjugation")
def _oct_conj(rng, n):
    def one():
        x, y = random_octonion(rng), random_octonion(rng)
        return _first([_eq((x * y).conj(), y.conj() * x.conj(), x=x, y=y),
                       _eq(x * x.conj(), Octonion.scalar(oct_norm(x)), x=x)])
    return _first(one() for _ in range(n))


@check("octonion", "isotropic_pair")
def _oct_isotropic(rng, n):
    def one(seed):
        a, b = isotropic_pair(seed)
        return _true((a * a).is_zero() and (b * b).is_zero() and oct_bilinear(a, b) != 0,
                     seed=seed)
    return _first(one(s) for s in range(n))


# -- albert ---------------------------------------------------------------------

@check("albert", "jordan_identity")
def _alb_jordan(rng, n):
    def one():
        x, y = albert.random_albert(rng, 2), albert.random_albert(rng, 2)
        x2 = x * x
        return _eq((x2 * y) * x, x2 * (y * x), x=x, y=y)
    return _first(one() for _ in range(n))


@check("albert", "trace_form_associative")
def _alb_assoc(rng, n):
    def one():
        x, y, z = (albert.random_albert(rng, 2) for _ in range(3))
        T = albert.trace_form
        return _eq(T(x * y, z), T(x, y * z), x=x, y=y, z=z)
    return _first(one() for _ in range(n))


@check("albert", "cross_calibration")
def _alb_cross(rng, n):
    e = AlbertElement.unit()
    out = [_eq(albert.cross(e, e), e), _eq(albert.det(e), fmpq(1))]
    for _ in range(n):
        a = [fmpq(rng.randint(-5, 5)) for _ in range(3)]
        d = AlbertElement.diag(*a)
        out.append(_eq(albert.det(d), a[0] * a[1] * a[2], x=d))
        out.append(_eq(albert.cross(d, d), AlbertElement.diag(a[1] * a[2], a[0] * a[2], a[0] * a[1]), x=d))
    return _first(out)


@check("albert", "trilinear_symmetry")
def _alb_tri(rng, n):
    def one():
        x, y, z = (albert.random_albert(rng, 2) for _ in range(3))
        t = albert.trilinear
        v = t(x, y, z)
        return _first(_eq(t(*p), v, x=x, y=y, z=z) for p in ((y, x, z), (x, z, y), (z, y, x)))
    return _first(one() for _ in range(n))


@check("albert", "cross_matrix")
def _alb_cross_matrix(rng, n):
    def one():
        x, y = albert.random_albert(rng, 2), albert.random_albert(rng, 2)
        return _eq(albert.cross_matrix(x) * y.column(), albert.cross(x, y).column(), x=x, y=y)
    return _first(one() for _ in range(n))


# -- brown --------------------------------------------------------------------

@check("brown", "structurable_identity")
def _br_structurable(rng, n):
    V = brown.v_operator

    def one():
        x, y, z, w = (brown.random_sparse_brown(rng, 6) for _ in range(4))
        vxy = V(x, y)
        lhs = ec.commutator(vxy, V(z, w))
        rhs = (V(BrownElement.from_column(vxy * z.column()), w)
               - V(z, BrownElement.from_column(V(y, x) * w.column())))
        return _eq(lhs, rhs, x=x, y=y, z=z, w=w)
    return _first(one() for _ in range(n))


@check("brown", "omega_t_symmetry")
def _br_sym(rng, n):
    def one():
        x, y, z, w = (brown.random_brown(rng, 2) for _ in range(4))
        f = lambda a, b, c, d: brown.omega_fast(a, brown.triple_t_fast(b, c, d).column())
        v = f(x, y, z, w)
        return _first(_eq(f(*p), v, x=x, y=y, z=z, w=w)
                      for p in ((y, x, z, w), (x, z, y, w), (x, y, w, z)))
    return _first(one() for _ in range(n))


@check("brown", "omega_defining_equation")
def _br_omega(rng, n):
    def one():
        x, y = brown.random_brown(rng, 2), brown.random_brown(rng, 2)
        m = brown.brown_mul
        lhs = m(m(x, brown.involution(y)) - m(y, brown.involution(x)), brown.s0())
        return _eq(lhs, brown.omega(x, y) * BrownElement.unit(), x=x, y=y)
    return _first(one() for _ in range(n))


@check("brown", "symplectic_basis")
def _br_basis(rng, n):
    bad = brown.symplectic_basis().failures()
    return None if not bad else {"failures": [list(map(str, f)) for f in bad[:5]]}


@check("brown", "l_derivation")
def _br_lderiv(rng, n):
    def one():
        a = albert.random_traceless(rng, 2)
        d = brown.l_deriv(a)
        x, y = brown.random_brown(rng, 2), brown.random_brown(rng, 2)
        dx, dy = (BrownElement.from_column(d * v.column()) for v in (x, y))
        xy = brown.brown_mul(x, y)
        return _eq(d * xy.column(), (brown.brown_mul(dx, y) + brown.brown_mul(x, dy)).column(),
                   a=a, x=x, y=y)
    return _first(one() for _ in range(n))


# -- cg ------------------------------------------------------------------------

def _rw(rng):
    return brown.random_sparse_brown(rng, 4).column()


def _random_wedge_sum(rng, k: int = 2) -> cg.WedgeSum:
    return cg.WedgeSum.from_pairs([(_rw(rng), _rw(rng)) for _ in range(k)])


@check("cg", "trace_lemma")
def _cg_trace(rng, n):
    def one():
        a, b = brown.random_brown(rng, 2), brown.random_brown(rng, 2)
        return _eq(ec.trace(cg.wedge(a, b)), 2 * brown.omega_fast(a, b), a=a, b=b)
    return _first(one() for _ in range(n))


@check("cg", "wedge_round_trip")
def _cg_round_trip(rng, n):
    def one():
        m = _random_wedge_sum(rng, 3)
        back = cg.wedge_decompose(m.matrix)
        return _first([_true(cg.is_omega_symmetric(m.matrix)), _eq(back.bivector, m.bivector)])
    return _first(one() for _ in range(n))


@check("cg", "fprime_paths")
def _cg_fprime(rng, n):
    def one():
        a, b, c, d = (_rw(rng) for _ in range(4))
        return _eq(cg.fprime(cg.wedge(a, b), cg.wedge(c, d)), cg.fprime_wedges(a, b, c, d),
                   a=a, b=b, c=c, d=d)
    return _first(one() for _ in range(n))


@check("cg", "l_operator_laws")
def _cg_l(rng, n):
    def one():
        a, b, c, d = (_rw(rng) for _ in range(4))
        lab = cg.l_op(a, b)
        return _first([_eq(lab, cg.l_op(b, a), a=a, b=b),
                       _true(cg.is_omega_antisymmetric(lab), a=a, b=b),
                       _true(cg.is_omega_symmetric(ec.jordan(cg.l_op(a, c), cg.l_op(b, d))),
                             a=a, b=b, c=c, d=d)])
    return _first(one() for _ in range(n))


@check("cg", "odot2_paths")
def _cg_odot2(rng, n):
    def one():
        a, b, c, d = (_rw(rng) for _ in range(4))
        return _eq(cg.odot2([(a, b)], [(c, d)]), cg.odot2_dual_basis(a, b, c, d), a=a, b=b, c=c, d=d)
    return _first(one() for _ in range(n))


@check("cg", "odot_closure")
def _cg_closure(rng, n):
    def one():
        a, b, c, d = (_rw(rng) for _ in range(4))
        m = cg.wedge(a, b) - cg.identity() * (brown.omega_fast(a, b) / 28)
        nn = cg.wedge(c, d) - cg.identity() * (brown.omega_fast(c, d) / 28)
        w = cg.WedgeSum.from_pairs([(a, b)]) - cg.identity_wedges() * (brown.omega_fast(a, b) / 28)
        return _first([_eq(ec.trace(cg.odot1(m, nn)), fmpq(0), a=a, b=b, c=c, d=d),
                       _eq(ec.trace(cg.odot2(w, nn)), fmpq(0), a=a, b=b, c=c, d=d)])
    return _first(one() for _ in range(max(1, n // 2)))


@check("cg", "star_generators")
def _cg_star_gen(rng, n):
    def one():
        a, b, c, d = (_rw(rng) for _ in range(4))
        return _eq(cg.star([(a, b)], [(c, d)]), cg.star_generators(a, b, c, d), a=a, b=b, c=c, d=d)
    return _first(one() for _ in range(n))


@check("cg", "star_commutative")
def _cg_comm(rng, n):
    def one():
        m, nn = _random_wedge_sum(rng), _random_wedge_sum(rng)
        return _eq(cg.star(m, nn), cg.star(nn, m), m=m.bivector, n=nn.bivector)
    return _first(one() for _ in range(n))


@check("cg", "star_unit")
def _cg_unit(rng, n):
    def one():
        m = _random_wedge_sum(rng, 1)
        return _eq(cg.star(cg.identity_wedges(), m), m.matrix, m=m.bivector)
    return _first(one() for _ in range(max(1, n // 2)))


@check("cg", "star_nonassociative")
def _cg_nonassoc(rng, n):
    for _ in range(10):
        m, nn, p = (_random_wedge_sum(rng, 1) for _ in range(3))
        if cg.star(cg.star(m, nn), p) != cg.star(m, cg.star(nn, p)):
            return None
    return {"detail": "no non-associativity witness in 10 draws"}


@check("cg", "equivariance")
def _cg_equivariance(rng, n):
    def one():
        x, y = albert.random_traceless(rng, 2), albert.random_traceless(rng, 2)
        d = brown.albert_to_brown_derivation(albert.derivation_comm(x, y))
        m, nn = _random_wedge_sum(rng, 1), _random_wedge_sum(rng, 1)
        lhs = cg.derivation_action(d, cg.star(m, nn))
        rhs = (cg.star(cg.derivation_action(d, m.matrix), nn)
               + cg.star(m, cg.derivation_action(d, nn.matrix)))
        return _eq(lhs, rhs, x=x, y=y, m=m.bivector, n=nn.bivector)
    return _first(one() for _ in range(max(1, n // 2)))


@check("cg", "counit")
def _cg_counit(rng, n):
    def one():
        a, b = _rw(rng), _rw(rng)
        return _eq(cg.counit(cg.wedge(a, b)), brown.omega_fast(a, b) / 28, a=a, b=b)
    return _first([_eq(cg.counit(cg.identity()), fmpq(1))] + [one() for _ in range(n)])


# -- gift ------------------------------------------------------------------------

@check("gift", "axioms")
def _gift_axioms(rng, n):
    results = gift.check_gift_axioms(rng.randrange(2**32), n)
    bad = [r for r in results if not r.passed]
    if not bad:
        return None
    return {r.name: {"detail": r.detail, **({"witness": r.witness} if r.witness else {})} for r in bad}


@check("gift", "sigma2_defining_equation")
def _gift_sigma2(rng, n):
    def one():
        u = gift.random_rank_one_pair(rng)
        x = gift.random_matrix(rng, 20)
        return _eq(gift.sand(gift.sigma2(u), x), gift.sand(u, gift.sigma_inv(x)), x=x)
    return _first(one() for _ in range(n))


@check("gift", "sigma_involution")
def _gift_sigma(rng, n):
    def one():
        m = gift.random_matrix(rng)
        a, b = _rw(rng), _rw(rng)
        lab = cg.l_op(a, b)
        return _first([_eq(gift.sigma_inv(gift.sigma_inv(m)), m, m=m),
                       _eq(gift.sigma_inv(lab), -lab, a=a, b=b),
                       _eq(gift.sigma_inv(cg.wedge(a, b)), cg.wedge(a, b), a=a, b=b)])
    return _first(one() for _ in range(n))


@check("gift", "phi_l_relations")
def _gift_phi_l(rng, n):
    def one():
        x, y, u, v = (_rw(rng) for _ in range(4))
        luv = cg.l_op(u, v)
        t = lambda z: luv * z
        return _first([_eq(gift.phi_omega(x, y) * luv, -gift.phi_omega(x, t(y)), x=x, y=y, u=u, v=v),
                       _eq(luv * gift.phi_omega(x, y), gift.phi_omega(t(x), y), x=x, y=y, u=u, v=v)])
    return _first(one() for _ in range(n))


@check("gift", "sandwich_expansion")
def _gift_sandwich(rng, n):
    def one():
        a, b, c, d = (_rw(rng) for _ in range(4))
        return _eq(gift.m_pi_pi_sigma2([(a, b)], [(c, d)]), gift.sandwich_expansion(a, b, c, d),
                   a=a, b=b, c=c, d=d)
    return _first(one() for _ in range(max(1, n // 2)))


@check("gift", "circledast_equals_star")
def _gift_equal(rng, n):
    def one():
        a, b, c, d = (_rw(rng) for _ in range(4))
        return _eq(gift.circledast([(a, b)], [(c, d)]), cg.star_generators(a, b, c, d),
                   a=a, b=b, c=c, d=d)
    return _first(one() for _ in range(n))


# -- pinned coefficients ---------------------------------------------------------

EXAMPLE_ODOT1 = (1, 1, 0, -4)
EXAMPLE_ODOT2 = (fmpq(9, 2), fmpq(9, 2), 4, fmpq(-73, 28))
EXAMPLE_STAR = (fmpq(1, 6), fmpq(1, 6), fmpq(1, 24), fmpq(-1, 36))


def example_coefficients(product, a: Octonion, b: Octonion, i: int):
    """Coefficients of the worked example, normalized by <a,b> and <a,b>^2."""
    terms = cg.example_terms(a, b, i)
    r = cg.decompose_example(product(terms.pairs[:1], terms.pairs[1:]), terms)
    if r is None:
        return None
    ab = terms.ab
    return (r[0] / ab, r[1] / ab, r[2] / ab**2, r[3] / ab**2)


def _example_check(product, expected, seeds):
    expected = tuple(fmpq(e) for e in expected)
    out = []
    for s in seeds:
        a, b = isotropic_pair(s)
        for i in (1, 2, 3):
            got = example_coefficients(product, a, b, i)
            if got != expected:
                out.append({"seed": s, "slot": i, "expected": [qstr(e) for e in expected],
                            "got": None if got is None else [qstr(g) for g in got]})
    return out[0] if out else None


@check("paper-coefficients", "odot1_example")
def _pc_odot1(rng, n):
    return _example_check(cg.odot1, EXAMPLE_ODOT1, range(2))


@check("paper-coefficients", "odot2_example")
def _pc_odot2(rng, n):
    return _example_check(cg.odot2, EXAMPLE_ODOT2, range(2))


@check("paper-coefficients", "star_example")
def _pc_star(rng, n):
    return _example_check(cg.star, EXAMPLE_STAR, range(2))


@check("paper-coefficients", "embedding_54")
def _pc_embedding(rng, n):
    def one(seed, i):
        a, _ = isotropic_pair(seed)
        L = brown.l_deriv(AlbertElement.slot(i, a))
        A, Ap = cg.slot_elements(a, i)
        return _eq(cg.sigma_S(L, L), cg.wedge(A, Ap) * 54, a=a)
    return _first(one(s, i) for s in range(2) for i in (1, 2, 3))


@check("paper-coefficients", "unit_parameters")
def _pc_unit(rng, n):
    c = cg.solve_unit_parameters(0)
    return _first([_eq(c.lam, fmpq(1, 32)), _eq(c.mu, fmpq(2))])


@check("paper-coefficients", "trace_lemma_factor_2")
def _pc_trace(rng, n):
    a, b = BrownElement.build(1), BrownElement.build(beta=1)
    return _eq(ec.trace(cg.wedge(a, b)), 2 * brown.omega_fast(a, b))


@check("paper-coefficients", "identity_half_sum")
def _pc_identity(rng, n):
    xs, ys = brown.dual_bases()
    half = cg.WedgeSum.from_pairs([(x.column(), y.column()) for x, y in zip(xs, ys)]) * fmpq(1, 2)
    return _eq(cg.wedge_decompose(cg.identity()).bivector, half.bivector)


@check("paper-coefficients", "g5_constant")
def _pc_g5(rng, n):
    r = gift.check_g5(rng, max(2, n // 2))
    return None if r.passed else r.witness


@check("paper-coefficients", "noninvariance")
def _pc_noninv(rng, n):
    w = cg.noninvariance_witness()
    return _true(cg.is_omega_antisymmetric(w.d) and w.nonzero
                 and w.coeff_diagonal != w.coeff_slot,
                 coeff_diagonal=w.coeff_diagonal, coeff_slot=w.coeff_slot)
