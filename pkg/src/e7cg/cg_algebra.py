"""The commutative algebra on omega-symmetric endomorphisms of the Brown algebra.

Elements are 56x56 rational matrices (``fmpq_mat``) that are symmetric
with respect to omega.  Every such matrix is a sum of wedges
``a^b : z -> w(a,z) b - w(b,z) a``; ``WedgeSum`` stores the coordinates in
the basis ``e_p ^ e_q`` (p < q) as a skew 56x56 "bivector" matrix ``S`` with
``M = -S Omega``.

Products defined on wedges (the L-bilinear part of the star product and of
odot_2) are extended bilinearly through a short symplectic decomposition of
each argument into at most 28 wedges.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cache, cached_property

from flint import fmpq, fmpq_mat

from . import albert, brown
from . import exact_core as ec
from .albert import AlbertElement
from .brown import BrownElement, as_column, omega_fast, omega_gram, omega_gram_inverse
from .exact_core import HALF, Q
from .octonion import Octonion, isotropic_pair

DIM = brown.DIM
NWEDGE = DIM * (DIM - 1) // 2

STAR_L = fmpq(1, 96)
STAR_JORDAN = fmpq(23, 192)
STAR_TRACE = fmpq(1, 32)
STAR_UNIT = fmpq(1, 288)
ODOT2_UNIT = fmpq(11, 28)


class NotOmegaSymmetric(ValueError):
    def __init__(self, p: int, q: int, lhs, rhs):
        super().__init__(f"not omega-symmetric: w(M e_{p}, e_{q}) = {lhs} but w(e_{p}, M e_{q}) = {rhs}")
        self.witness = (p, q, lhs, rhs)


# -- wedge basis indexing -------------------------------------------------------

@cache
def _pair_table() -> tuple:
    return tuple((p, q) for p in range(DIM) for q in range(p + 1, DIM))


@cache
def _index_table() -> dict:
    return {pq: k for k, pq in enumerate(_pair_table())}


def wedge_index(p: int, q: int) -> int:
    if not (0 <= p < q < DIM):
        raise IndexError(f"need 0 <= p < q < {DIM}, got ({p}, {q})")
    return _index_table()[(p, q)]


def wedge_pair(k: int) -> tuple[int, int]:
    if not 0 <= k < NWEDGE:
        raise IndexError(f"wedge index {k} out of range [0, {NWEDGE})")
    return _pair_table()[k]


# -- wedges and WedgeSum --------------------------------------------------------

def wedge(a, b) -> fmpq_mat:
    """Matrix of z -> w(a, z) b - w(b, z) a."""
    a, b = as_column(a), as_column(b)
    return (b * a.transpose() - a * b.transpose()) * omega_gram()


def is_omega_symmetric(m: fmpq_mat) -> bool:
    om = omega_gram()
    return m.transpose() * om == om * m


def is_omega_antisymmetric(m: fmpq_mat) -> bool:
    om = omega_gram()
    return m.transpose() * om == -(om * m)


def _symmetry_witness(m: fmpq_mat):
    om = omega_gram()
    lhs, rhs = m.transpose() * om, om * m
    for p in range(DIM):
        for q in range(DIM):
            if lhs[p, q] != rhs[p, q]:
                return p, q, lhs[p, q], rhs[p, q]
    return None


class WedgeSum:
    """An omega-symmetric operator in wedge coordinates.

    ``bivector`` is the skew matrix S with S[p, q] the coefficient of
    e_p ^ e_q for p < q.
    """

    def __init__(self, bivector: fmpq_mat, terms=None):
        self.bivector = bivector
        if terms is not None:
            self.__dict__["terms"] = tuple(terms)

    @classmethod
    def from_pairs(cls, pairs) -> "WedgeSum":
        pairs = [(as_column(a), as_column(b)) for a, b in pairs]
        s = fmpq_mat(DIM, DIM)
        for a, b in pairs:
            s += a * b.transpose() - b * a.transpose()
        return cls(s, pairs)

    @classmethod
    def from_coords(cls, coords) -> "WedgeSum":
        """From a dict {(p, q): c} or a length-1540 sequence."""
        s = fmpq_mat(DIM, DIM)
        items = coords.items() if isinstance(coords, dict) else (
            (wedge_pair(k), c) for k, c in enumerate(coords))
        for (p, q), c in items:
            c = Q(c)
            if p > q:
                p, q, c = q, p, -c
            s[p, q] += c
            s[q, p] -= c
        return cls(s)

    @classmethod
    def from_matrix(cls, m: fmpq_mat) -> "WedgeSum":
        return wedge_decompose(m)

    @cached_property
    def matrix(self) -> fmpq_mat:
        return -(self.bivector * omega_gram())

    @cached_property
    def terms(self) -> tuple:
        return tuple(symplectic_terms(self.bivector))

    def coords(self) -> dict:
        s = self.bivector
        out = {}
        for p in range(DIM):
            for q in range(p + 1, DIM):
                if s[p, q] != 0:
                    out[(p, q)] = s[p, q]
        return out

    def vector(self) -> list:
        s = self.bivector
        return [s[p, q] for p, q in _pair_table()]

    def coefficient(self, p: int, q: int):
        return self.bivector[p, q]

    def __add__(self, other):
        return WedgeSum(self.bivector + other.bivector)

    def __sub__(self, other):
        return WedgeSum(self.bivector - other.bivector)

    def __mul__(self, c):
        return WedgeSum(self.bivector * Q(c))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, WedgeSum) and self.bivector == other.bivector

    def __repr__(self):
        return f"WedgeSum({len(self.coords())} nonzero coordinates)"


def wedge_decompose(m: fmpq_mat) -> WedgeSum:
    """Wedge coordinates of an omega-symmetric matrix (closed form S = (M Omega^-1)^T)."""
    w = _symmetry_witness(m)
    if w is not None:
        raise NotOmegaSymmetric(*w)
    return WedgeSum((m * omega_gram_inverse()).transpose())


def symplectic_terms(s: fmpq_mat) -> list:
    """Write a skew matrix S as sum of a b^T - b a^T with at most rank/2 terms."""
    s = fmpq_mat(s)
    terms = []
    while True:
        vals = s.entries()
        k = next((k for k, v in enumerate(vals) if v), None)
        if k is None:
            return terms
        i, j = divmod(k, DIM)
        c = vals[k]
        col_i = fmpq_mat(DIM, 1, vals[i::DIM])
        col_j = fmpq_mat(DIM, 1, vals[j::DIM])
        a, b = col_i / c, col_j
        s = s - (a * b.transpose() - b * a.transpose())
        terms.append((a, b))


def as_wedge_sum(m) -> WedgeSum:
    if isinstance(m, WedgeSum):
        return m
    if isinstance(m, (list, tuple)):
        return WedgeSum.from_pairs(m)
    return wedge_decompose(m)


def as_matrix(m) -> fmpq_mat:
    if isinstance(m, WedgeSum):
        return m.matrix
    if isinstance(m, (list, tuple)):
        return WedgeSum.from_pairs(m).matrix
    return m


@cache
def identity() -> fmpq_mat:
    return ec.identity(DIM)


@cache
def identity_wedges() -> WedgeSum:
    """id_W as the sum of x_i ^ y_i over the 28 symplectic pairs."""
    pairs = [(x.column(), y.column()) for x, y in brown.symplectic_basis().pairs]
    return WedgeSum.from_pairs(pairs)


# -- L operators, f' and the elementary products ------------------------------

def l_op(a, b) -> fmpq_mat:
    """L_{a,b} : z -> t(a, b, z)."""
    return brown.t_operator(a, b)


def fprime(m, n) -> fmpq:
    return ec.trace(as_matrix(m) * as_matrix(n)) * HALF


def fprime_wedges(a, b, c, d) -> fmpq:
    w = omega_fast
    return w(a, c) * w(b, d) - w(a, d) * w(b, c)


def counit(m) -> fmpq:
    return ec.trace(as_matrix(m)) / DIM


def jordan_sum_generators(a, b, c, d) -> fmpq_mat:
    """w(a,c) b^d + w(b,d) a^c - w(a,d) b^c - w(b,c) a^d."""
    w = omega_fast
    return (wedge(b, d) * w(a, c) + wedge(a, c) * w(b, d)
            - wedge(b, c) * w(a, d) - wedge(a, d) * w(b, c))


def odot1_generators(a, b, c, d) -> fmpq_mat:
    return jordan_sum_generators(a, b, c, d) - identity() * (4 * fprime_wedges(a, b, c, d))


def odot1(m, n) -> fmpq_mat:
    m, n = as_matrix(m), as_matrix(n)
    return ec.jordan(m, n) * 2 - identity() * (4 * fprime(m, n))


def j2_generators(a, b, c, d) -> fmpq_mat:
    """L_{a,c} . L_{b,d} - L_{a,d} . L_{b,c} (operator Jordan products)."""
    return (ec.jordan(l_op(a, c), l_op(b, d)) - ec.jordan(l_op(a, d), l_op(b, c)))


def j2(m, n) -> fmpq_mat:
    """Bilinear extension of ``j2_generators`` over wedge decompositions."""
    tm, tn = as_wedge_sum(m).terms, as_wedge_sum(n).terms
    out = fmpq_mat(DIM, DIM)
    for a, b in tm:
        for c, d in tn:
            out += j2_generators(a, b, c, d)
    return out


def odot2_generators(a, b, c, d) -> fmpq_mat:
    return j2_generators(a, b, c, d) + identity() * (ODOT2_UNIT * fprime_wedges(a, b, c, d))


def _dual_basis_wedge_sum(p: fmpq_mat, q: fmpq_mat) -> fmpq_mat:
    """sum_i (P x_i) ^ (Q y_i) over a basis {x_i} and its omega-dual {y_i}."""
    xs, ys = brown.dual_bases()
    x = fmpq_mat(DIM, DIM, [v for col in zip(*(e.coords for e in xs)) for v in col])
    y = fmpq_mat(DIM, DIM, [v for col in zip(*(e.coords for e in ys)) for v in col])
    px, qy = p * x, q * y
    return (qy * px.transpose() - px * qy.transpose()) * omega_gram()


def odot2_dual_basis(a, b, c, d) -> fmpq_mat:
    """odot_2 on generators through the dual-basis expansion of L . L."""
    lac, lbd, lad, lbc = l_op(a, c), l_op(b, d), l_op(a, d), l_op(b, c)
    s = (_dual_basis_wedge_sum(lac, lbd) + _dual_basis_wedge_sum(lbd, lac)
         - _dual_basis_wedge_sum(lad, lbc) - _dual_basis_wedge_sum(lbc, lad))
    return s * fmpq(-1, 4) + identity() * (ODOT2_UNIT * fprime_wedges(a, b, c, d))


def odot2(m, n) -> fmpq_mat:
    return j2(m, n) + identity() * (ODOT2_UNIT * fprime(m, n))


# -- the star product ---------------------------------------------------------------

def star_generators(a, b, c, d) -> fmpq_mat:
    """a^b * c^d by the generator formula."""
    w = omega_fast
    wab, wcd = w(a, b), w(c, d)
    return (j2_generators(a, b, c, d) * STAR_L
            + jordan_sum_generators(a, b, c, d) * STAR_JORDAN
            + (wedge(c, d) * wab + wedge(a, b) * wcd) * STAR_TRACE
            + identity() * (STAR_UNIT * (2 * wab * wcd + fprime_wedges(a, b, c, d))))


def star(m, n) -> fmpq_mat:
    """The star product of two omega-symmetric operators."""
    mm, nn = as_matrix(m), as_matrix(n)
    tm, tn = ec.trace(mm), ec.trace(nn)
    tmn = ec.trace(mm * nn)
    return (j2(m, n) * STAR_L
            + ec.jordan(mm, nn) * (2 * STAR_JORDAN)
            + (nn * tm + mm * tn) * fmpq(1, 64)
            + identity() * (STAR_UNIT * (HALF * tm * tn + HALF * tmn)))


def derivation_action(d: fmpq_mat, m) -> fmpq_mat:
    """Induced action of a derivation of omega on operators: [D, M]."""
    return ec.commutator(d, as_matrix(m))


# -- embedding of S(XY) and the worked example ---------------------------------------

def sigma_S(x: fmpq_mat, y: fmpq_mat) -> fmpq_mat:
    return ec.jordan(x, y) * 108 - identity() * (fmpq(3, 2) * ec.trace(x * y))


def slot_elements(a: Octonion, i: int) -> tuple[BrownElement, BrownElement]:
    """(0, a^(i); 0, 0) and (0, 0; a^(i), 0)."""
    ai = AlbertElement.slot(i, a)
    return BrownElement.build(j=ai), BrownElement.build(jp=ai)


@dataclass(frozen=True)
class ExampleTerms:
    """The four operators the worked examples are written in."""

    m: fmpq_mat          # A ^ A'
    n: fmpq_mat          # B ^ B'
    w1: fmpq_mat         # A ^ B'
    w2: fmpq_mat         # B ^ A'
    indicators: fmpq_mat  # II_j + II_k
    ab: fmpq             # <a, b>
    pairs: tuple


def example_terms(a: Octonion, b: Octonion, i: int) -> ExampleTerms:
    A, Ap = slot_elements(a, i)
    B, Bp = slot_elements(b, i)
    j, k = [s for s in (1, 2, 3) if s != i]
    from .octonion import oct_bilinear
    return ExampleTerms(
        m=wedge(A, Ap), n=wedge(B, Bp), w1=wedge(A, Bp), w2=wedge(B, Ap),
        indicators=brown.indicator_II(j) + brown.indicator_II(k),
        ab=oct_bilinear(a, b),
        pairs=((A.column(), Ap.column()), (B.column(), Bp.column())),
    )


def decompose_example(x: fmpq_mat, terms: ExampleTerms):
    """Coefficients (c_w1, c_w2, c_ind, c_id) with x = c_w1 w1 + c_w2 w2 + c_ind (II_j+II_k) + c_id id.

    Returns None when x is not in that span.
    """
    cols = [terms.w1, terms.w2, terms.indicators, identity()]
    a = fmpq_mat(DIM * DIM, 4, [v for vals in zip(*(c.entries() for c in cols)) for v in vals])
    sol = ec.solve_linear(a, fmpq_mat(DIM * DIM, 1, x.entries()))
    if sol is None:
        return None
    return tuple(sol[r, 0] for r in range(4))


# -- unit parameters -------------------------------------------------------------

@dataclass(frozen=True)
class StarCoefficients:
    lam: fmpq
    mu: fmpq
    nu1: fmpq
    nu2: fmpq


def _idunit_family(a, b, c, d):
    """(P, Q_lambda, Q_mu) with a^b * c^d = P + lambda Q_lambda + mu Q_mu."""
    w = omega_fast
    wab, wcd = w(a, b), w(c, d)
    fp = fprime_wedges(a, b, c, d)
    p = (j2_generators(a, b, c, d) * STAR_L
         + jordan_sum_generators(a, b, c, d) * STAR_JORDAN
         + identity() * (STAR_UNIT * fp))
    q_lam = wedge(c, d) * wab + wedge(a, b) * wcd
    q_mu = identity() * (STAR_UNIT * wab * wcd)
    return p, q_lam, q_mu


def _columns(*mats) -> fmpq_mat:
    return fmpq_mat(DIM * DIM, len(mats), [v for vals in zip(*(m.entries() for m in mats)) for v in vals])


def solve_unit_parameters(seed: int = 0) -> StarCoefficients:
    """Fix lambda, mu in the two-parameter family by requiring id_W to be the unit."""
    rng = random.Random(seed)
    while True:
        a = brown.random_sparse_brown(rng, terms=3)
        b = brown.random_sparse_brown(rng, terms=3)
        if omega_fast(a, b) != 0:
            break
    a, b = a.column(), b.column()
    p = q_lam = q_mu = fmpq_mat(DIM, DIM)
    for c, d in identity_wedges().terms:
        dp, dl, dm = _idunit_family(a, b, c, d)
        p, q_lam, q_mu = p + dp, q_lam + dl, q_mu + dm
    ab = wedge(a, b)
    wab = omega_fast(a, b)
    nu = ec.solve_linear(_columns(ab, identity()), fmpq_mat(DIM * DIM, 1, p.entries()))
    if nu is None:
        raise ArithmeticError("parameter-free part is not in span{a^b, id}")
    nu1, pi2 = nu[0, 0], nu[1, 0]
    lam = (1 - nu1) / 28
    # a^b * id = (28 lam + nu1) a^b + w(a,b) (7/72 mu + nu2) id
    nu2 = pi2 / wab + lam
    mu = -fmpq(72, 7) * nu2
    direct = ec.solve_linear(_columns(q_lam, q_mu), fmpq_mat(DIM * DIM, 1, (ab - p).entries()))
    if direct is None or (direct[0, 0], direct[1, 0]) != (lam, mu):
        raise ArithmeticError(f"unit equations inconsistent: {direct} vs ({lam}, {mu})")
    return StarCoefficients(lam, mu, nu1, nu2)


# -- non-invariance under the full symplectic algebra -------------------------------

@dataclass(frozen=True)
class NonInvarianceWitness:
    d: fmpq_mat
    x: fmpq_mat
    dx: fmpq_mat
    coeff_diagonal: fmpq   # coefficient of (1 0;0 0) ^ (0 0;0 1)
    coeff_slot: fmpq       # coefficient of (0 e^(j);0 0) ^ (0 0;e^(j) 0)

    @property
    def nonzero(self) -> bool:
        return not ec.is_zero(self.dx)


def swap_derivation(j: int) -> fmpq_mat:
    """omega-antisymmetric operator exchanging (1,0,0,0) <-> (0,e^(j),0,0) and
    (0,0,0,1) <-> (0,0,e^(j),0) up to the scalars antisymmetry forces,
    zero on the omega-complement of their span."""
    e = Octonion.unit()
    u1, u2 = BrownElement.build(1), BrownElement.build(beta=1)
    v1, v2 = slot_elements(e, j)
    span = [u1, u2, v1, v2]
    c = omega_fast(v1, v2)
    images = [v1, v2, -c * u1, -c * u2]
    s_rows = fmpq_mat(4, DIM, [v for s in span for v in brown.omega_row(s).entries()])
    g = fmpq_mat(4, 4, [omega_fast(s, t) for s in span for t in span])
    img = fmpq_mat(DIM, 4, [v for vals in zip(*(x.coords for x in images)) for v in vals])
    return img * g.inv() * s_rows


def noninvariance_witness(i: int = 1, j: int = 2, seed: int = 0) -> NonInvarianceWitness:
    a, b = isotropic_pair(seed)
    terms = example_terms(a, b, i)
    x = odot2(terms.pairs[:1], terms.pairs[1:])
    d = swap_derivation(j)
    dx = derivation_action(d, x)
    # coefficients in the basis where e^(j) replaces the first octonion coordinate of slot j
    v1, v2 = slot_elements(Octonion.unit(), j)
    k = 1 + albert.SLOT_OFFSET[j - 1]
    kp = k + albert.DIM
    basis = ec.identity(DIM)
    for r in range(DIM):
        basis[r, k] = v1.coords[r]
        basis[r, kp] = v2.coords[r]
    binv = basis.inv()
    c = binv * wedge_decompose(x).bivector * binv.transpose()
    return NonInvarianceWitness(d, x, dx, c[0, DIM - 1], c[k, kp])


# -- dimension checks (mod p) -------------------------------------------------------

def wedge_span_rank(p: int = ec.DEFAULT_PRIME) -> int:
    """Rank of the 1540 basis wedges e_p ^ e_q, flattened, reduced mod p."""
    rows = [ec.flatten(wedge(ec.column([int(r == a) for r in range(DIM)]),
                             ec.column([int(r == b) for r in range(DIM)])))
            for a, b in _pair_table()]
    return ec.rank_mod_p(rows, p)


def symmetric_subspace_dimension(p: int = ec.DEFAULT_PRIME) -> int:
    """dim {M : M^T Omega = Omega M}, as 3136 minus the rank of that map mod p."""
    ec.check_prime(p)
    om = [[ec._mod_p(v, p) for v in omega_gram().entries()[r * DIM:(r + 1) * DIM]] for r in range(DIM)]
    n2 = DIM * DIM
    rows = []
    for i in range(DIM):
        for j in range(DIM):
            img = [0] * n2
            for c in range(DIM):          # (E_ij)^T Omega: row j is row i of Omega
                img[j * DIM + c] += om[i][c]
            for r in range(DIM):          # Omega E_ij: column j is column i of Omega
                img[r * DIM + j] -= om[r][i]
            rows.extend(v % p for v in img)
    return n2 - ec.nmod_mat(n2, n2, rows, p).rank()
