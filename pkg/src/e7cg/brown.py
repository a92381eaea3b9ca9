"""The Brown algebra k + J + J + k and its Freudenthal triple system.

Coordinates (56): ``alpha`` (index 0), the Albert element ``j``
(1..27), the Albert element ``jp`` (28..54) and ``beta`` (55).

Element-level functions (``brown_mul``, ``omega``, ``v_triple``,
``triple_t``) follow the defining formulas literally.  The ``*_matrix``
and ``*_operator`` functions give the same maps as 56x56 matrices and are
what the heavier modules use.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cache

from flint import fmpq, fmpq_mat

from . import albert
from . import exact_core as ec
from .albert import AlbertElement
from .exact_core import Q

DIM = 56
J0, JP0, BETA = 1, 28, 55
AD = albert.DIM


class BrownElement:
    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(Q(c) for c in coords)
        if len(coords) != DIM:
            raise ValueError(f"a Brown element has {DIM} coordinates, got {len(coords)}")
        self.coords = coords

    @classmethod
    def build(cls, alpha=0, j=None, jp=None, beta=0) -> "BrownElement":
        j = j or AlbertElement.zero()
        jp = jp or AlbertElement.zero()
        return cls((alpha, *j.coords, *jp.coords, beta))

    @classmethod
    def unit(cls) -> "BrownElement":
        return cls.build(1, None, None, 1)

    @classmethod
    def zero(cls) -> "BrownElement":
        return cls((0,) * DIM)

    @classmethod
    def basis(cls, k: int) -> "BrownElement":
        c = [0] * DIM
        c[k] = 1
        return cls(c)

    @classmethod
    def from_column(cls, col: fmpq_mat) -> "BrownElement":
        return cls(col.entries())

    def column(self) -> fmpq_mat:
        return fmpq_mat(DIM, 1, list(self.coords))

    @property
    def alpha(self):
        return self.coords[0]

    @property
    def j(self) -> AlbertElement:
        return AlbertElement(self.coords[J0:JP0])

    @property
    def jp(self) -> AlbertElement:
        return AlbertElement(self.coords[JP0:BETA])

    @property
    def beta(self):
        return self.coords[BETA]

    def __add__(self, other):
        return BrownElement([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return BrownElement([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return BrownElement([-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, BrownElement):
            return brown_mul(self, other)
        s = Q(other)
        return BrownElement([s * a for a in self.coords])

    def __rmul__(self, other):
        s = Q(other)
        return BrownElement([s * a for a in self.coords])

    def __eq__(self, other):
        return isinstance(other, BrownElement) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        nz = {i: str(c) for i, c in enumerate(self.coords) if c}
        return f"BrownElement({nz})"

    def is_zero(self) -> bool:
        return not any(self.coords)


def as_column(x) -> fmpq_mat:
    return x.column() if isinstance(x, BrownElement) else x


def as_element(x) -> BrownElement:
    return x if isinstance(x, BrownElement) else BrownElement.from_column(x)


# -- definitional element operations ----------------------------------------

def brown_mul(x: BrownElement, y: BrownElement) -> BrownElement:
    a1, j1, jp1, b1 = x.alpha, x.j, x.jp, x.beta
    a2, j2, jp2, b2 = y.alpha, y.j, y.jp, y.beta
    T = albert.trace_form
    return BrownElement.build(
        a1 * a2 + T(j1, jp2),
        a1 * j2 + b2 * j1 + 2 * albert.cross(jp1, jp2),
        a2 * jp1 + b1 * jp2 + 2 * albert.cross(j1, j2),
        b1 * b2 + T(j2, jp1),
    )


def involution(x: BrownElement) -> BrownElement:
    c = list(x.coords)
    c[0], c[BETA] = c[BETA], c[0]
    return BrownElement(c)


def s0() -> BrownElement:
    return BrownElement.build(1, None, None, -1)


def omega(x: BrownElement, y: BrownElement) -> fmpq:
    T = albert.trace_form
    return (x.alpha * y.beta - y.alpha * x.beta
            + T(x.j, y.jp) - T(x.jp, y.j))


def v_triple(x: BrownElement, y: BrownElement, z: BrownElement) -> BrownElement:
    """{x, y, z} = (x ybar) z + (z ybar) x - (z xbar) y."""
    yb, xb = involution(y), involution(x)
    return (brown_mul(brown_mul(x, yb), z) + brown_mul(brown_mul(z, yb), x)
            - brown_mul(brown_mul(z, xb), y))


def triple_t(x: BrownElement, y: BrownElement, z: BrownElement) -> BrownElement:
    sy = brown_mul(s0(), y)
    return (2 * v_triple(x, sy, z) - omega(y, z) * x
            - omega(y, x) * z - omega(x, z) * y)


# -- operator forms -----------------------------------------------------------

def _blocks_to_matrix(blocks) -> fmpq_mat:
    """Assemble a 56x56 matrix from non-overlapping (row0, col0, block) pieces.

    A block is an fmpq_mat or a scalar (a single entry).
    """
    entries = [fmpq(0)] * (DIM * DIM)
    for r0, c0, blk in blocks:
        if isinstance(blk, fmpq_mat):
            n, m = blk.nrows(), blk.ncols()
            vals = blk.entries()
            for r in range(n):
                base = (r0 + r) * DIM + c0
                entries[base:base + m] = vals[r * m:(r + 1) * m]
        else:
            entries[r0 * DIM + c0] = Q(blk)
    return fmpq_mat(DIM, DIM, entries)


class _Parts:
    """Pieces of an element reused by its left and right multiplication matrices."""

    __slots__ = ("a", "b", "j", "jp", "gj", "gjp", "cj", "cjp")

    def __init__(self, x, cross_j=None, cross_jp=None):
        c = as_element(x).coords
        g = albert.gram()
        self.a, self.b = c[0], c[BETA]
        self.j = fmpq_mat(AD, 1, list(c[J0:JP0]))
        self.jp = fmpq_mat(AD, 1, list(c[JP0:BETA]))
        self.gj = self.j.transpose() * g
        self.gjp = self.jp.transpose() * g
        self.cj = albert.cross_matrix(self.j) * 2 if cross_j is None else cross_j
        self.cjp = albert.cross_matrix(self.jp) * 2 if cross_jp is None else cross_jp

    def twisted(self, sa, sjp, sb, swap=False) -> "_Parts":
        """Parts of (sa*alpha, j, sjp*j', sb*beta), optionally with alpha, beta swapped."""
        out = object.__new__(_Parts)
        a, b = (self.b, self.a) if swap else (self.a, self.b)
        out.a, out.b = sa * a, sb * b
        out.j, out.gj, out.cj = self.j, self.gj, self.cj
        if sjp == 1:
            out.jp, out.gjp, out.cjp = self.jp, self.gjp, self.cjp
        else:
            out.jp, out.gjp, out.cjp = -self.jp, -self.gjp, -self.cjp
        return out


def _left(p: _Parts) -> fmpq_mat:
    return _blocks_to_matrix([
        (0, 0, p.a), (0, JP0, p.gj),
        (J0, J0, _scaled_identity(p.a)), (J0, BETA, p.j), (J0, JP0, p.cjp),
        (JP0, 0, p.jp), (JP0, JP0, _scaled_identity(p.b)), (JP0, J0, p.cj),
        (BETA, BETA, p.b), (BETA, J0, p.gjp),
    ])


def _right(p: _Parts) -> fmpq_mat:
    return _blocks_to_matrix([
        (0, 0, p.a), (0, J0, p.gjp),
        (J0, 0, p.j), (J0, J0, _scaled_identity(p.b)), (J0, JP0, p.cjp),
        (JP0, JP0, _scaled_identity(p.a)), (JP0, BETA, p.jp), (JP0, J0, p.cj),
        (BETA, BETA, p.b), (BETA, JP0, p.gj),
    ])


def _scaled_identity(s) -> fmpq_mat:
    return ec.identity(AD) * Q(s)


def left_mul_matrix(x) -> fmpq_mat:
    """Matrix of y -> x y."""
    return _left(_Parts(x))


def right_mul_matrix(y) -> fmpq_mat:
    """Matrix of x -> x y."""
    return _right(_Parts(y))


@cache
def involution_matrix() -> fmpq_mat:
    m = ec.identity(DIM)
    m[0, 0] = m[BETA, BETA] = 0
    m[0, BETA] = m[BETA, 0] = 1
    return m


@cache
def omega_gram() -> fmpq_mat:
    """Omega with omega(x, y) = x^T Omega y."""
    g = albert.gram()
    return _blocks_to_matrix([
        (0, BETA, 1), (BETA, 0, -1),
        (J0, JP0, g), (JP0, J0, -g),
    ])


@cache
def omega_gram_inverse() -> fmpq_mat:
    return omega_gram().inv()


def omega_fast(x, y) -> fmpq:
    return (as_column(x).transpose() * omega_gram() * as_column(y))[0, 0]


def omega_row(x) -> fmpq_mat:
    """Row vector of z -> omega(x, z)."""
    return as_column(x).transpose() * omega_gram()


def mul_fast(x, y) -> fmpq_mat:
    return left_mul_matrix(x) * as_column(y)


def v_operator(x, y) -> fmpq_mat:
    """Matrix of z -> {x, y, z}."""
    return _v_from_parts(_Parts(x), _Parts(y))


def _v_from_parts(px: _Parts, py: _Parts) -> fmpq_mat:
    # the involution swaps alpha and beta and leaves both Albert slots alone
    pyb, pxb = py.twisted(1, 1, 1, swap=True), px.twisted(1, 1, 1, swap=True)
    u = _left(px) * _column_of(pyb)
    return (_left(_Parts(u)) + _right(px) * _right(pyb) - _right(py) * _right(pxb))


def _column_of(p: _Parts) -> fmpq_mat:
    return fmpq_mat(DIM, 1, [p.a, *p.j.entries(), *p.jp.entries(), p.b])


@cache
def s0_matrix() -> fmpq_mat:
    return left_mul_matrix(s0())


def t_operator(x, y) -> fmpq_mat:
    """Matrix of z -> t(x, y, z) = 2{x, s0 y, z} - w(y,z)x - w(y,x)z - w(x,z)y."""
    x, y = as_column(x), as_column(y)
    px = _Parts(x)
    # s0 y = (alpha, j, -j', -beta)
    psy = _Parts(y).twisted(1, -1, -1)
    w = omega_fast(y, x)
    return (_v_from_parts(px, psy) * 2 - x * omega_row(y)
            - ec.identity(DIM) * w - y * omega_row(x))


def triple_t_fast(x, y, z) -> BrownElement:
    return BrownElement.from_column(t_operator(x, y) * as_column(z))


def albert_to_brown_derivation(d: fmpq_mat) -> fmpq_mat:
    """Lift a derivation X of the cubic form: j -> X j, j' -> -X* j'.

    X* is the trace-form adjoint; the lift is a derivation of the Brown
    algebra (and of omega and t).
    """
    g, gi = albert.gram(), albert.gram_inverse()
    adj = gi * d.transpose() * g
    return _blocks_to_matrix([(J0, J0, d), (JP0, JP0, -adj)])


def l_deriv(a: AlbertElement) -> fmpq_mat:
    """The derivation (alpha, j, j', beta) -> (0, a.j, -a.j', 0)."""
    la = albert.derivation_L(a)
    return _blocks_to_matrix([(J0, J0, la), (JP0, JP0, -la)])


def indicator_II(i: int) -> fmpq_mat:
    p = albert.indicator_I(i)
    return _blocks_to_matrix([(J0, J0, p), (JP0, JP0, p)])


# -- symplectic bases -----------------------------------------------------------

@dataclass(frozen=True)
class SymplecticBasis:
    pairs: tuple

    def failures(self) -> list[tuple]:
        """All (kind, i, j, value) violating omega(x_i, y_j) = delta_ij etc."""
        om = omega_gram()
        xs = [p[0].column() for p in self.pairs]
        ys = [p[1].column() for p in self.pairs]
        bad = []
        n = len(self.pairs)
        for i in range(n):
            rx, ry = xs[i].transpose() * om, ys[i].transpose() * om
            for k in range(n):
                vxx = (rx * xs[k])[0, 0]
                vyy = (ry * ys[k])[0, 0]
                vxy = (rx * ys[k])[0, 0]
                if vxx != 0:
                    bad.append(("xx", i, k, vxx))
                if vyy != 0:
                    bad.append(("yy", i, k, vyy))
                if vxy != (1 if i == k else 0):
                    bad.append(("xy", i, k, vxy))
        return bad


@cache
def symplectic_basis() -> SymplecticBasis:
    pairs = [(BrownElement.build(1), BrownElement.build(beta=1))]
    for u, ustar in zip((AlbertElement.basis(k) for k in range(AD)), albert.dual_basis()):
        pairs.append((BrownElement.build(j=u), BrownElement.build(jp=ustar)))
    return SymplecticBasis(tuple(pairs))


@cache
def dual_bases() -> tuple[tuple, tuple]:
    """A basis {x_i} of W (56 vectors) and its omega-dual {y_i}."""
    pairs = symplectic_basis().pairs
    xs = [p[0] for p in pairs] + [p[1] for p in pairs]
    ys = [p[1] for p in pairs] + [-p[0] for p in pairs]
    return tuple(xs), tuple(ys)


def random_brown(rng: random.Random, bound: int = 3) -> BrownElement:
    return BrownElement.build(
        rng.randint(-bound, bound),
        albert.random_albert(rng, bound),
        albert.random_albert(rng, bound),
        rng.randint(-bound, bound),
    )


def random_sparse_brown(rng: random.Random, terms: int = 4, bound: int = 3) -> BrownElement:
    c = [0] * DIM
    for _ in range(terms):
        c[rng.randrange(DIM)] += rng.choice([k for k in range(-bound, bound + 1) if k])
    return BrownElement(c)
