"""The split Albert algebra of 3x3 octonion-hermitian matrices.

Coordinates (27): the diagonal ``d1, d2, d3`` followed by the octonion
slots ``o1, o2, o3`` (8 each), where slot 1 sits at matrix position (2,3),
slot 2 at (3,1) and slot 3 at (1,2)::

    [[d1,      o3,      conj(o2)],
     [conj(o3), d2,     o1      ],
     [o2,      conj(o1), d3     ]]
"""

from __future__ import annotations

import random
from functools import cache

from flint import fmpq, fmpq_mat

from . import exact_core as ec
from .exact_core import HALF, Q
from .octonion import Octonion, oct_conj, random_octonion, scalar_part

DIM = 27
SLOT_OFFSET = (3, 11, 19)


class AlbertElement:
    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(Q(c) for c in coords)
        if len(coords) != DIM:
            raise ValueError(f"an Albert element has {DIM} coordinates, got {len(coords)}")
        self.coords = coords

    @classmethod
    def build(cls, d=(0, 0, 0), o1=None, o2=None, o3=None) -> "AlbertElement":
        zero = Octonion.zero()
        slots = [o or zero for o in (o1, o2, o3)]
        return cls((*d, *slots[0].coords, *slots[1].coords, *slots[2].coords))

    @classmethod
    def diag(cls, a1, a2, a3) -> "AlbertElement":
        return cls.build(d=(a1, a2, a3))

    @classmethod
    def slot(cls, i: int, a: Octonion) -> "AlbertElement":
        """The element a^(i) for i in {1, 2, 3}."""
        slots = [None, None, None]
        slots[i - 1] = a
        return cls.build(o1=slots[0], o2=slots[1], o3=slots[2])

    @classmethod
    def idempotent(cls, i: int) -> "AlbertElement":
        d = [0, 0, 0]
        d[i - 1] = 1
        return cls.diag(*d)

    @classmethod
    def unit(cls) -> "AlbertElement":
        return cls.diag(1, 1, 1)

    @classmethod
    def zero(cls) -> "AlbertElement":
        return cls((0,) * DIM)

    @classmethod
    def basis(cls, k: int) -> "AlbertElement":
        c = [0] * DIM
        c[k] = 1
        return cls(c)

    @classmethod
    def from_column(cls, col: fmpq_mat) -> "AlbertElement":
        return cls(col.entries())

    def column(self) -> fmpq_mat:
        return fmpq_mat(DIM, 1, list(self.coords))

    @property
    def d(self):
        return self.coords[:3]

    def octonion(self, i: int) -> Octonion:
        k = SLOT_OFFSET[i - 1]
        return Octonion(self.coords[k:k + 8])

    def __add__(self, other):
        return AlbertElement([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return AlbertElement([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return AlbertElement([-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, AlbertElement):
            return jordan_mul(self, other)
        s = Q(other)
        return AlbertElement([s * a for a in self.coords])

    def __rmul__(self, other):
        s = Q(other)
        return AlbertElement([s * a for a in self.coords])

    def __eq__(self, other):
        return isinstance(other, AlbertElement) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "AlbertElement(%s)" % ", ".join(str(c) for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)


def to_matrix3(x: AlbertElement) -> list[list[Octonion]]:
    d1, d2, d3 = (Octonion.scalar(s) for s in x.d)
    a, b, c = x.octonion(1), x.octonion(2), x.octonion(3)
    return [[d1, c, oct_conj(b)],
            [oct_conj(c), d2, a],
            [b, oct_conj(a), d3]]


def from_matrix3(m) -> AlbertElement:
    """Read the 27 coordinates back from a hermitian octonion matrix."""
    d = [scalar_part(m[i][i]) for i in range(3)]
    return AlbertElement.build(d=d, o1=m[1][2], o2=m[2][0], o3=m[0][1])


def _matmul3(x, y):
    out = []
    for i in range(3):
        out_row = []
        for k in range(3):
            acc = x[i][0] * y[0][k]
            acc = acc + x[i][1] * y[1][k]
            acc = acc + x[i][2] * y[2][k]
            out_row.append(acc)
        out.append(out_row)
    return out


def jordan_mul(x: AlbertElement, y: AlbertElement) -> AlbertElement:
    X, Y = to_matrix3(x), to_matrix3(y)
    XY, YX = _matmul3(X, Y), _matmul3(Y, X)
    s = [[(XY[i][k] + YX[i][k]) * HALF for k in range(3)] for i in range(3)]
    return from_matrix3(s)


def trace(x: AlbertElement) -> fmpq:
    return x.coords[0] + x.coords[1] + x.coords[2]


def trace_form(x: AlbertElement, y: AlbertElement) -> fmpq:
    return trace(jordan_mul(x, y))


def cross(x: AlbertElement, y: AlbertElement) -> AlbertElement:
    e = AlbertElement.unit()
    tx, ty = trace_form(x, e), trace_form(y, e)
    return (jordan_mul(x, y) - HALF * tx * y - HALF * ty * x
            - HALF * trace_form(x, y) * e + HALF * tx * ty * e)


def trilinear(x: AlbertElement, y: AlbertElement, z: AlbertElement) -> fmpq:
    return trace_form(cross(x, y), z) / 3


def det(x: AlbertElement) -> fmpq:
    return trilinear(x, x, x)


# -- operator forms ---------------------------------------------------------

@cache
def _jordan_stack() -> fmpq_mat:
    # row p holds L_op(e_p) flattened
    mats = []
    basis = [AlbertElement.basis(k) for k in range(DIM)]
    for p in range(DIM):
        cols = [jordan_mul(basis[p], basis[q]).coords for q in range(DIM)]
        mats.append(fmpq_mat(DIM, DIM, [cols[q][r] for r in range(DIM) for q in range(DIM)]))
    return ec.stack_flat(mats)


def _as_row(a) -> fmpq_mat:
    if isinstance(a, AlbertElement):
        return fmpq_mat(1, DIM, list(a.coords))
    return a.transpose() if a.ncols() == 1 else a


def L_op(a) -> fmpq_mat:
    """Matrix of x -> a . x in the 27 coordinates."""
    return ec.combine(_as_row(a), _jordan_stack(), DIM, DIM)


def L_comm(a, b) -> fmpq_mat:
    return ec.commutator(L_op(a), L_op(b))


@cache
def trace_row() -> fmpq_mat:
    return ec.row([1, 1, 1] + [0] * 24)


@cache
def gram() -> fmpq_mat:
    """Gram matrix of the trace form."""
    tr = trace_row()
    rows = []
    for p in range(DIM):
        rows.extend((tr * L_op(AlbertElement.basis(p))).entries())
    return fmpq_mat(DIM, DIM, rows)


@cache
def gram_inverse() -> fmpq_mat:
    return gram().inv()


def dual_basis() -> list[AlbertElement]:
    """u*_k with <e_j, u*_k> = delta_jk."""
    g = gram()
    sol = ec.solve_linear(g, ec.identity(DIM))
    return [AlbertElement([sol[r, k] for r in range(DIM)]) for k in range(DIM)]


def cross_matrix(a) -> fmpq_mat:
    """Matrix of y -> a x y, from the closed cross-product formula."""
    col = a.column() if isinstance(a, AlbertElement) else a
    tr = trace_row()
    e = AlbertElement.unit().column()
    ta = (tr * col)[0, 0]
    m = L_op(col) - ec.identity(DIM) * (HALF * ta)
    m -= (col * tr) * HALF
    m -= (e * (col.transpose() * gram())) * HALF
    m += (e * tr) * (HALF * ta)
    return m


def indicator_I(i: int) -> fmpq_mat:
    """Trace-form orthogonal projection onto the slot {a^(i)}."""
    if i not in (1, 2, 3):
        raise ValueError(f"slot index must be 1, 2 or 3, got {i}")
    m = fmpq_mat(DIM, DIM)
    k = SLOT_OFFSET[i - 1]
    for r in range(k, k + 8):
        m[r, r] = 1
    return m


def diagonal_projector() -> fmpq_mat:
    m = fmpq_mat(DIM, DIM)
    for r in range(3):
        m[r, r] = 1
    return m


def derivation_L(a: AlbertElement) -> fmpq_mat:
    """L_a as a derivation of the cubic form; requires <a, e> = 0."""
    if trace(a) != 0:
        raise ValueError(f"derivation generator needs <a, e> = 0, got {trace(a)}")
    return L_op(a)


def derivation_comm(a: AlbertElement, b: AlbertElement) -> fmpq_mat:
    for x in (a, b):
        if trace(x) != 0:
            raise ValueError(f"derivation generator needs <a, e> = 0, got {trace(x)}")
    return L_comm(a, b)


def random_albert(rng: random.Random, bound: int = 4) -> AlbertElement:
    d = [rng.randint(-bound, bound) for _ in range(3)]
    o = [random_octonion(rng, bound) for _ in range(3)]
    return AlbertElement.build(d=d, o1=o[0], o2=o[1], o3=o[2])


def random_traceless(rng: random.Random, bound: int = 4) -> AlbertElement:
    x = random_albert(rng, bound)
    d1, d2, _ = x.d
    return AlbertElement((d1, d2, -d1 - d2) + x.coords[3:])
