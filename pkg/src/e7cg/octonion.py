"""Split octonions in the Zorn vector-matrix model.

An octonion is a block ``[[alpha, v], [w, beta]]`` with scalar corners and
3-vectors ``v``, ``w``.  Coordinates are stored in the order
``(alpha, v1, v2, v3, w1, w2, w3, beta)``.
"""

from __future__ import annotations

import random

from flint import fmpq

from .exact_core import Q

DIM = 8


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


class Octonion:
    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(Q(c) for c in coords)
        if len(coords) != DIM:
            raise ValueError(f"an octonion has {DIM} coordinates, got {len(coords)}")
        self.coords = coords

    @classmethod
    def zorn(cls, alpha, v, w, beta) -> "Octonion":
        return cls((alpha, *v, *w, beta))

    @classmethod
    def unit(cls) -> "Octonion":
        return cls((1, 0, 0, 0, 0, 0, 0, 1))

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * DIM)

    @classmethod
    def scalar(cls, s) -> "Octonion":
        return cls((s, 0, 0, 0, 0, 0, 0, s))

    @classmethod
    def basis(cls, i: int) -> "Octonion":
        c = [0] * DIM
        c[i] = 1
        return cls(c)

    @property
    def alpha(self):
        return self.coords[0]

    @property
    def v(self):
        return self.coords[1:4]

    @property
    def w(self):
        return self.coords[4:7]

    @property
    def beta(self):
        return self.coords[7]

    def __add__(self, other):
        return Octonion([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return Octonion([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Octonion([-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        s = Q(other)
        return Octonion([s * a for a in self.coords])

    def __rmul__(self, other):
        s = Q(other)
        return Octonion([s * a for a in self.coords])

    def __eq__(self, other):
        return isinstance(other, Octonion) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "Octonion(%s)" % ", ".join(str(c) for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def conj(self) -> "Octonion":
        return oct_conj(self)

    def norm(self):
        return oct_norm(self)


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    a1, v1, w1, b1 = x.alpha, x.v, x.w, x.beta
    a2, v2, w2, b2 = y.alpha, y.v, y.w, y.beta
    ww = _cross(w1, w2)
    vv = _cross(v1, v2)
    return Octonion.zorn(
        a1 * a2 + _dot(v1, w2),
        [a1 * v2[i] + b2 * v1[i] - ww[i] for i in range(3)],
        [a2 * w1[i] + b1 * w2[i] + vv[i] for i in range(3)],
        b1 * b2 + _dot(w1, v2),
    )


def oct_conj(x: Octonion) -> Octonion:
    return Octonion.zorn(x.beta, [-c for c in x.v], [-c for c in x.w], x.alpha)


def oct_norm(x: Octonion) -> fmpq:
    return x.alpha * x.beta - _dot(x.v, x.w)


def oct_bilinear(x: Octonion, y: Octonion) -> fmpq:
    """Polar form N(x+y) - N(x) - N(y); <1, 1> = 2."""
    return x.alpha * y.beta + y.alpha * x.beta - _dot(x.v, y.w) - _dot(y.v, x.w)


def scalar_part(x: Octonion) -> fmpq:
    """Half the linear trace, i.e. s when x = s*1."""
    return (x.alpha + x.beta) / 2


def random_octonion(rng: random.Random, bound: int = 5) -> Octonion:
    return Octonion([rng.randint(-bound, bound) for _ in range(DIM)])


def isotropic_pair(seed: int = 0) -> tuple[Octonion, Octonion]:
    """Octonions a, b with a*a = b*b = 0 and <a, b> != 0.

    Seed 0 gives the coordinate pair with <a, b> = -1; other seeds sample
    trace-zero, norm-zero octonions (which square to zero).
    """
    if seed == 0:
        return (Octonion.zorn(0, (1, 0, 0), (0, 0, 0), 0),
                Octonion.zorn(0, (0, 0, 0), (1, 0, 0), 0))
    rng = random.Random(seed)
    while True:
        a = _square_zero(rng)
        b = _square_zero(rng)
        if oct_bilinear(a, b) != 0:
            return a, b


def _square_zero(rng: random.Random) -> Octonion:
    # x^2 = t(x) x - N(x) 1, so trace and norm both zero gives x^2 = 0.
    while True:
        alpha = fmpq(rng.randint(-3, 3))
        v = [fmpq(rng.randint(-3, 3)) for _ in range(3)]
        w = [fmpq(rng.randint(-3, 3)) for _ in range(3)]
        vv = _dot(v, v)
        if vv == 0:
            continue
        lam = (-alpha * alpha - _dot(v, w)) / vv
        w = [w[i] + lam * v[i] for i in range(3)]
        x = Octonion.zorn(alpha, v, w, -alpha)
        if not x.is_zero():
            return x
