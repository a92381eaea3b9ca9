"""Exact scalars and dense matrices.

Scalars are ``flint.fmpq`` (arbitrary precision rationals, always reduced,
positive denominator).  Matrices are ``flint.fmpq_mat``.  The helpers here
add shape checking, conversions and a few eliminations that flint does not
expose in the form we need.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from flint import fmpq, fmpq_mat, fmpz, nmod_mat

Scalar = fmpq
Matrix = fmpq_mat

ZERO = fmpq(0)
ONE = fmpq(1)
HALF = fmpq(1, 2)

# 2**61 - 1 is prime and fits a machine word, as nmod_mat requires.
DEFAULT_PRIME = 2305843009213693951
MIN_PRIME = 19


class ShapeError(ValueError):
    pass


def Q(x) -> fmpq:
    """Coerce ints, Fractions, fmpz and "p/q" strings to an exact rational."""
    if isinstance(x, fmpq):
        return x
    if isinstance(x, (int, fmpz)):
        return fmpq(x)
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    if isinstance(x, str):
        f = Fraction(x.strip())
        return fmpq(f.numerator, f.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def to_fraction(x: fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


def qstr(x) -> str:
    """Serialize a rational as "p/q" (denominator always written)."""
    x = Q(x)
    return f"{int(x.p)}/{int(x.q)}"


def shape(a: Matrix) -> tuple[int, int]:
    return a.nrows(), a.ncols()


def zeros(n: int, m: int | None = None) -> Matrix:
    return fmpq_mat(n, n if m is None else m)


def identity(n: int) -> Matrix:
    a = fmpq_mat(n, n)
    for i in range(n):
        a[i, i] = 1
    return a


def from_rows(rows: Sequence[Sequence]) -> Matrix:
    n = len(rows)
    m = len(rows[0]) if n else 0
    if any(len(r) != m for r in rows):
        raise ShapeError("ragged rows")
    return fmpq_mat(n, m, [Q(v) for r in rows for v in r])


def column(values: Sequence) -> Matrix:
    return fmpq_mat(len(values), 1, [Q(v) for v in values])


def row(values: Sequence) -> Matrix:
    return fmpq_mat(1, len(values), [Q(v) for v in values])


def reshape(a: Matrix, n: int, m: int) -> Matrix:
    if a.nrows() * a.ncols() != n * m:
        raise ShapeError(f"cannot reshape {shape(a)} to {(n, m)}")
    return fmpq_mat(n, m, a.entries())


def flatten(a: Matrix) -> Matrix:
    """Row-major flattening to a 1 x (n*m) row."""
    return fmpq_mat(1, a.nrows() * a.ncols(), a.entries())


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols() != b.nrows():
        raise ShapeError(f"cannot multiply {shape(a)} by {shape(b)}")
    return a * b


def trace(a: Matrix) -> fmpq:
    if a.nrows() != a.ncols():
        raise ShapeError(f"trace of non-square matrix {shape(a)}")
    t = fmpq(0)
    for i in range(a.nrows()):
        t += a[i, i]
    return t


def jordan(a: Matrix, b: Matrix) -> Matrix:
    """Operator Jordan product (ab + ba)/2."""
    return (mat_mul(a, b) + b * a) * HALF


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_mul(a, b) - b * a


def outer(u: Matrix, v: Matrix) -> Matrix:
    """u v^T for column vectors u, v."""
    return u * v.transpose()


def is_zero(a: Matrix) -> bool:
    return a == fmpq_mat(a.nrows(), a.ncols())


def stack_flat(mats: Sequence[Matrix]) -> Matrix:
    """Stack matrices as rows of a (len, n*m) matrix."""
    if not mats:
        raise ShapeError("nothing to stack")
    n, m = shape(mats[0])
    entries = []
    for a in mats:
        if shape(a) != (n, m):
            raise ShapeError(f"mixed shapes {(n, m)} and {shape(a)}")
        entries.extend(a.entries())
    return fmpq_mat(len(mats), n * m, entries)


def combine(coeffs: Matrix, stack: Matrix, n: int, m: int) -> Matrix:
    """sum_k coeffs[k] * M_k for M_k stored flattened in the rows of ``stack``."""
    return reshape(coeffs * stack, n, m)


def _mod_p(x: fmpq, p: int) -> int:
    num, den = int(x.p), int(x.q)
    if den % p == 0:
        raise ZeroDivisionError(f"denominator {den} not invertible mod {p}")
    return num * pow(den, -1, p) % p


def check_prime(p: int) -> None:
    if p <= MIN_PRIME:
        raise ValueError(f"prime must exceed {MIN_PRIME}, got {p}")
    if not fmpz(p).is_prime():
        raise ValueError(f"{p} is not prime")


def rank_mod_p(vectors: Iterable, p: int = DEFAULT_PRIME) -> int:
    """Rank of the span of ``vectors`` reduced mod ``p``.

    Vectors may be sequences of rationals or fmpq_mat objects (flattened).
    The result is a lower bound for the rank over the rationals.
    """
    check_prime(p)
    rows = []
    width = None
    for v in vectors:
        vals = v.entries() if isinstance(v, fmpq_mat) else [Q(x) for x in v]
        if width is None:
            width = len(vals)
        elif len(vals) != width:
            raise ShapeError(f"vector of length {len(vals)}, expected {width}")
        rows.extend(_mod_p(x, p) for x in vals)
    if width is None or width == 0:
        return 0
    return nmod_mat(len(rows) // width, width, rows, p).rank()


def rank_mod_p_matrix(a: Matrix, p: int = DEFAULT_PRIME) -> int:
    check_prime(p)
    if a.nrows() == 0 or a.ncols() == 0:
        return 0
    return nmod_mat(a.nrows(), a.ncols(), [_mod_p(x, p) for x in a.entries()], p).rank()


def solve_linear(a: Matrix, b: Matrix) -> Matrix | None:
    """Exact solution x of a x = b, or None when the system is inconsistent.

    ``a`` may be rectangular or singular; free variables are set to zero.
    ``b`` is a column (or a block of columns solved simultaneously).
    """
    n, m = shape(a)
    if b.nrows() != n:
        raise ShapeError(f"right-hand side {shape(b)} does not match {shape(a)}")
    k = b.ncols()
    if n == m and a.rank() == n:
        return a.solve(b)
    aug = fmpq_mat(n, m + k)
    for i in range(n):
        for j in range(m):
            aug[i, j] = a[i, j]
        for j in range(k):
            aug[i, m + j] = b[i, j]
    r, rk = aug.rref()
    x = fmpq_mat(m, k)
    for i in range(rk):
        lead = next(j for j in range(m + k) if r[i, j] != 0)
        if lead >= m:
            return None
        for j in range(k):
            x[lead, j] = r[i, m + j]
    return x


def inverse(a: Matrix) -> Matrix:
    return a.inv()
