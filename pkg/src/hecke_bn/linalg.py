"""
Exact matrices over A = Z[V^+-1, v^+-1] and its fraction field K.

Elimination is fraction-free: every intermediate entry stays in A and each
step divides exactly by the previous pivot (Bareiss), so no rational
function arithmetic is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .laurent import ONE, ZERO, Laurent2

__all__ = [
    "Matrix", "RationalMatrix", "zeros", "eye", "matmul", "matsub", "matadd",
    "scalar_mul", "det", "rref_fraction_free", "nullspace", "inverse_unitriangular",
    "transpose", "mat_str", "normalize_vector", "solve_square",
]

Matrix = list[list[Laurent2]]


def zeros(r: int, c: int) -> Matrix:
    return [[ZERO] * c for _ in range(r)]


def eye(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ValueError("shape mismatch")
    out = zeros(len(a), len(b[0]) if b else 0)
    for i, row in enumerate(a):
        for k, x in enumerate(row):
            if not x:
                continue
            for j, y in enumerate(b[k]):
                if y:
                    out[i][j] = out[i][j] + x * y
    return out


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def scalar_mul(c: Laurent2, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def mat_str(a: Matrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in a]


def det(a: Matrix) -> Laurent2:
    """Determinant by Bareiss elimination."""
    n = len(a)
    m = [list(row) for row in a]
    sign = 1
    prev = ONE
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k]), None)
        if p is None:
            return ZERO
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = ZERO
        prev = m[k][k]
    return prev * sign


def rref_fraction_free(rows: Sequence[Sequence[Laurent2]]) -> tuple[Matrix, list[int], Laurent2]:
    """Fraction-free Gauss-Jordan form.

    Returns ``(R, pivot_cols, D)``: in ``R`` every pivot row ``i`` has the
    common pivot value ``D`` in column ``pivot_cols[i]`` and zeros in the
    other pivot columns; the remaining rows are zero and dropped.
    """
    m = [list(r) for r in rows if any(r)]
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    prev = ONE
    r = 0
    for c in range(ncols):
        cands = [i for i in range(r, len(m)) if m[i][c]]
        if not cands:
            continue
        p = min(cands, key=lambda i: len(m[i][c]))
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(len(m)):
            if i == r:
                continue
            f = m[i][c]
            m[i] = [(piv * x - f * y).exact_div(prev) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        prev = piv
        r += 1
        if r == len(m):
            break
    return m[:r], pivots, prev


def normalize_vector(vec: Sequence[Laurent2]) -> list[Laurent2]:
    """Canonical representative of ``vec`` up to scalars.

    If some entry divides all the others (shortest entries tried first), the
    vector is divided by it so that entry becomes 1. Otherwise the integer
    content and the componentwise minimal monomial are removed.
    """
    nz = [x for x in vec if x]
    if not nz:
        return list(vec)
    for d in sorted(nz, key=len):
        try:
            return [x.exact_div(d) for x in vec]
        except ArithmeticError:
            continue
    g = 0
    for x in nz:
        for _, c in x.items():
            g = gcd(g, c)
    i0 = min(x.min_exponents()[0] for x in nz)
    j0 = min(x.min_exponents()[1] for x in nz)
    lead = nz[0].sorted_terms()[0][1]
    unit = Laurent2({(i0, j0): g if lead > 0 else -g})
    return [x.exact_div(unit) for x in vec]


def nullspace(rows: Sequence[Sequence[Laurent2]], ncols: int | None = None) -> list[list[Laurent2]]:
    """Basis over K of ``{x : rows . x = 0}``, each vector with entries in A."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[ONE if j == f else ZERO for j in range(ncols)] for f in range(ncols)]
    R, pivots, D = rref_fraction_free(rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec = [ZERO] * ncols
        vec[f] = D
        for row, c in zip(R, pivots):
            vec[c] = -row[f]
        basis.append(normalize_vector(vec))
    return basis


def solve_square(a: Matrix, b: Sequence[Laurent2]) -> tuple[list[Laurent2], Laurent2]:
    """Solve ``a x = b`` over K for invertible ``a``: returns ``(num, den)``
    with ``x = num / den`` and ``den`` in A."""
    n = len(a)
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    R, pivots, D = rref_fraction_free(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular over K")
    return [row[n] for row in R], D


def inverse_unitriangular(a: Matrix) -> Matrix:
    """Inverse of a matrix that is unitriangular after some simultaneous
    permutation of rows and columns; stays in A."""
    n = len(a)
    out = []
    for j in range(n):
        e = [ONE if i == j else ZERO for i in range(n)]
        num, den = solve_square(a, e)
        out.append([x.exact_div(den) for x in num])
    return transpose(out)


@dataclass
class RationalMatrix:
    """A matrix over K stored as entrywise ``numerator / denominator``."""
    num: Matrix
    den: Matrix

    @classmethod
    def from_A(cls, m: Matrix) -> RationalMatrix:
        return cls([list(r) for r in m], [[ONE] * len(r) for r in m])

    def __post_init__(self):
        if any(not d for row in self.den for d in row):
            raise ZeroDivisionError("zero denominator")

    def is_integral(self) -> bool:
        return all(d == ONE for row in self.den for d in row)

    def to_A(self) -> Matrix:
        return [[x.exact_div(d) for x, d in zip(r, s)] for r, s in zip(self.num, self.den)]

    def equals_up_to_scalar(self, other: Matrix) -> Laurent2 | None:
        """If ``self = c * other`` for a unit ``c`` of A, return ``c``."""
        mine = self.to_A()
        c = None
        for r, s in zip(mine, other):
            for x, y in zip(r, s):
                if bool(x) != bool(y):
                    return None
                if not x:
                    continue
                if c is None:
                    if len(x) != len(y) or len(y) == 0:
                        return None
                    try:
                        c = x.exact_div(y)
                    except ArithmeticError:
                        return None
                    if len(c) != 1 or abs(c.sorted_terms()[0][1]) != 1:
                        return None
                if c * y != x:
                    return None
        return c
