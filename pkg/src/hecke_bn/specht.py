"""
Dipper-James-Murphy Specht modules of the type B_n Hecke algebra and their
identification with Kazhdan-Lusztig left cell modules (asymptotic order).

For ``lambda = (lambda1|lambda2)`` with ``l = |lambda1|``:

* ``x_lambda = V^-l v^(l(sigma_lambda) - l(l-1)) T_{sigma_l} C_{a_l sigma_lambda}``;
* ``x_s = T_{d(s)} x_lambda`` for standard bitableaux ``s``;
* the distinguished cell is ``{d(t) sigma_lambda a_l}``, and ``G_lambda``
  collects the coefficients of ``T_{d(t)} C_{sigma_lambda a_l}`` on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cells import CellModule, cell_module, cell_partition
from .hecke import GENERIC, HeckeElt, T, invert_T, mul_gen_left
from .kl import KLTable
from .laurent import ONE, ZERO, Laurent2, V, v
from .linalg import (
    Matrix, det, inverse_unitriangular, matmul, rref_fraction_free, zeros,
)
from .signed_perm import (
    SignedPerm, bruhat_leq, length, special_elements,
)
from .tableaux import (
    Bipartition, Bitableau, conjugate, d_of, dominance_leq,
    row_standard_bitableaux, sigma_lambda, standard_bitableaux, type_of,
)

__all__ = [
    "GMatrix", "x_lambda", "zeta_lambda", "n_ideal_membership", "g_matrix",
    "specht_matrices", "specht_matrices_direct", "phi_lambda", "base_element",
]


def _require_asymptotic(table: KLTable) -> None:
    if table.order.kind != "asymptotic" or table.weights != GENERIC:
        raise ValueError("Specht modules are identified with cells only in the asymptotic case")


def base_element(lam: Bipartition) -> SignedPerm:
    """``sigma_lambda a_l``."""
    return sigma_lambda(lam) * special_elements(lam.n, lam.l)[0]


def _x_scalar(lam: Bipartition) -> Laurent2:
    l = lam.l
    return V ** -l * v ** (length(sigma_lambda(lam)) - l * (l - 1))


def x_lambda(lam: Bipartition, table: KLTable) -> HeckeElt:
    """``x_lambda``; both ``T_{sigma_l} C_{a_l sigma_lambda}`` and
    ``C_{sigma_lambda a_l} T_{sigma_l}`` are formed and must agree."""
    _require_asymptotic(table)
    n, l = lam.n, lam.l
    a_l, sigma_l, _ = special_elements(n, l)
    s_lam = sigma_lambda(lam)
    left = T(sigma_l) * table.c(a_l * s_lam)
    right = table.c(s_lam * a_l) * T(sigma_l)
    if left != right:
        raise AssertionError(f"T_sigma_l C_(a_l sigma) != C_(sigma a_l) T_sigma_l for {lam}")
    return left.scale(_x_scalar(lam))


def zeta_lambda(lam: Bipartition) -> HeckeElt:
    """Right multiplier sending ``x_lambda`` to ``C_{sigma_lambda a_l}``:
    ``V^l v^(l(l-1) - l(sigma_lambda)) T_{sigma_l}^-1``."""
    _, sigma_l, _ = special_elements(lam.n, lam.l)
    return invert_T(sigma_l).scale(_x_scalar(lam) ** -1)


def _dominated_type(nu: Bipartition) -> Bipartition:
    """``(nu2 | nu1*)``."""
    return Bipartition(nu.second, conjugate(nu.first))


def n_ideal_membership(h: HeckeElt, lam: Bipartition, table: KLTable,
                       strict: bool = False) -> bool:
    """Membership of ``h`` in ``N^lambda`` (or ``N-hat^lambda`` when ``strict``).

    ``N^lambda`` is spanned by the ``C_y`` whose type ``(nu1|nu2)`` satisfies
    ``lambda <= (nu2|nu1*)`` in dominance; strictness excludes equality.
    """
    _require_asymptotic(table)
    hc = h if h.basis == "C" else table.to_c_basis(h)
    return all(_in_ideal(y, lam, strict) for y in hc.coeffs)


@lru_cache(maxsize=None)
def _in_ideal(y: SignedPerm, lam: Bipartition, strict: bool) -> bool:
    mu = _dominated_type(type_of(y))
    return dominance_leq(lam, mu) and not (strict and mu == lam)


@dataclass
class GMatrix:
    """Matrix of the canonical map from the Specht module to the cell module.

    Rows and columns are indexed by ``tableaux`` (standard, ordered by
    ``d(t)``); column ``t`` holds the coordinates of ``phi(x_t)``.
    """
    lam: Bipartition
    tableaux: list[Bitableau]
    entries: Matrix

    def __getitem__(self, key: tuple[int, int]) -> Laurent2:
        r, c = key
        return self.entries[r][c]

    def unit_diagonal(self) -> bool:
        return all(self.entries[i][i] == ONE for i in range(len(self.tableaux)))

    def bruhat_support(self) -> bool:
        ds = [d_of(t) for t in self.tableaux]
        return all(
            not self.entries[r][c] or bruhat_leq(ds[r], ds[c])
            for r in range(len(ds)) for c in range(len(ds))
        )

    def offdiag_in_vinv(self) -> bool:
        """Off-diagonal entries lie in ``v^-1 Z[v^-1]``."""
        return all(
            i == 0 and j <= -1
            for r, row in enumerate(self.entries)
            for c, x in enumerate(row) if r != c
            for (i, j), _ in x.items()
        )

    def upper_unitriangular(self) -> bool:
        return self.unit_diagonal() and all(
            not self.entries[r][c] for r in range(len(self.entries)) for c in range(r)
        )

    def det(self) -> Laurent2:
        return det(self.entries)


@lru_cache(maxsize=None)
def _left_cells(table: KLTable):
    return cell_partition(table.n, table.order, "left", table)


def distinguished_cell_module(lam: Bipartition, table: KLTable) -> CellModule:
    """Cell module of ``C_lambda`` with basis ``e_{d(s) sigma_lambda a_l}``
    ordered like ``T(lambda)``."""
    base = base_element(lam)
    basis = [d_of(t) * base for t in standard_bitableaux(lam)]
    return cell_module(basis, table, basis)


def g_matrix(lam: Bipartition, table: KLTable) -> GMatrix:
    _require_asymptotic(table)
    tabs = standard_bitableaux(lam)
    base = base_element(lam)
    cell_elems = [d_of(t) * base for t in tabs]
    pos = {w: k for k, w in enumerate(cell_elems)}
    kl_cell = set(_left_cells(table).cell_of(base))
    row_std = {d_of(s) * base for s in row_standard_bitableaux(lam)}
    c_base = table.c(base)
    g = zeros(len(tabs), len(tabs))
    for col, t in enumerate(tabs):
        prod = table.to_c_basis(T(d_of(t)) * c_base)
        for z, coeff in prod.coeffs.items():
            if z not in row_std:
                raise AssertionError(f"C_{z} outside d(T^r) sigma a_l in column {t}")
            if z in pos:
                g[pos[z]][col] = coeff
            elif z in kl_cell:
                raise AssertionError(
                    f"support element {z} lies in the cell but is not indexed by a standard tableau")
    return GMatrix(lam, tabs, g)


def specht_matrices(lam: Bipartition, table: KLTable) -> dict[int, Matrix]:
    """``T_s`` on the standard basis ``{x_s}``: ``G^-1 rho_cell(T_s) G``."""
    gm = g_matrix(lam, table)
    rho = distinguished_cell_module(lam, table).matrices
    ginv = inverse_unitriangular(gm.entries)
    return {i: matmul(ginv, matmul(m, gm.entries)) for i, m in rho.items()}


def specht_matrices_direct(lam: Bipartition, table: KLTable) -> dict[int, Matrix]:
    """``T_s`` on ``{x_s}`` computed inside ``H / N-hat^lambda`` without the
    cell module: expand ``T_s x_t`` in the C-basis, drop ``N-hat^lambda`` and
    solve against the images of the ``x_u``."""
    _require_asymptotic(table)
    tabs = standard_bitableaux(lam)
    xl = x_lambda(lam, table)

    def reduce(h: HeckeElt) -> dict[SignedPerm, Laurent2]:
        hc = table.to_c_basis(h)
        return {y: c for y, c in hc.coeffs.items() if not _in_ideal(y, lam, True)}

    xs = [T(d_of(t)) * xl for t in tabs]
    images = [reduce(x) for x in xs]
    coords = sorted({y for im in images for y in im}, key=lambda y: (length(y), y))
    k = len(tabs)
    out = {}
    for i in range(lam.n):
        m = zeros(k, k)
        for col, x in enumerate(xs):
            target = reduce(mul_gen_left(i, x))
            extra = set(target) - set(coords)
            if extra:
                raise AssertionError(f"T_s x_t leaves the span of the x_u: {extra}")
            rows = [[im.get(y, ZERO) for im in images] + [target.get(y, ZERO)] for y in coords]
            R, pivots, D = rref_fraction_free(rows)
            if pivots != list(range(k)):
                raise AssertionError("x_u are dependent modulo N-hat, or T_s x_t is not in their span")
            for r in range(k):
                m[r][col] = R[r][k].exact_div(D)
        out[i] = m
    return out


def phi_lambda(coords: list[Laurent2], lam: Bipartition, table: KLTable,
               g: GMatrix | None = None) -> list[Laurent2]:
    """Specht standard-basis coordinates to cell-module coordinates."""
    g = g or g_matrix(lam, table)
    return [sum((g.entries[r][c] * x for c, x in enumerate(coords)), ZERO)
            for r in range(len(coords))]
