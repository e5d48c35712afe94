"""
Verification suites. Each suite returns a :class:`SuiteReport` made of named
checks; a check carries the first counterexample found when it fails.

Suites: ``kl`` (well-formedness of the KL basis), ``thm3`` (G_lambda and the
Specht/cell isomorphism), ``cells-rs`` (cells versus Robinson-Schensted and
the Clifford normal form), ``counterexample`` (the rank 3 weighted example)
and ``identities``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Callable

from .cells import cell_module, cell_partition, hom_space
from .hecke import T, bar_involution, flat
from .kl import get_table
from .laurent import (
    ASYMPTOTIC, WEIGHTED_11, ZERO, Laurent2, is_negative, is_unit, v,
)
from .linalg import Matrix, det, eye, matmul, mat_str
from .signed_perm import (
    SignedPerm, bruhat_leq, clifford_form, coset_reps_Y, enumerate_group, from_word, generate,
    is_left_descent, length, special_elements, t_length, young_subgroup,
)
from .specht import (
    base_element, distinguished_cell_module, g_matrix, specht_matrices_direct, x_lambda,
)
from .tableaux import (
    Bipartition, bipartitions, conjugate, d_of, distinguished_cell, rs,
    standard_bitableaux, type_of,
)

__all__ = ["Check", "SuiteReport", "SUITES", "run_suite", "B3_EXAMPLE"]


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    n: int
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> Check:
        c = Check(name, bool(ok), detail)
        self.checks.append(c)
        return c

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.ok), None)

    def lines(self) -> list[str]:
        out = [f"[{'PASS' if c.ok else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else "")
               for c in self.checks]
        out.append(f"{self.suite} n={self.n}: {'PASS' if self.ok else 'FAIL'} "
                   f"({sum(c.ok for c in self.checks)}/{len(self.checks)})")
        return out


def _first(items, pred) -> object | None:
    return next((x for x in items if not pred(x)), None)


# -- KL basis ------------------------------------------------------------

def suite_kl(n: int, orders=(ASYMPTOTIC, WEIGHTED_11), cache_dir=None) -> SuiteReport:
    rep = SuiteReport("kl", n)
    group = enumerate_group(n, force=True)
    for order in orders:
        table = get_table(n, order, cache_dir=cache_dir).fill()
        desc = order.descriptor()
        bad = _first(group, lambda w: bar_involution(table.c(w)) == table.c(w))
        rep.add(f"bar(C_w) = C_w [{desc}]", bad is None, f"fails at {bad}" if bad else "")
        bad = _first(
            [(y, w) for w in group for y in table.c_coeffs(w) if y != w],
            lambda yw: is_negative(table.pstar(*yw), order))
        rep.add(f"p* in A_<0 [{desc}]", bad is None, f"fails at {bad}" if bad else "")
        bad = _first(
            [(y, w) for w in group for y in table.c_coeffs(w)],
            lambda yw: bruhat_leq(*yw))
        rep.add(f"p*_(y,w) = 0 unless y <= w [{desc}]", bad is None, f"fails at {bad}" if bad else "")
        if n <= 3:
            pairs = [(w, i) for w in group for i in range(n) if is_left_descent(i, w)]
            bad = _first(pairs, lambda wi: table.c_via_descent(*wi) == table.c_coeffs(wi[0]))
            rep.add(f"descent-choice independence [{desc}]", bad is None,
                    f"fails at {bad}" if bad else "")
    return rep


# -- Theorem on G_lambda -------------------------------------------------

def suite_thm3(n: int, cache_dir=None) -> SuiteReport:
    rep = SuiteReport("thm3", n)
    table = get_table(n, ASYMPTOTIC, cache_dir=cache_dir)
    one_dims = 0
    for lam in bipartitions(n):
        g = g_matrix(lam, table)
        k = len(g.tableaux)
        one_dims += k * k
        rep.add(f"{lam}: unit diagonal", g.unit_diagonal())
        rep.add(f"{lam}: support on d(s) <= d(t)", g.bruhat_support())
        rep.add(f"{lam}: off-diagonal in v^-1 Z[v^-1]", g.offdiag_in_vinv())
        d = g.det()
        rep.add(f"{lam}: det G = 1", d == 1, "" if d == 1 else f"det = {d}")
        rho = distinguished_cell_module(lam, table).matrices
        direct = specht_matrices_direct(lam, table)
        bad = _first(sorted(rho), lambda i: matmul(g.entries, direct[i]) == matmul(rho[i], g.entries))
        rep.add(f"{lam}: phi intertwines Specht and cell actions", bad is None,
                f"fails for generator {bad}" if bad is not None else "")
        e0 = [row[0] for row in g.entries]
        rep.add(f"{lam}: phi(x_lambda) = e_(sigma a_l)", e0 == [r[0] for r in eye(k)])
    rep.add("sum of (dim S^lambda)^2 = |W_n|", one_dims == 2 ** n * factorial(n),
            f"{one_dims} vs {2 ** n * factorial(n)}")
    return rep


# -- cells and Robinson-Schensted ------------------------------------------

def _fibers(group, key) -> set[frozenset]:
    out: dict = {}
    for w in group:
        out.setdefault(key(w), set()).add(w)
    return {frozenset(s) for s in out.values()}


def _young_gens(blocks, n) -> list[int]:
    gens, start = [], 0
    for b in blocks:
        gens += [i for i in range(start + 1, start + b)]
        start += b
    return gens


def suite_cells_rs(n: int, cache_dir=None) -> SuiteReport:
    rep = SuiteReport("cells-rs", n)
    table = get_table(n, ASYMPTOTIC, cache_dir=cache_dir)
    group = enumerate_group(n, force=True)
    left = cell_partition(n, ASYMPTOTIC, "left", table)
    right = cell_partition(n, ASYMPTOTIC, "right", table)
    two = cell_partition(n, ASYMPTOTIC, "two", table)
    rep.add("left cells = Q-fibers", left.as_sets() == _fibers(group, lambda w: rs(w)[1]))
    rep.add("right cells = P-fibers", right.as_sets() == _fibers(group, lambda w: rs(w)[0]))
    rep.add("two-sided cells = shape classes", two.as_sets() == _fibers(group, type_of))
    n_std = sum(len(standard_bitableaux(lam)) for lam in bipartitions(n))
    rep.add("number of left cells = sum |T(lambda)|", len(left.cells) == n_std,
            f"{len(left.cells)} vs {n_std}")

    # Clifford normal form criterion, with cells of the Young subgroups S_{l,n-l}
    par_index: dict[SignedPerm, tuple[int, int]] = {}
    for l in range(n + 1):
        gens = _young_gens([l, n - l], n)
        pc = cell_partition(n, ASYMPTOTIC, "left", table, elements=young_subgroup(l, n), gens=gens)
        for k, c in enumerate(pc.cells):
            for w in c:
                par_index[w] = (l, k)
        # Y a_l C is a left cell of W_n for every left cell C of S_{l,n-l}
        a_l = special_elements(n, l)[0]
        ok = all(
            frozenset(y * a_l * c for y in coset_reps_Y(n, l) for c in cell) in left.as_sets()
            for cell in pc.cells
        )
        rep.add(f"l={l}: Y a_l C is a left cell", ok)

    def cliff_key(w):
        cf = clifford_form(w)
        return (t_length(w), cf.b_w, par_index[cf.sigma_w])

    rep.add("left cells = Clifford classes (l, b_w, cell of sigma_w)",
            left.as_sets() == _fibers(group, cliff_key))

    for lam in bipartitions(n):
        base = base_element(lam)
        dc = distinguished_cell(lam)
        rep.add(f"{lam}: distinguished cell = left cell of sigma_lambda a_l",
                set(dc) == set(left.cell_of(base)))
        add = all(length(d_of(s) * base) == length(d_of(s)) + length(base)
                  for s in standard_bitableaux(lam))
        rep.add(f"{lam}: l(d(s) sigma a_l) = l(d(s)) + l(sigma a_l)", add)
        want = Bipartition(conjugate(lam.second), lam.first)
        got = type_of(base)
        rep.add(f"{lam}: cell type is (lambda2*|lambda1)", got == want, f"{got} vs {want}")
    return rep


# -- rank 3 weighted example ------------------------------------------------

def _p(text: str) -> Laurent2:
    return Laurent2.parse(text)


_Z, _O = "0", "V^0*v^0"
_VV2 = "V^1*v^-2 + V^-1*v^2"
_VV1 = "V^1*v^-1 + V^-1*v^1"


def _mat(rows) -> Matrix:
    return [[_p(x) for x in r] for r in rows]


@dataclass(frozen=True)
class _Example:
    """Reference data for lambda = (1|2) at rank 3; generator 0 is t."""
    asym_cell: tuple[str, ...] = ("s2 t", "s1 s2 t", "s2 s1 s2 t")
    asym: tuple = (
        (("V^1*v^0", _VV1, _VV2), (_Z, "-V^-1*v^0", _Z), (_Z, _Z, "-V^-1*v^0")),
        (("-V^0*v^-1", _Z, _Z), (_O, "V^0*v^1", _Z), (_Z, _Z, "V^0*v^1")),
        (("V^0*v^1", _O, _Z), (_Z, "-V^0*v^-1", _Z), (_Z, _O, "V^0*v^1")),
    )
    weighted_cells: tuple[tuple[str, ...], ...] = (
        ("s1 s2 s1", "s1 t s1 s2 s1", "t s1 s2 s1"),
        ("s1 s2 s1 t", "s1 t s1 s2 s1 t", "t s1 s2 s1 t"),
        ("s1 s2 s1 t s1", "s1 t s1 s2 s1 t s1", "t s1 s2 s1 t s1"),
    )
    weighted: tuple = (
        (("-V^-1*v^0", _Z, _Z), (_Z, "-V^-1*v^0", _Z), (_O, _VV1, "V^1*v^0")),
        (("V^0*v^1", _Z, _Z), (_Z, "V^0*v^1", _O), (_Z, _Z, "-V^0*v^-1")),
        (("V^0*v^1", _VV2, _Z), (_Z, "-V^0*v^-1", _Z), (_Z, _O, "V^0*v^1")),
    )
    intertwiner: tuple = ((_Z, _Z, _VV2), (_Z, _O, _Z), (_O, _Z, _Z))


B3_EXAMPLE = _Example()


def suite_counterexample(cache_dir=None) -> SuiteReport:
    ex = B3_EXAMPLE
    rep = SuiteReport("counterexample", 3)
    ta = get_table(3, ASYMPTOTIC, cache_dir=cache_dir)
    tw = get_table(3, WEIGHTED_11, cache_dir=cache_dir)
    cell = [from_word(w, 3) for w in ex.asym_cell]
    left = cell_partition(3, ASYMPTOTIC, "left", ta)
    rep.add("asymptotic: {s2t, s1s2t, s2s1s2t} is a left cell", frozenset(cell) in left.as_sets())
    rho_l = cell_module(cell, ta, cell).matrices
    entry = rho_l[0][0][1]
    rep.add("asymptotic: T_t (1,2) entry is bar-symmetric", entry == entry.bar(), f"computed {entry}")
    for i, ref in enumerate(ex.asym):
        rep.add(f"asymptotic: matrix of generator {i}", rho_l[i] == _mat(ref),
                "" if rho_l[i] == _mat(ref) else f"computed {mat_str(rho_l[i])}")

    wleft = cell_partition(3, WEIGHTED_11, "left", tw)
    mats = []
    for k, words in enumerate(ex.weighted_cells, 1):
        c = [from_word(w, 3) for w in words]
        rep.add(f"weighted(1,1): C_{k} is a left cell", frozenset(c) in wleft.as_sets())
        mats.append(cell_module(c, tw, c).matrices)
    rep.add("weighted(1,1): the three cell representations are identical",
            mats[0] == mats[1] == mats[2])
    for i, ref in enumerate(ex.weighted):
        rep.add(f"weighted(1,1): matrix of generator {i}", mats[0][i] == _mat(ref),
                "" if mats[0][i] == _mat(ref) else f"computed {mat_str(mats[0][i])}")

    homs = hom_space(rho_l, mats[0])
    rep.add("dim Hom(rho_lambda, rho) = 1", len(homs) == 1, f"dimension {len(homs)}")
    if len(homs) == 1:
        x = homs[0]
        c = x.equals_up_to_scalar(_mat(ex.intertwiner))
        rep.add("intertwiner = P up to a unit", c is not None, f"unit {c}" if c is not None else "")
        d = det(x.to_A())
        want = -_p(_VV2)
        if c is not None:
            want = want * c ** 3
        rep.add("det of intertwiner = -(Vv^-2 + V^-1v^2)", d == want, f"det = {d}")
        rep.add("det of intertwiner is not a unit of A", not is_unit(d), f"is_unit = {is_unit(d)}")
    return rep


# -- algebraic identities ------------------------------------------------------

def suite_identities(n: int, cache_dir=None) -> SuiteReport:
    rep = SuiteReport("identities", n)
    table = get_table(n, ASYMPTOTIC, cache_dir=cache_dir)
    for lam in bipartitions(n):
        a_l, sigma_l, _ = special_elements(n, lam.l)
        blocks = list(lam.first) + list(lam.second)
        s_lam = base_element(lam) * a_l.inverse()
        try:
            x_lambda(lam, table)
            ok, detail = True, ""
        except AssertionError as exc:
            ok, detail = False, str(exc)
        rep.add(f"{lam}: T_sigma_l C_(a_l sigma) = C_(sigma a_l) T_sigma_l", ok, detail)
        rep.add(f"{lam}: C_a_l C_sigma = C_(a_l sigma)",
                table.c(a_l) * table.c(s_lam) == table.c(a_l * s_lam))
        rep.add(f"{lam}: C_sigma C_a_l = C_(sigma a_l)",
                table.c(s_lam) * table.c(a_l) == table.c(s_lam * a_l))
        total = T(s_lam).scale(ZERO)
        for sig in generate(_young_gens(blocks, n), n):
            total = total + T(sig).scale(v ** length(sig))
        rep.add(f"{lam}: sum v^l(s) T_s over S_lambda = v^l(sigma) C_sigma",
                total == table.c(s_lam).scale(v ** length(s_lam)))
    for l in range(n + 1):
        a_l, sigma_l, _ = special_elements(n, l)
        rep.add(f"l={l}: C_a_l T_sigma_l = T_sigma_l C_a_l",
                table.c(a_l) * T(sigma_l) == T(sigma_l) * table.c(a_l))
    group = enumerate_group(n, force=True)
    bad = _first(group, lambda w: flat(table.c(w)) == table.c(w.inverse()))
    rep.add("flat(C_w) = C_(w^-1)", bad is None, f"fails at {bad}" if bad else "")
    return rep


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "kl": lambda n, cache_dir=None: suite_kl(n, cache_dir=cache_dir),
    "thm3": suite_thm3,
    "cells-rs": suite_cells_rs,
    "counterexample": lambda n, cache_dir=None: suite_counterexample(cache_dir),
    "identities": suite_identities,
}


def run_suite(name: str, n: int, cache_dir=None) -> list[SuiteReport]:
    """Run one suite, or every suite for ``all``."""
    names = list(SUITES) if name == "all" else [name]
    for s in names:
        if s not in SUITES:
            raise KeyError(f"unknown suite {s!r}")
    return [SUITES[s](n, cache_dir=cache_dir) for s in names]
