"""
Kazhdan-Lusztig basis of the type B_n Hecke algebra for a chosen monomial
order on Z^2.

``C_w = T_w + sum_{y<w} p*_{y,w} T_y`` with every ``p*_{y,w}`` in ``A_{<0}``.
The table is filled by induction on length: with ``s`` the lowest-index left
descent of ``w`` and ``u = sw``,

    C_w = C_s C_u - sum_{z<u, sz<z} M^s_{z,u} C_z,      C_s = T_s + v_s^-1 T_e.

``M^s_{y,w}`` is the bar-invariant element congruent modulo ``A_{<0}`` to
``v_s p*_{y,w} - sum_{y<z<w, sz<z} p*_{y,z} M^s_{z,w}``.
"""

from __future__ import annotations

import logging
import threading
from pathlib import Path

from .hecke import GENERIC, Coeffs, HeckeElt, WeightSpec, add_into
from .laurent import ONE, ZERO, Laurent2, MonomialOrder, is_negative, split
from .signed_perm import (
    SignedPerm, enumerate_group, first_left_descent, identity,
    is_left_descent, left_mul_gen, length, lower_interval, parse_window,
)

__all__ = ["KLTable", "KLError", "get_table"]

log = logging.getLogger(__name__)


class KLError(AssertionError):
    """A computed element violated the defining properties of the KL basis."""


class KLTable:
    """Memoized ``p*_{y,w}`` and ``M^s_{z,w}`` for a fixed rank and order."""

    def __init__(self, n: int, order: MonomialOrder, weights: WeightSpec = GENERIC):
        weights.check_positive(order)
        self.n = n
        self.order = order
        self.weights = weights
        self._c: dict[SignedPerm, Coeffs] = {identity(n): {identity(n): ONE}}
        self._m: dict[tuple[int, SignedPerm], dict[SignedPerm, Laurent2]] = {}
        self._lock = threading.RLock()

    def __repr__(self) -> str:
        return f"KLTable(n={self.n}, order={self.order}, filled={len(self._c)})"

    # -- C basis ---------------------------------------------------------

    def c_coeffs(self, w: SignedPerm) -> Coeffs:
        """T-coefficients of ``C_w``; do not mutate the returned dict."""
        c = self._c.get(w)
        if c is None:
            with self._lock:
                c = self._c.get(w)
                if c is None:
                    c = self._compute(w)
                    self._c[w] = c
        return c

    def c(self, w: SignedPerm) -> HeckeElt:
        """``C_w`` expanded in the T-basis."""
        return HeckeElt(self.n, dict(self.c_coeffs(w)), weights=self.weights)

    def pstar(self, y: SignedPerm, w: SignedPerm) -> Laurent2:
        if y == w:
            raise ValueError("p* is defined for y < w only")
        return self.c_coeffs(w).get(y, ZERO)

    def _compute(self, w: SignedPerm) -> Coeffs:
        s = first_left_descent(w)
        u = left_mul_gen(s, w)
        acc = self._cs_times(s, self.c_coeffs(u))
        for z, m in self.m_row(s, u).items():
            add_into(acc, self.c_coeffs(z), -m)
        for y, p in acc.items():
            if y == w:
                if p != ONE:
                    raise KLError(f"leading coefficient of C_{w} is {p}")
            elif not is_negative(p, self.order):
                raise KLError(f"p*_{{{y},{w}}} = {p} is not in A_<0")
        return acc

    def c_via_descent(self, w: SignedPerm, i: int) -> Coeffs:
        """Recompute ``C_w`` from the left descent ``i`` instead of the first one."""
        if not is_left_descent(i, w):
            raise ValueError(f"generator {i} is not a left descent of {w}")
        u = left_mul_gen(i, w)
        acc = self._cs_times(i, self.c_coeffs(u))
        for z, m in self.m_row(i, u).items():
            add_into(acc, self.c_coeffs(z), -m)
        return acc

    def _cs_times(self, i: int, coeffs: Coeffs) -> Coeffs:
        """T-coefficients of ``C_s h`` for ``h`` given by T-coefficients."""
        vs = self.weights.param(i)
        vinv = vs.bar()
        out: Coeffs = {}
        for y, p in coeffs.items():
            sy = left_mul_gen(i, y)
            add_into(out, {sy: p})
            # (T_s + v_s^-1) T_y contributes v_s T_y on a descent, v_s^-1 otherwise
            add_into(out, {y: (vs if is_left_descent(i, y) else vinv) * p})
        return out

    # -- M polynomials ---------------------------------------------------

    def m_row(self, i: int, w: SignedPerm) -> dict[SignedPerm, Laurent2]:
        """Nonzero ``M^s_{z,w}`` over ``z < w`` with ``sz < z``, for ``sw > w``."""
        key = (i, w)
        row = self._m.get(key)
        if row is not None:
            return row
        if is_left_descent(i, w):
            raise ValueError("M^s_{z,w} needs sw > w")
        with self._lock:
            row = self._m.get(key)
            if row is None:
                row = self._compute_m_row(i, w)
                self._m[key] = row
        return row

    def _compute_m_row(self, i: int, w: SignedPerm) -> dict[SignedPerm, Laurent2]:
        vs = self.weights.param(i)
        cw = self.c_coeffs(w)
        cands = [z for z in lower_interval(w) if z != w and is_left_descent(i, z)]
        cands.sort(key=length, reverse=True)
        row: dict[SignedPerm, Laurent2] = {}
        for y in cands:
            g = vs * cw.get(y, ZERO)
            for z, m in row.items():
                p = self.c_coeffs(z).get(y)
                if p is not None and z != y:
                    g = g - p * m
            _, g0, gpos = split(g, self.order)
            m = g0 + gpos + gpos.bar()
            if m:
                row[y] = m
        return row

    def m_polynomial(self, i: int, y: SignedPerm, w: SignedPerm) -> Laurent2:
        """``M^s_{y,w}``; requires ``sy < y``, ``sw > w`` and ``y < w``."""
        if not is_left_descent(i, y) or is_left_descent(i, w) or length(y) >= length(w):
            raise ValueError("m_polynomial needs sy < y, sw > w and y < w")
        return self.m_row(i, w).get(y, ZERO)

    # -- products in the C basis -----------------------------------------

    def left_gen_product(self, i: int, y: SignedPerm) -> dict[SignedPerm, Laurent2]:
        """``h_{s,y,z}``: coefficients of ``C_s C_y`` in the C-basis."""
        if is_left_descent(i, y):
            vs = self.weights.param(i)
            return {y: vs + vs.bar()}
        out = {left_mul_gen(i, y): ONE}
        out.update(self.m_row(i, y))
        return out

    def right_gen_product(self, y: SignedPerm, i: int) -> dict[SignedPerm, Laurent2]:
        """Coefficients of ``C_y C_s``, via the anti-automorphism flat."""
        return {z.inverse(): h for z, h in self.left_gen_product(i, y.inverse()).items()}

    def to_c_basis(self, h: HeckeElt) -> HeckeElt:
        """Rewrite a T-basis element in the C-basis (unitriangular solve)."""
        if h.basis != "T":
            raise ValueError("to_c_basis needs a T-basis element")
        if h.n != self.n or h.weights != self.weights:
            raise ValueError("element does not belong to this table's algebra")
        rem = dict(h.coeffs)
        out: Coeffs = {}
        while rem:
            y = max(rem, key=lambda x: (length(x), x))
            c = rem[y]
            out[y] = c
            add_into(rem, self.c_coeffs(y), -c)
        return HeckeElt(self.n, out, basis="C", order=self.order, weights=self.weights)

    def to_t_basis(self, h: HeckeElt) -> HeckeElt:
        if h.basis != "C":
            raise ValueError("to_t_basis needs a C-basis element")
        if h.order != self.order or h.n != self.n:
            raise ValueError("C-basis element built for a different table")
        out: Coeffs = {}
        for y, c in h.coeffs.items():
            add_into(out, self.c_coeffs(y), c)
        return HeckeElt(self.n, out, weights=self.weights)

    def c_elt(self, coeffs: dict[SignedPerm, Laurent2]) -> HeckeElt:
        """Wrap C-basis coefficients as an element."""
        return HeckeElt(self.n, dict(coeffs), basis="C", order=self.order, weights=self.weights)

    def structure_constants(self, x: SignedPerm, y: SignedPerm) -> dict[SignedPerm, Laurent2]:
        """``h_{x,y,z}`` with ``C_x C_y = sum_z h_{x,y,z} C_z``."""
        return dict(self.to_c_basis(self.c(x) * self.c(y)).coeffs)

    # -- bulk fill and cache ---------------------------------------------

    def fill(self, elements=None) -> KLTable:
        """Compute ``C_w`` for all elements (default: all of W_n) by length."""
        elements = enumerate_group(self.n, force=True) if elements is None else elements
        for w in sorted(elements, key=length):
            self.c_coeffs(w)
        return self

    def save(self, path: str | Path) -> None:
        """Write ``y_window;w_window;poly`` records for every stored ``p*``."""
        path = Path(path)
        lines = [f"# n={self.n} order={self.order.descriptor()} weights={self.weights.b},{self.weights.a}"]
        for w in sorted(self._c, key=lambda x: (length(x), x)):
            lines.append(f"{w};{w};{ONE}")
            for y, p in sorted(self._c[w].items(), key=lambda kv: (length(kv[0]), kv[0])):
                if y != w:
                    lines.append(f"{y};{w};{p}")
        path.write_text("\n".join(lines) + "\n")

    @classmethod
    def load(cls, path: str | Path, n: int, order: MonomialOrder,
             weights: WeightSpec = GENERIC) -> KLTable:
        table = cls(n, order, weights)
        text = Path(path).read_text().splitlines()
        header = f"# n={n} order={order.descriptor()} weights={weights.b},{weights.a}"
        if not text or text[0] != header:
            raise ValueError(f"cache {path} does not match {header!r}")
        for line in text[1:]:
            if not line.strip():
                continue
            ys, ws, ps = line.split(";")
            y, w = parse_window(ys), parse_window(ws)
            table._c.setdefault(w, {})[y] = Laurent2.parse(ps)
        return table


_TABLES: dict[tuple, KLTable] = {}


def get_table(n: int, order: MonomialOrder, weights: WeightSpec = GENERIC,
              cache_dir: str | Path | None = None) -> KLTable:
    """Shared table per ``(n, order, weights)``, optionally persisted in ``cache_dir``."""
    key = (n, order, weights)
    table = _TABLES.get(key)
    if table is not None:
        return table
    if cache_dir is not None:
        cache_dir = Path(cache_dir)
        cache_dir.mkdir(parents=True, exist_ok=True)
        name = order.descriptor().replace(":", "_").replace(",", "_").replace("/", "-")
        path = cache_dir / f"kl_n{n}_{name}.txt"
        if path.exists():
            log.info("loading KL table from %s", path)
            table = KLTable.load(path, n, order, weights)
        else:
            table = KLTable(n, order, weights).fill()
            table.save(path)
    else:
        table = KLTable(n, order, weights)
    _TABLES[key] = table
    return table
