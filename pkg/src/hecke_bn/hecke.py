"""
The generic Hecke algebra of type B_n over A = Z[V^+-1, v^+-1], realized on
its standard basis ``{T_w}``.

Multiplication by a generator on the left follows

    T_s T_w = T_{sw}                          if l(sw) > l(w)
    T_s T_w = T_{sw} + (v_s - v_s^-1) T_w      if l(sw) < l(w)

with ``v_t = V`` and ``v_{s_i} = v`` for the generic weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .laurent import ONE, ZERO, Laurent2, MonomialOrder, monomial
from .signed_perm import (
    SignedPerm, is_left_descent, is_right_descent, left_mul_gen,
    reduced_word, right_mul_gen,
)

__all__ = [
    "WeightSpec", "GENERIC", "HeckeElt", "T", "mul_gen_left", "mul_gen_right",
    "mul", "invert_T", "bar_involution", "flat",
]

Coeffs = dict[SignedPerm, Laurent2]


@dataclass(frozen=True)
class WeightSpec:
    """Exponents of the parameters: ``V = eps^b`` for ``t``, ``v = eps^a`` for every ``s_i``."""
    b: tuple[int, int] = (1, 0)
    a: tuple[int, int] = (0, 1)

    def param(self, i: int) -> Laurent2:
        return monomial(*(self.b if i == 0 else self.a))

    def check_positive(self, order: MonomialOrder) -> None:
        if order.sign(self.a) <= 0 or order.sign(self.b) <= 0:
            raise ValueError(
                f"weights a={self.a}, b={self.b} are not positive under {order}"
            )


GENERIC = WeightSpec()


@dataclass(eq=False)
class HeckeElt:
    """A finite A-linear combination of ``T_w`` (or ``C_w``) for ``w`` in W_n.

    ``basis`` is ``"T"`` or ``"C"``; C-basis elements carry the monomial order
    their KL basis was built from, and operations refuse to mix bases, ranks
    or orders.
    """
    n: int
    coeffs: Coeffs = field(default_factory=dict)
    basis: str = "T"
    order: MonomialOrder | None = None
    weights: WeightSpec = GENERIC

    def __post_init__(self):
        self.coeffs = {w: c for w, c in self.coeffs.items() if c}
        if self.basis not in ("T", "C"):
            raise ValueError(f"unknown basis tag {self.basis!r}")
        if self.basis == "C" and self.order is None:
            raise ValueError("C-basis elements need a monomial order")

    @classmethod
    def _from(cls, like: HeckeElt, coeffs: Coeffs) -> HeckeElt:
        h = cls.__new__(cls)
        h.n, h.coeffs, h.basis, h.order, h.weights = (
            like.n, coeffs, like.basis, like.order, like.weights)
        return h

    def _check(self, other: HeckeElt) -> None:
        if (self.n, self.basis, self.weights) != (other.n, other.basis, other.weights):
            raise ValueError("incompatible Hecke algebra elements")
        if self.basis == "C" and self.order != other.order:
            raise ValueError("C-basis elements for different monomial orders")

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElt):
            return NotImplemented
        self._check(other)
        return self.coeffs == other.coeffs

    def __add__(self, other: HeckeElt) -> HeckeElt:
        self._check(other)
        return HeckeElt._from(self, add_into(dict(self.coeffs), other.coeffs))

    def __neg__(self) -> HeckeElt:
        return HeckeElt._from(self, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other: HeckeElt) -> HeckeElt:
        return self + (-other)

    def scale(self, a: Laurent2 | int) -> HeckeElt:
        if isinstance(a, int):
            a = Laurent2.const(a)
        if not a:
            return HeckeElt._from(self, {})
        return HeckeElt._from(self, {w: a * c for w, c in self.coeffs.items()})

    def __rmul__(self, a) -> HeckeElt:
        if isinstance(a, (int, Laurent2)):
            return self.scale(a)
        return NotImplemented

    def __mul__(self, other) -> HeckeElt:
        if isinstance(other, (int, Laurent2)):
            return self.scale(other)
        if isinstance(other, HeckeElt):
            return mul(self, other)
        return NotImplemented

    def coeff(self, w: SignedPerm) -> Laurent2:
        return self.coeffs.get(w, ZERO)

    def support(self) -> set[SignedPerm]:
        return set(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        terms = ", ".join(f"{w}: {c.pretty()}" for w, c in sorted(self.coeffs.items()))
        return f"HeckeElt({self.basis}, n={self.n}, {{{terms}}})"


def add_into(acc: Coeffs, other: Mapping[SignedPerm, Laurent2], scale: Laurent2 | None = None) -> Coeffs:
    """``acc += scale * other`` in place, dropping zeros."""
    for w, c in other.items():
        if scale is not None:
            c = scale * c
        s = acc.get(w)
        s = c if s is None else s + c
        if s:
            acc[w] = s
        else:
            acc.pop(w, None)
    return acc


def T(w: SignedPerm, weights: WeightSpec = GENERIC) -> HeckeElt:
    return HeckeElt(len(w), {w: ONE}, weights=weights)


def _require_T(h: HeckeElt) -> None:
    if h.basis != "T":
        raise ValueError("operation needs a T-basis element")


def _gen_coeffs_left(i: int, coeffs: Coeffs, weights: WeightSpec) -> Coeffs:
    vs = weights.param(i)
    q = vs - vs.bar()
    out: Coeffs = {}
    for w, c in coeffs.items():
        sw = left_mul_gen(i, w)
        add_into(out, {sw: c})
        if is_left_descent(i, w):
            add_into(out, {w: q * c})
    return out


def _gen_coeffs_right(coeffs: Coeffs, i: int, weights: WeightSpec) -> Coeffs:
    vs = weights.param(i)
    q = vs - vs.bar()
    out: Coeffs = {}
    for w, c in coeffs.items():
        ws = right_mul_gen(w, i)
        add_into(out, {ws: c})
        if is_right_descent(w, i):
            add_into(out, {w: q * c})
    return out


def mul_gen_left(i: int, h: HeckeElt) -> HeckeElt:
    """``T_s h`` for the generator with index ``i`` (0 is ``t``)."""
    _require_T(h)
    if not 0 <= i < h.n:
        raise ValueError(f"generator index {i} out of range for rank {h.n}")
    return HeckeElt._from(h, _gen_coeffs_left(i, h.coeffs, h.weights))


def mul_gen_right(h: HeckeElt, i: int) -> HeckeElt:
    """``h T_s``."""
    _require_T(h)
    if not 0 <= i < h.n:
        raise ValueError(f"generator index {i} out of range for rank {h.n}")
    return HeckeElt._from(h, _gen_coeffs_right(h.coeffs, i, h.weights))


def mul(h1: HeckeElt, h2: HeckeElt) -> HeckeElt:
    _require_T(h1)
    h1._check(h2)
    out: Coeffs = {}
    for x, a in h1.coeffs.items():
        cur = h2.coeffs
        for i in reversed(reduced_word(x)):
            cur = _gen_coeffs_left(i, cur, h1.weights)
        add_into(out, cur, a)
    return HeckeElt._from(h1, out)


@lru_cache(maxsize=None)
def _inverse_coeffs(w: SignedPerm, weights: WeightSpec) -> tuple[tuple[SignedPerm, Laurent2], ...]:
    word = reduced_word(w)
    if not word:
        return ((w, ONE),)
    # T_w = T_s T_{sw} with s the first letter, so T_w^-1 = T_{sw}^-1 T_s^-1
    i = word[0]
    rest = dict(_inverse_coeffs(left_mul_gen(i, w), weights))
    vs = weights.param(i)
    # right multiplication by T_s^-1 = T_s - (v_s - v_s^-1)
    out = _gen_coeffs_right(rest, i, weights)
    add_into(out, rest, -(vs - vs.bar()))
    return tuple(out.items())


def invert_T(w: SignedPerm, weights: WeightSpec = GENERIC) -> HeckeElt:
    """``T_w^{-1}`` expanded in the T-basis."""
    return HeckeElt(len(w), dict(_inverse_coeffs(w, weights)), weights=weights)


def bar_involution(h: HeckeElt) -> HeckeElt:
    """``sum a_y T_y  ->  sum bar(a_y) T_{y^-1}^{-1}``."""
    _require_T(h)
    out: Coeffs = {}
    for y, a in h.coeffs.items():
        add_into(out, dict(_inverse_coeffs(y.inverse(), h.weights)), a.bar())
    return HeckeElt._from(h, out)


def flat(h: HeckeElt) -> HeckeElt:
    """The A-linear anti-automorphism ``T_w -> T_{w^-1}``."""
    _require_T(h)
    return HeckeElt._from(h, {w.inverse(): c for w, c in h.coeffs.items()})
