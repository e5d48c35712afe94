"""
Laurent polynomials in ``V`` and ``v`` with integer coefficients, and total
monomial orders on the exponent group Z^2.

A monomial ``V^i v^j`` is keyed by its exponent pair ``(i, j)``.

>>> f = (V + v) * (V - v)
>>> str(f)
'V^2*v^0 + -V^0*v^2'
>>> f.bar() == V**-2 - v**-2
True
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

__all__ = [
    "Laurent2", "MonomialOrder", "ASYMPTOTIC", "REVLEX", "WEIGHTED_11",
    "V", "v", "ONE", "ZERO", "monomial", "split", "is_unit", "parse_order",
    "ExactDivisionError",
]

Exp = tuple[int, int]


class ExactDivisionError(ArithmeticError):
    pass


class Laurent2:
    """An element of Z[V, V^-1, v, v^-1]. Treat instances as immutable."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[Exp, int] | None = None):
        self._t: dict[Exp, int] = (
            {k: c for k, c in terms.items() if c} if terms else {}
        )
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[Exp, int]) -> Laurent2:
        # terms must already be free of zeros
        f = cls.__new__(cls)
        f._t = terms
        f._hash = None
        return f

    @classmethod
    def const(cls, c: int) -> Laurent2:
        return cls._wrap({(0, 0): c} if c else {})

    @property
    def terms(self) -> dict[Exp, int]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __len__(self) -> int:
        return len(self._t)

    def coeff(self, e: Exp) -> int:
        return self._t.get(e, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Laurent2.const(other)
        if not isinstance(other, Laurent2):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __add__(self, other) -> Laurent2:
        if isinstance(other, int):
            other = Laurent2.const(other)
        elif not isinstance(other, Laurent2):
            return NotImplemented
        if len(self._t) < len(other._t):
            self, other = other, self
        out = dict(self._t)
        for k, c in other._t.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return Laurent2._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> Laurent2:
        return Laurent2._wrap({k: -c for k, c in self._t.items()})

    def __sub__(self, other) -> Laurent2:
        if isinstance(other, int):
            other = Laurent2.const(other)
        elif not isinstance(other, Laurent2):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Laurent2:
        return (-self) + other

    def __mul__(self, other) -> Laurent2:
        if isinstance(other, int):
            if not other:
                return ZERO
            return Laurent2._wrap({k: c * other for k, c in self._t.items()})
        if not isinstance(other, Laurent2):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) == 1:
            ((i, j), c), = a.items()
            return Laurent2._wrap({(i + p, j + q): c * d for (p, q), d in b.items()})
        if len(b) == 1:
            ((i, j), c), = b.items()
            return Laurent2._wrap({(i + p, j + q): c * d for (p, q), d in a.items()})
        out: dict[Exp, int] = {}
        for (i, j), c in a.items():
            for (p, q), d in b.items():
                k = (i + p, j + q)
                out[k] = out.get(k, 0) + c * d
        return Laurent2._wrap({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Laurent2:
        if k < 0:
            if len(self._t) != 1:
                raise ExactDivisionError("only monomials have negative powers")
            ((i, j), c), = self._t.items()
            if c not in (1, -1):
                raise ExactDivisionError("coefficient is not a unit")
            return Laurent2._wrap({(i * k, j * k): c ** (-k)})
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def bar(self) -> Laurent2:
        """The involution ``V -> V^-1, v -> v^-1``."""
        return Laurent2._wrap({(-i, -j): c for (i, j), c in self._t.items()})

    def shift(self, e: Exp) -> Laurent2:
        return Laurent2._wrap({(i + e[0], j + e[1]): c for (i, j), c in self._t.items()})

    def min_exponents(self) -> Exp:
        return (min(i for i, _ in self._t), min(j for _, j in self._t))

    def monomial_content(self) -> Laurent2:
        """The monomial ``V^i v^j`` times the gcd of the coefficients, with
        ``(i, j)`` the componentwise minimum exponent."""
        if not self._t:
            return ONE
        from math import gcd
        g = 0
        for c in self._t.values():
            g = gcd(g, c)
        return Laurent2._wrap({self.min_exponents(): g})

    def exact_div(self, other: Laurent2) -> Laurent2:
        """Quotient ``self / other`` in A; raises if it is not in A."""
        if not other:
            raise ZeroDivisionError("division by zero in A")
        if not self:
            return ZERO
        if len(other._t) == 1:
            ((i, j), d), = other._t.items()
            out = {}
            for (p, q), c in self._t.items():
                if c % d:
                    raise ExactDivisionError(f"{self} not divisible by {other}")
                out[(p - i, q - j)] = c // d
            return Laurent2._wrap(out)
        # multivariate long division under lex, leading term = max exponent;
        # a true quotient has min exponents fmin - gmin in each coordinate
        rem = dict(self._t)
        lead = max(other._t)
        lc = other._t[lead]
        fmin, gmin = self.min_exponents(), other.min_exponents()
        floor = (fmin[0] - gmin[0], fmin[1] - gmin[1])
        quot: dict[Exp, int] = {}
        while rem:
            top = max(rem)
            c = rem[top]
            e = (top[0] - lead[0], top[1] - lead[1])
            if c % lc or e[0] < floor[0] or e[1] < floor[1]:
                raise ExactDivisionError(f"{self} not divisible by {other}")
            q = c // lc
            quot[e] = q
            for (i, j), d in other._t.items():
                k = (i + e[0], j + e[1])
                s = rem.get(k, 0) - q * d
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return Laurent2._wrap({k: c for k, c in quot.items() if c})

    def __call__(self, V_val, v_val):
        """Evaluate at ``V = V_val, v = v_val`` (exact for ints/Fractions)."""
        total = 0
        for (i, j), c in self._t.items():
            total += c * Fraction(V_val) ** i * Fraction(v_val) ** j
        return total

    def sorted_terms(self) -> list[tuple[Exp, int]]:
        """Terms by decreasing exponent pair."""
        return sorted(self._t.items(), reverse=True)

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            mono = f"V^{i}*v^{j}"
            parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Laurent2({self!s})"

    def pretty(self) -> str:
        """Human-friendly form, e.g. ``V*v^-2 + V^-1*v^2``."""
        if not self._t:
            return "0"
        out = []
        for (i, j), c in sorted(self._t.items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
            mono = "*".join(
                x if e == 1 else f"{x}^{e}" for x, e in (("V", i), ("v", j)) if e
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    @classmethod
    def parse(cls, text: str) -> Laurent2:
        """Parse the canonical text form, e.g. ``V^1*v^-2 + -3*V^0*v^0``."""
        text = text.strip()
        if text == "0":
            return ZERO
        out: dict[Exp, int] = {}
        for part in text.split(" + "):
            m = re.fullmatch(r"\s*(-?\d*)\*?V\^(-?\d+)\*v\^(-?\d+)\s*", part)
            if m is None:
                raise ValueError(f"cannot parse term {part!r}")
            cs, i, j = m.group(1), int(m.group(2)), int(m.group(3))
            c = 1 if cs == "" else -1 if cs == "-" else int(cs)
            if cs not in ("", "-") and not part.strip().startswith(cs + "*"):
                raise ValueError(f"cannot parse term {part!r}")
            out[(i, j)] = out.get((i, j), 0) + c
        return cls(out)


def monomial(i: int, j: int, c: int = 1) -> Laurent2:
    return Laurent2._wrap({(i, j): c} if c else {})


ZERO = Laurent2()
ONE = monomial(0, 0)
V = monomial(1, 0)
v = monomial(0, 1)

Scalar = Union[int, Laurent2]


@dataclass(frozen=True)
class MonomialOrder:
    """A total order on Z^2 compatible with addition.

    ``kind`` is ``"asymptotic"`` (compare the V-exponent first),
    ``"revlex"`` (the v-exponent first) or ``"weighted"`` (compare
    ``x*i + y*j``, ties broken by ``i``).
    """
    kind: str
    x: Fraction = Fraction(1)
    y: Fraction = Fraction(1)

    def __post_init__(self):
        if self.kind not in ("asymptotic", "revlex", "weighted"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "weighted":
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))
            if self.x <= 0 or self.y <= 0:
                raise ValueError("weights must be positive")

    def key(self, e: Exp):
        i, j = e
        if self.kind == "asymptotic":
            return (i, j)
        if self.kind == "revlex":
            return (j, i)
        return (self.x * i + self.y * j, i)

    def sign(self, e: Exp) -> int:
        """-1, 0 or 1 according as ``e < 0``, ``e = 0``, ``e > 0``."""
        k = self.key(e)
        zero = self.key((0, 0))
        return (k > zero) - (k < zero)

    def less(self, e: Exp, f: Exp) -> bool:
        return self.key(e) < self.key(f)

    def descriptor(self) -> str:
        if self.kind == "weighted":
            return f"weighted:{self.x},{self.y}"
        return self.kind

    def __str__(self) -> str:
        return self.descriptor()


ASYMPTOTIC = MonomialOrder("asymptotic")
REVLEX = MonomialOrder("revlex")
WEIGHTED_11 = MonomialOrder("weighted", Fraction(1), Fraction(1))


def parse_order(text: str) -> MonomialOrder:
    """``asymptotic`` | ``revlex`` | ``weighted:x,y`` with positive rationals."""
    text = text.strip()
    if text in ("asymptotic", "revlex"):
        return MonomialOrder(text)
    m = re.fullmatch(r"weighted:([^,]+),([^,]+)", text)
    if m is None:
        raise ValueError(f"unknown order descriptor {text!r}")
    return MonomialOrder("weighted", Fraction(m.group(1)), Fraction(m.group(2)))


def split(f: Laurent2, order: MonomialOrder) -> tuple[Laurent2, Laurent2, Laurent2]:
    """``(f_neg, f_zero, f_pos)`` with supports below, at and above 0."""
    parts: tuple[dict, dict, dict] = ({}, {}, {})
    for e, c in f.items():
        parts[order.sign(e) + 1][e] = c
    return tuple(Laurent2._wrap(p) for p in parts)


def is_negative(f: Laurent2, order: MonomialOrder) -> bool:
    """Whether ``f`` lies in ``A_{<0}``."""
    return all(order.sign(e) < 0 for e, _ in f.items())


def is_unit(f: Laurent2) -> bool:
    """Units of A are exactly ``+-V^i v^j``."""
    return len(f) == 1 and abs(next(iter(f.items()))[1]) == 1
