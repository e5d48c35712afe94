"""
Bipartitions, bitableaux and the Robinson-Schensted correspondence for W_n.

Bipartitions are written ``first|second`` with parts separated by dots and
``-`` for an empty component, e.g. ``2.1|-`` or ``1|2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .signed_perm import (
    SignedPerm, coset_reps_Y, length, longest_in_blocks, special_elements,
)

__all__ = [
    "Bipartition", "Bitableau", "partitions", "bipartitions", "dominance_leq",
    "standard_bitableaux", "row_standard_bitableaux", "canonical_tableau",
    "d_of", "coset_decomposition", "rs", "type_of", "sigma_lambda",
    "distinguished_cell", "insert_row", "ordered_tableaux",
]


def conjugate(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for x in p if x > k) for k in range(p[0])) if p else ()


@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if n == 0:
        return ((),)
    largest = n if largest is None else largest
    out = []
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            out.append((k,) + rest)
    return tuple(out)


@dataclass(frozen=True, order=True)
class Bipartition:
    first: tuple[int, ...]
    second: tuple[int, ...]

    def __post_init__(self):
        for p in (self.first, self.second):
            if any(x <= 0 for x in p) or list(p) != sorted(p, reverse=True):
                raise ValueError(f"not a partition: {p}")

    @property
    def n(self) -> int:
        return sum(self.first) + sum(self.second)

    @property
    def l(self) -> int:
        return sum(self.first)

    def conjugate(self) -> Bipartition:
        """Componentwise conjugate ``(first*|second*)``."""
        return Bipartition(conjugate(self.first), conjugate(self.second))

    @classmethod
    def parse(cls, text: str) -> Bipartition:
        try:
            a, b = text.strip().split("|")
        except ValueError:
            raise ValueError(f"bad bipartition syntax {text!r}") from None

        def part(s: str) -> tuple[int, ...]:
            s = s.strip()
            if s in ("-", ""):
                return ()
            return tuple(int(x) for x in s.split("."))

        return cls(part(a), part(b))

    def __str__(self) -> str:
        def fmt(p):
            return ".".join(map(str, p)) if p else "-"
        return f"{fmt(self.first)}|{fmt(self.second)}"


def bipartitions(n: int) -> list[Bipartition]:
    """All bipartitions of ``n``: by decreasing ``|first|``, then reverse lex."""
    if n < 1:
        raise ValueError("n must be positive")
    return [
        Bipartition(a, b)
        for l in range(n, -1, -1)
        for a in partitions(l)
        for b in partitions(n - l)
    ]


def dominance_leq(lam: Bipartition, mu: Bipartition) -> bool:
    """Dominance order; the second component is offset by the size of the first."""
    if lam.n != mu.n:
        raise ValueError("bipartitions of different sizes")

    def sums(p, offset, k):
        out, s = [], offset
        for j in range(k):
            s += p[j] if j < len(p) else 0
            out.append(s)
        return out

    k1 = max(len(lam.first), len(mu.first), 1)
    k2 = max(len(lam.second), len(mu.second), 1)
    return all(
        a <= b for a, b in zip(sums(lam.first, 0, k1), sums(mu.first, 0, k1))
    ) and all(
        a <= b for a, b in zip(sums(lam.second, lam.l, k2), sums(mu.second, mu.l, k2))
    )


@dataclass(frozen=True, order=True)
class Bitableau:
    """A filling of both diagrams of a bipartition; rows listed top to bottom."""
    first: tuple[tuple[int, ...], ...]
    second: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Bipartition:
        return Bipartition(tuple(map(len, self.first)), tuple(map(len, self.second)))

    def entries(self) -> list[int]:
        return [x for comp in (self.first, self.second) for row in comp for x in row]

    def reading_word(self) -> tuple[int, ...]:
        return tuple(self.entries())

    def is_row_standard(self) -> bool:
        return all(
            all(a < b for a, b in zip(row, row[1:]))
            for comp in (self.first, self.second) for row in comp
        )

    def is_standard(self) -> bool:
        if not self.is_row_standard():
            return False
        for comp in (self.first, self.second):
            for upper, lower in zip(comp, comp[1:]):
                if any(a >= b for a, b in zip(upper, lower)):
                    return False
        return True

    def act(self, d: SignedPerm) -> Bitableau:
        """``d . t``: replace every entry ``k`` by ``d(k)``."""
        return Bitableau(
            tuple(tuple(d[x - 1] for x in row) for row in self.first),
            tuple(tuple(d[x - 1] for x in row) for row in self.second),
        )

    def __str__(self) -> str:
        def fmt(comp):
            return "/".join(",".join(map(str, row)) for row in comp) if comp else "-"
        return f"({fmt(self.first)} | {fmt(self.second)})"


def _fill(shape: Sequence[int], values: Iterator[int]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(next(values) for _ in range(r)) for r in shape)


def canonical_tableau(lam: Bipartition) -> Bitableau:
    """``t^lambda``: rows filled in order, ``1..l`` in the first component."""
    it = iter(range(1, lam.n + 1))
    return Bitableau(_fill(lam.first, it), _fill(lam.second, it))


def _row_fillings(rows: Sequence[int], values: Sequence[int]):
    if not rows:
        yield ()
        return
    for chosen in combinations(values, rows[0]):
        rest = [x for x in values if x not in chosen]
        for tail in _row_fillings(rows[1:], rest):
            yield (chosen,) + tail


def row_standard_bitableaux(lam: Bipartition, split_at_l: bool = False) -> list[Bitableau]:
    """``T^r(lambda)``, or ``T^r_l(lambda)`` (first component filled by ``1..l``)."""
    n, l = lam.n, lam.l
    out = []
    if split_at_l:
        firsts = [tuple(range(1, l + 1))]
    else:
        firsts = list(combinations(range(1, n + 1), l))
    for fvals in firsts:
        svals = [x for x in range(1, n + 1) if x not in fvals]
        for f in _row_fillings(lam.first, list(fvals)):
            for s in _row_fillings(lam.second, svals):
                out.append(Bitableau(f, s))
    return out


def standard_bitableaux(lam: Bipartition, split_at_l: bool = False) -> list[Bitableau]:
    """``T(lambda)`` (or ``T_l(lambda)``) in the fixed order of :func:`ordered_tableaux`."""
    return ordered_tableaux(
        [t for t in row_standard_bitableaux(lam, split_at_l) if t.is_standard()]
    )


def ordered_tableaux(tabs: Sequence[Bitableau]) -> list[Bitableau]:
    """Sort by ``d(t)`` in (length, window) order."""
    def key(t):
        d = d_of(t)
        return (length(d), tuple(d))
    return sorted(tabs, key=key)


def d_of(t: Bitableau) -> SignedPerm:
    """The permutation with ``d(t) . t^lambda = t``."""
    if not t.is_row_standard():
        raise ValueError(f"{t} is not row-standard")
    ents = t.entries()
    if sorted(ents) != list(range(1, len(ents) + 1)):
        raise ValueError(f"{t} is not filled by 1..n")
    # the canonical tableau carries k in the k-th box of the reading order
    return SignedPerm(ents)


def coset_decomposition(s: Bitableau) -> tuple[SignedPerm, Bitableau]:
    """``d(s) = y d(t)`` with ``y`` in ``Y_{l,n-l}`` and ``t`` in ``T^r_l(lambda)``."""
    lam = s.shape
    n, l = lam.n, lam.l
    fvals = sorted(x for row in s.first for x in row)
    svals = sorted(x for row in s.second for x in row)
    y = SignedPerm(fvals + svals)
    assert y in coset_reps_Y(n, l)
    t = s.act(y.inverse())
    return y, t


def insert_row(tab: list[list[int]], x: int) -> tuple[int, int]:
    """Schensted row insertion in place; returns the (row, col) of the new box."""
    r = 0
    while True:
        if r == len(tab):
            tab.append([x])
            return r, 0
        row = tab[r]
        for k, y in enumerate(row):
            if y > x:
                row[k], x = x, y
                break
        else:
            row.append(x)
            return r, len(row) - 1
        r += 1


def rs(w: SignedPerm) -> tuple[Bitableau, Bitableau]:
    """Generalized Robinson-Schensted map ``w -> (P(w), Q(w))``.

    The window is read left to right: ``|w(i)|`` is row-inserted into the
    first component of ``P`` when ``w(i) > 0`` and into the second when
    ``w(i) < 0``, and position ``i`` is recorded at the new box of the same
    component of ``Q``.
    """
    P = ([], [])
    Q = ([], [])
    for i, x in enumerate(w, 1):
        comp = 0 if x > 0 else 1
        r, c = insert_row(P[comp], abs(x))
        if r == len(Q[comp]):
            Q[comp].append([])
        Q[comp][r].append(i)
        assert len(Q[comp][r]) == c + 1

    def freeze(comp):
        return tuple(tuple(row) for row in comp)

    return Bitableau(freeze(P[0]), freeze(P[1])), Bitableau(freeze(Q[0]), freeze(Q[1]))


def type_of(w: SignedPerm) -> Bipartition:
    return rs(w)[1].shape


def sigma_lambda(lam: Bipartition) -> SignedPerm:
    """Longest element of the Young subgroup of ``lambda`` (consecutive blocks)."""
    return longest_in_blocks(list(lam.first) + list(lam.second), lam.n)


def distinguished_cell(lam: Bipartition) -> list[SignedPerm]:
    """``{d(t) sigma_lambda a_l : t in T(lambda)}``, ordered like ``T(lambda)``."""
    base = sigma_lambda(lam) * special_elements(lam.n, lam.l)[0]
    return [d_of(t) * base for t in standard_bitableaux(lam)]
