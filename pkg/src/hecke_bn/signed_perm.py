"""
The hyperoctahedral group W_n (Coxeter type B_n) as signed permutations.

An element is stored by its window ``(w(1), ..., w(n))``; ``w(-i) = -w(i)``.
Products compose right to left, ``(xy)(i) = x(y(i))``. The generator ``t``
changes the sign at position 1 and ``s_i`` swaps positions ``i`` and ``i+1``.

>>> w = from_word("s2 t", 3)
>>> w
SignedPerm([-1, 3, 2])
>>> length(w), t_length(w)
(2, 1)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Iterable, Sequence

__all__ = [
    "SignedPerm", "CliffordForm", "MAX_RANK",
    "identity", "generator", "generator_labels", "parse_label", "from_word",
    "parse_word", "parse_window", "word_string", "length", "t_length",
    "descents", "is_left_descent", "reduced_word", "bruhat_leq",
    "lower_interval", "enumerate_group", "generate", "special_elements",
    "longest_in_blocks", "young_subgroup", "coset_reps_Y", "clifford_form",
    "is_in_young_subgroup",
]

# rank bound for full-group enumeration; the CLI allows --force beyond it
MAX_RANK = 5


class SignedPerm(tuple):
    """A signed permutation, stored as its window (a tuple of nonzero ints)."""

    __slots__ = ()

    def __new__(cls, window: Iterable[int]):
        self = super().__new__(cls, window)
        if sorted(abs(x) for x in self) != list(range(1, len(self) + 1)):
            raise ValueError(f"not a signed permutation window: {list(self)}")
        return self

    @classmethod
    def _raw(cls, window: Iterable[int]) -> SignedPerm:
        # trusted constructor for internal products
        return super().__new__(cls, window)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1] if i > 0 else -self[-i - 1]

    def __mul__(self, other: SignedPerm) -> SignedPerm:
        if len(self) != len(other):
            raise ValueError("rank mismatch")
        return SignedPerm._raw(
            self[y - 1] if y > 0 else -self[-y - 1] for y in other
        )

    def __rmul__(self, other):
        return NotImplemented

    def inverse(self) -> SignedPerm:
        inv = [0] * len(self)
        for i, x in enumerate(self, 1):
            if x > 0:
                inv[x - 1] = i
            else:
                inv[-x - 1] = -i
        return SignedPerm._raw(inv)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self, 1))

    def __repr__(self) -> str:
        return f"SignedPerm({list(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"


@dataclass(frozen=True)
class CliffordForm:
    """``w = a_w * a_l * sigma_w * b_w^{-1}``."""
    a_w: SignedPerm
    l: int
    sigma_w: SignedPerm
    b_w: SignedPerm

    def recompose(self) -> SignedPerm:
        a_l = special_elements(self.a_w.n, self.l)[0]
        return self.a_w * a_l * self.sigma_w * self.b_w.inverse()


def identity(n: int) -> SignedPerm:
    return SignedPerm._raw(range(1, n + 1))


def generator(i: int, n: int) -> SignedPerm:
    """Generator by index: 0 is ``t``, ``i >= 1`` is ``s_i``."""
    if not 0 <= i < n:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    w = list(range(1, n + 1))
    if i == 0:
        w[0] = -1
    else:
        w[i - 1], w[i] = w[i], w[i - 1]
    return SignedPerm._raw(w)


def generator_labels(n: int) -> list[str]:
    return ["t"] + [f"s{i}" for i in range(1, n)]


def label(i: int) -> str:
    return "t" if i == 0 else f"s{i}"


def parse_label(token: str, n: int) -> int:
    if token == "t":
        return 0
    m = re.fullmatch(r"s(\d+)", token)
    if m is None:
        raise ValueError(f"unknown generator token {token!r}")
    i = int(m.group(1))
    if not 1 <= i < n:
        raise ValueError(f"generator {token!r} out of range for rank {n}")
    return i


def parse_word(text: str | Sequence[str], n: int) -> list[int]:
    tokens = text.split() if isinstance(text, str) else list(text)
    # "e" names the identity and contributes nothing
    return [parse_label(tok, n) for tok in tokens if tok != "e"]


def from_word(tokens: str | Sequence[str], n: int) -> SignedPerm:
    """Product of the generators in ``tokens``, read left to right."""
    w = identity(n)
    for i in parse_word(tokens, n):
        w = w * generator(i, n)
    return w


def parse_window(text: str) -> SignedPerm:
    """Parse ``[-1,3,2]``."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"bad window syntax {text!r}")
    return SignedPerm(int(x) for x in body[1:-1].split(",") if x.strip())


def length(w: SignedPerm) -> int:
    """Coxeter length: inversions plus the sum of ``|w(i)|`` over negative entries."""
    n = len(w)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    return inv - sum(x for x in w if x < 0)


def t_length(w: SignedPerm) -> int:
    return sum(1 for x in w if x < 0)


def left_mul_gen(i: int, w: SignedPerm) -> SignedPerm:
    """``s * w`` for the generator with index ``i`` (acts on values)."""
    if i == 0:
        return SignedPerm._raw(-x if abs(x) == 1 else x for x in w)
    out = []
    for x in w:
        a = abs(x)
        if a == i:
            out.append(x + 1 if x > 0 else x - 1)
        elif a == i + 1:
            out.append(x - 1 if x > 0 else x + 1)
        else:
            out.append(x)
    return SignedPerm._raw(out)


def right_mul_gen(w: SignedPerm, i: int) -> SignedPerm:
    """``w * s`` for the generator with index ``i`` (acts on positions)."""
    out = list(w)
    if i == 0:
        out[0] = -out[0]
    else:
        out[i - 1], out[i] = out[i], out[i - 1]
    return SignedPerm._raw(out)


def is_left_descent(i: int, w: SignedPerm) -> bool:
    """Whether ``l(s w) < l(w)``; read off the inverse window."""
    if i == 0:
        # t w < w iff value 1 appears with a negative sign
        return -1 in w
    # s_i w < w iff w^{-1}(i) > w^{-1}(i+1)
    return _value_at_inverse(w, i) > _value_at_inverse(w, i + 1)


def _value_at_inverse(w: SignedPerm, j: int) -> int:
    # w^{-1}(j)
    for k, x in enumerate(w, 1):
        if x == j:
            return k
        if x == -j:
            return -k
    raise AssertionError


def is_right_descent(w: SignedPerm, i: int) -> bool:
    if i == 0:
        return w[0] < 0
    return w[i - 1] > w[i]


def descents(w: SignedPerm, side: str = "right") -> set[str]:
    """Generator labels ``s`` with ``l(ws) < l(w)`` (right) or ``l(sw) < l(w)`` (left)."""
    n = len(w)
    if side == "right":
        return {label(i) for i in range(n) if is_right_descent(w, i)}
    if side == "left":
        return {label(i) for i in range(n) if is_left_descent(i, w)}
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def first_left_descent(w: SignedPerm) -> int | None:
    for i in range(len(w)):
        if is_left_descent(i, w):
            return i
    return None


def reduced_word(w: SignedPerm) -> list[int]:
    """A reduced word (generator indices) using the lowest-index left descent first."""
    word = []
    while True:
        i = first_left_descent(w)
        if i is None:
            return word
        word.append(i)
        w = left_mul_gen(i, w)


def word_string(w: SignedPerm) -> str:
    """Display form, e.g. ``s2 s1 s2 t``: greedy in the highest-index left descent."""
    word = []
    while not w.is_identity():
        i = max(i for i in range(len(w)) if is_left_descent(i, w))
        word.append(i)
        w = left_mul_gen(i, w)
    return " ".join(label(i) for i in word) or "e"


@lru_cache(maxsize=None)
def bruhat_leq(y: SignedPerm, w: SignedPerm) -> bool:
    """Bruhat order by the lifting property."""
    if len(y) != len(w):
        raise ValueError("rank mismatch")
    if y.is_identity():
        return True
    ly, lw = length(y), length(w)
    if ly > lw:
        return False
    if ly == lw:
        return y == w
    s = first_left_descent(w)
    sw = left_mul_gen(s, w)
    if is_left_descent(s, y):
        return bruhat_leq(left_mul_gen(s, y), sw)
    return bruhat_leq(y, sw)


@lru_cache(maxsize=None)
def lower_interval(w: SignedPerm) -> frozenset[SignedPerm]:
    """``{x : x <= w}``, from ``[e, sw] union s[e, sw]`` for a left descent ``s``."""
    s = first_left_descent(w)
    if s is None:
        return frozenset([w])
    below = lower_interval(left_mul_gen(s, w))
    return below | {left_mul_gen(s, x) for x in below}


def _sort_key(w: SignedPerm):
    return (length(w), tuple(w))


def enumerate_group(n: int, force: bool = False) -> list[SignedPerm]:
    """All ``2^n n!`` elements of W_n in (length, window) order."""
    if n < 1 or (n > MAX_RANK and not force):
        raise ValueError(f"rank {n} outside the supported range 1..{MAX_RANK}")
    return _enumerate(n)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> list[SignedPerm]:
    out = []
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            out.append(SignedPerm._raw(s * x for s, x in zip(signs, perm)))
    out.sort(key=_sort_key)
    assert len(out) == 2 ** n * factorial(n)
    return out


def generate(gens: Iterable[int], n: int) -> list[SignedPerm]:
    """The subgroup generated by the given generator indices, sorted."""
    gens = list(gens)
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for w in frontier:
            for i in gens:
                x = left_mul_gen(i, w)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return sorted(seen, key=_sort_key)


def longest_in_blocks(blocks: Sequence[int], n: int) -> SignedPerm:
    """Longest element of the Young subgroup with consecutive blocks of the given sizes."""
    if sum(blocks) > n:
        raise ValueError("blocks exceed rank")
    w = []
    start = 1
    for b in blocks:
        w.extend(range(start + b - 1, start - 1, -1))
        start += b
    w.extend(range(start, n + 1))
    return SignedPerm._raw(w)


def special_elements(n: int, l: int) -> tuple[SignedPerm, SignedPerm, SignedPerm]:
    """``(a_l, sigma_l, w_l)``.

    ``a_l = t (s1 t) (s2 s1 t) ... (s_{l-1} ... s1 t)``, ``sigma_l`` is the
    longest element of the symmetric group on ``{1..l}`` and ``w_l`` that of
    the type B_l parabolic ``<t, s1, ..., s_{l-1}>``.
    """
    if not 0 <= l <= n:
        raise ValueError(f"l={l} out of range 0..{n}")
    word = []
    for k in range(l):
        word.extend(f"s{j}" for j in range(k, 0, -1))
        word.append("t")
    a_l = from_word(word, n)
    sigma_l = longest_in_blocks([l], n)
    w_l = SignedPerm._raw([-i for i in range(1, l + 1)] + list(range(l + 1, n + 1)))
    return a_l, sigma_l, w_l


def young_subgroup(l: int, n: int) -> list[SignedPerm]:
    """``S_{l,n-l} = S_{1..l} x S_{l+1..n}``."""
    return generate([i for i in range(1, n) if i != l], n)


def is_in_young_subgroup(w: SignedPerm, blocks: Sequence[int]) -> bool:
    """Whether ``w`` is an unsigned permutation preserving the consecutive blocks."""
    lo = 1
    for b in blocks:
        hi = lo + b - 1
        if not all(lo <= w[i - 1] <= hi for i in range(lo, hi + 1)):
            return False
        lo = hi + 1
    return all(w[i - 1] == i for i in range(lo, len(w) + 1))


@lru_cache(maxsize=None)
def coset_reps_Y(n: int, l: int) -> tuple[SignedPerm, ...]:
    """Distinguished left coset representatives of S_{l,n-l} in S_n.

    These are the permutations increasing on positions ``1..l`` and on
    ``l+1..n``, one for each ``l``-subset of values.
    """
    if not 0 <= l <= n:
        raise ValueError(f"l={l} out of range 0..{n}")
    reps = []
    for first in combinations(range(1, n + 1), l):
        rest = [x for x in range(1, n + 1) if x not in first]
        reps.append(SignedPerm._raw(list(first) + rest))
    reps.sort(key=_sort_key)
    assert len(reps) == comb(n, l)
    return tuple(reps)


def clifford_form(w: SignedPerm) -> CliffordForm:
    """Unique factorization ``w = a_w a_l sigma_w b_w^{-1}``."""
    n = len(w)
    l = t_length(w)
    a_l = special_elements(n, l)[0]
    a_l_inv = a_l.inverse()
    # w b = a a_l sigma: the set of positions carrying negative values in
    # w b is {1..l}, which pins b; a is then pinned by the values
    for b in coset_reps_Y(n, l):
        wb = w * b
        if not all(x < 0 for x in wb[:l]):
            continue
        for a in coset_reps_Y(n, l):
            sigma = a_l_inv * a.inverse() * wb
            if is_in_young_subgroup(sigma, [l, n - l]):
                return CliffordForm(a, l, sigma, b)
    raise AssertionError(f"no Clifford form found for {w!r}")
