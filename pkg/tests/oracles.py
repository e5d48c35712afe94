"""Slow, independent reference implementations used to derive test values."""

from __future__ import annotations

from collections import deque
from itertools import combinations

from hecke_bn.hecke import GENERIC, HeckeElt, T, mul_gen_left
from hecke_bn.laurent import ZERO, split
from hecke_bn.signed_perm import SignedPerm, generator, identity


def cayley_lengths(n: int) -> dict[SignedPerm, int]:
    """Word length by breadth-first search in the Cayley graph."""
    e = identity(n)
    gens = [generator(i, n) for i in range(n)]
    dist = {e: 0}
    queue = deque([e])
    while queue:
        w = queue.popleft()
        for s in gens:
            x = w * s
            if x not in dist:
                dist[x] = dist[w] + 1
                queue.append(x)
    return dist


def bfs_reduced_word(w: SignedPerm) -> list[int]:
    n = len(w)
    dist = cayley_lengths(n)
    word = []
    while dist[w]:
        for i in range(n):
            x = w * generator(i, n)
            if dist[x] < dist[w]:
                word.append(i)
                w = x
                break
    return word[::-1]


def bruhat_subword(y: SignedPerm, w: SignedPerm) -> bool:
    """Subword property: ``y <= w`` iff a subword of a reduced word of ``w`` gives ``y``."""
    n = len(w)
    word = bfs_reduced_word(w)
    for k in range(len(word) + 1):
        for idx in combinations(range(len(word)), k):
            x = identity(n)
            for j in idx:
                x = x * generator(word[j], n)
            if x == y:
                return True
    return False


def _bar_T(w: SignedPerm, weights=GENERIC) -> HeckeElt:
    """``T_{w^-1}^-1`` as a product of ``T_s^-1 = T_s - (v_s - v_s^-1)``."""
    n = len(w)
    out = T(identity(n), weights)
    for i in reversed(bfs_reduced_word(w)):
        q = weights.param(i) - weights.param(i).bar()
        out = mul_gen_left(i, out) - out.scale(q)
    return out


def kl_by_r_polynomials(n: int, order, weights=GENERIC, elements=None):
    """``C_w`` via ``p_y - bar(p_y) = sum_{z>y} bar(p_z) r_{y,z}`` solved top-down."""
    dist = cayley_lengths(n)
    group = sorted(dist, key=lambda x: (dist[x], tuple(x)))
    bars = {z: _bar_T(z, weights).coeffs for z in group}
    out = {}
    for w in elements or group:
        p = {w: 1 + ZERO}
        for y in sorted((y for y in group if dist[y] < dist[w]), key=lambda x: -dist[x]):
            q = ZERO
            for z, pz in p.items():
                r = bars[z].get(y)
                if r is not None:
                    q = q + pz.bar() * r
            neg, zero, _ = split(q, order)
            assert not zero
            if neg:
                p[y] = neg
        out[w] = p
    return out


def cells_by_closure(n: int, table, side: str) -> set[frozenset]:
    """Cells from full products ``C_x C_y`` and a transitive closure."""
    group = sorted(cayley_lengths(n))
    reach = {y: {y} for y in group}
    for x in group:
        for y in group:
            for z in table.structure_constants(x, y):
                if side in ("left", "two"):
                    reach[y].add(z)
                if side in ("right", "two"):
                    reach[x].add(z)
    changed = True
    while changed:
        changed = False
        for y in group:
            new = set().union(*(reach[z] for z in reach[y]))
            if new != reach[y]:
                reach[y] = new
                changed = True
    return {frozenset(z for z in reach[y] if y in reach[z]) for y in group}
