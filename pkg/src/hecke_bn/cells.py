"""
Left, right and two-sided Kazhdan-Lusztig cells, left cell modules, and
intertwiners between matrix representations.

``z <-_L y`` whenever ``C_z`` occurs in ``C_s C_y`` for a generator ``s``;
cells are the strongly connected components of that relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from .kl import KLTable
from .laurent import ZERO, MonomialOrder
from .linalg import Matrix, RationalMatrix, eye, matmul, nullspace, zeros
from .signed_perm import SignedPerm, enumerate_group, length, generator_labels
from .tableaux import rs

__all__ = [
    "CellPartition", "CellModule", "cell_partition", "left_cell_of",
    "cell_module", "hom_space", "same_type_matrices_agree", "canonical_basis_order",
    "check_relations", "sort_cell",
]


def _key(w: SignedPerm):
    return (length(w), tuple(w))


def sort_cell(cell: Iterable[SignedPerm]) -> list[SignedPerm]:
    return sorted(cell, key=_key)


@dataclass
class CellPartition:
    """Cells of a preorder, sorted by their minimal element.

    ``below[i]`` holds the indices ``j`` with cell ``j <= cell i`` in the
    induced partial order (``i`` included).
    """
    n: int
    order: MonomialOrder
    side: str
    cells: list[list[SignedPerm]]
    below: list[set[int]] = field(default_factory=list)

    def cell_of(self, w: SignedPerm) -> list[SignedPerm]:
        for c in self.cells:
            if w in c:
                return c
        raise KeyError(w)

    def as_sets(self) -> set[frozenset[SignedPerm]]:
        return {frozenset(c) for c in self.cells}

    def leq(self, x: SignedPerm, y: SignedPerm) -> bool:
        """``x <= y`` in the preorder."""
        index = {w: i for i, c in enumerate(self.cells) for w in c}
        return index[x] in self.below[index[y]]


def _left_edges(table: KLTable, elements, gens) -> list[tuple[SignedPerm, SignedPerm]]:
    edges = []
    for y in elements:
        for i in gens:
            for z in table.left_gen_product(i, y):
                edges.append((y, z))
    return edges


def cell_partition(n: int, order: MonomialOrder, side: str = "left",
                   table: KLTable | None = None,
                   elements: Sequence[SignedPerm] | None = None,
                   gens: Sequence[int] | None = None) -> CellPartition:
    """Cells of W_n (or of a parabolic subgroup given by ``elements``/``gens``).

    ``side`` is ``left``, ``right`` or ``two`` (two-sided). Right cells are
    the inverses of left cells; two-sided cells use both edge sets.
    """
    table = table or KLTable(n, order)
    if table.order != order or table.n != n:
        raise ValueError("table does not match (n, order)")
    elements = list(enumerate_group(n, force=True) if elements is None else elements)
    gens = list(range(n)) if gens is None else list(gens)
    left = _left_edges(table, elements, gens)
    if side == "left":
        edges = left
    elif side == "right":
        edges = [(y.inverse(), z.inverse()) for y, z in left]
    elif side in ("two", "two-sided"):
        side = "two"
        edges = left + [(y.inverse(), z.inverse()) for y, z in left]
    else:
        raise ValueError(f"side must be left, right or two, got {side!r}")
    g = nx.DiGraph()
    g.add_nodes_from(elements)
    g.add_edges_from(edges)
    if set(g.nodes) != set(elements):
        raise ValueError("element set is not closed under the generators")
    comps = [sort_cell(c) for c in nx.strongly_connected_components(g)]
    comps.sort(key=lambda c: _key(c[0]))
    index = {w: i for i, c in enumerate(comps) for w in c}
    dag = nx.condensation(g, scc=[set(c) for c in comps])
    # condensation nodes follow the order of the scc list we passed
    below = [{i} | set(nx.descendants(dag, i)) for i in range(len(comps))]
    assert all(index[w] == i for i, c in enumerate(comps) for w in c)
    return CellPartition(n, order, side, comps, below)


def left_cell_of(w: SignedPerm, n: int, order: MonomialOrder,
                 table: KLTable | None = None) -> list[SignedPerm]:
    return cell_partition(n, order, "left", table).cell_of(w)


@dataclass
class CellModule:
    """Matrices of ``T_s`` on the basis ``{e_w : w in cell}``.

    Column ``j`` of ``matrices[i]`` is the image of ``e_{basis[j]}`` under
    the generator with index ``i`` (0 is ``t``).
    """
    basis: list[SignedPerm]
    matrices: dict[int, Matrix]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def labelled(self) -> dict[str, Matrix]:
        labels = generator_labels(len(self.basis[0]))
        return {labels[i]: m for i, m in sorted(self.matrices.items())}


def cell_module(cell: Sequence[SignedPerm], table: KLTable,
                basis_order: Sequence[SignedPerm] | None = None,
                gens: Sequence[int] | None = None) -> CellModule:
    """Left cell module with ``C_s . e_x = sum_{y in cell} h_{s,x,y} e_y``."""
    if basis_order is None:
        basis = sort_cell(cell)
    else:
        basis = list(basis_order)
        if sorted(basis, key=_key) != sort_cell(cell) or len(set(basis)) != len(basis):
            raise ValueError("basis order is not a permutation of the cell")
    pos = {w: k for k, w in enumerate(basis)}
    gens = range(table.n) if gens is None else gens
    mats = {}
    for i in gens:
        vinv = table.weights.param(i).bar()
        m = zeros(len(basis), len(basis))
        for j, x in enumerate(basis):
            for y, h in table.left_gen_product(i, x).items():
                k = pos.get(y)
                if k is not None:
                    m[k][j] = m[k][j] + h
            # T_s = C_s - v_s^-1
            m[j][j] = m[j][j] - vinv
        mats[i] = m
    return CellModule(basis, mats)


def check_relations(mats: dict[int, Matrix], n: int, table_weights=None) -> bool:
    """Quadratic and type B braid relations for matrices of ``T_t, T_{s_i}``."""
    from .hecke import GENERIC
    weights = table_weights or GENERIC
    d = len(mats[0])
    one = eye(d)

    def mm(*ms):
        out = one
        for m in ms:
            out = matmul(out, m)
        return out

    for i, m in mats.items():
        vs = weights.param(i)
        q = vs - vs.bar()
        # T^2 = 1 + (v_s - v_s^-1) T
        lhs = mm(m, m)
        rhs = [[one[r][c] + q * m[r][c] for c in range(d)] for r in range(d)]
        if lhs != rhs:
            return False
    for i in mats:
        for j in mats:
            if i >= j:
                continue
            a, b = mats[i], mats[j]
            if i == 0 and j == 1:
                ok = mm(a, b, a, b) == mm(b, a, b, a)
            elif j == i + 1:
                ok = mm(a, b, a) == mm(b, a, b)
            else:
                ok = mm(a, b) == mm(b, a)
            if not ok:
                return False
    return True


def hom_space(rep1: dict[int, Matrix], rep2: dict[int, Matrix]) -> list[RationalMatrix]:
    """Basis over K of ``{X : rep2(g) X = X rep1(g) for all g}``.

    Each basis matrix has entries in A with the common monomial content
    removed.
    """
    if set(rep1) != set(rep2):
        raise ValueError("representations on different generator sets")
    d1 = len(next(iter(rep1.values())))
    d2 = len(next(iter(rep2.values())))
    nvar = d2 * d1

    def var(r, c):
        return r * d1 + c

    rows = []
    for g in rep1:
        a, b = rep2[g], rep1[g]
        # (a X - X b)[r][c] = sum_k a[r][k] X[k][c] - sum_k X[r][k] b[k][c]
        for r in range(d2):
            for c in range(d1):
                row = [ZERO] * nvar
                for k in range(d2):
                    if a[r][k]:
                        row[var(k, c)] = row[var(k, c)] + a[r][k]
                for k in range(d1):
                    if b[k][c]:
                        row[var(r, k)] = row[var(r, k)] - b[k][c]
                if any(row):
                    rows.append(row)
    out = []
    for vec in nullspace(rows, nvar):
        m = [[vec[var(r, c)] for c in range(d1)] for r in range(d2)]
        out.append(RationalMatrix.from_A(m))
    return out


def canonical_basis_order(cell: Sequence[SignedPerm]) -> list[SignedPerm]:
    """Order a left cell by the row reading word of ``P(w)``."""
    return sorted(cell, key=lambda w: rs(w)[0].reading_word())


def same_type_matrices_agree(cell1: Sequence[SignedPerm], cell2: Sequence[SignedPerm],
                             table: KLTable) -> bool:
    """Whether the two cell modules have identical matrices once each basis is
    ordered by the P-bitableau of its elements."""
    q1 = {rs(w)[1].shape for w in cell1}
    q2 = {rs(w)[1].shape for w in cell2}
    if len(q1) != 1 or q1 != q2:
        raise ValueError("cells do not have one common type")
    m1 = cell_module(cell1, table, canonical_basis_order(cell1))
    m2 = cell_module(cell2, table, canonical_basis_order(cell2))
    return m1.matrices == m2.matrices
