import pytest

from hecke_bn.cells import (
    canonical_basis_order, cell_module, cell_partition, check_relations, hom_space,
    same_type_matrices_agree,
)
from hecke_bn.kl import KLTable
from hecke_bn.laurent import ASYMPTOTIC, WEIGHTED_11, V, v
from hecke_bn.linalg import eye
from hecke_bn.signed_perm import enumerate_group, from_word, young_subgroup
from hecke_bn.tableaux import rs, type_of
from oracles import cells_by_closure


def words(cells):
    from hecke_bn.signed_perm import word_string
    return sorted(sorted(word_string(w) for w in c) for c in cells)


# derived from full structure constants and transitive closure, frozen
W2_ASYM = {
    "left": [["e"], ["s1"], ["s1 t", "t"], ["s1 t s1", "t s1"], ["s1 t s1 t"], ["t s1 t"]],
    "right": [["e"], ["s1"], ["s1 t", "s1 t s1"], ["s1 t s1 t"], ["t", "t s1"], ["t s1 t"]],
    "two": [["e"], ["s1"], ["s1 t", "s1 t s1", "t", "t s1"], ["s1 t s1 t"], ["t s1 t"]],
}


@pytest.mark.parametrize("side", ["left", "right", "two"])
def test_rank2_frozen(side, t2):
    part = cell_partition(2, ASYMPTOTIC, side, t2)
    assert words(part.cells) == W2_ASYM[side]
    assert sum(len(c) for c in part.cells) == 8


@pytest.mark.parametrize("side", ["left", "right", "two"])
@pytest.mark.parametrize("order", [ASYMPTOTIC, WEIGHTED_11])
def test_rank2_against_closure_oracle(side, order):
    table = KLTable(2, order)
    assert cell_partition(2, order, side, table).as_sets() == cells_by_closure(2, table, side)


def test_rank3_left_cells(t3):
    part = cell_partition(3, ASYMPTOTIC, "left", t3)
    assert len(part.cells) == 20
    cell = {from_word(x, 3) for x in ("s2 t", "s1 s2 t", "s2 s1 s2 t")}
    assert frozenset(cell) in part.as_sets()
    for c in part.cells:
        assert len({rs(w)[1] for w in c}) == 1


def test_right_cells_are_inverse_left_cells(t3):
    left = cell_partition(3, ASYMPTOTIC, "left", t3)
    right = cell_partition(3, ASYMPTOTIC, "right", t3)
    assert right.as_sets() == {frozenset(w.inverse() for w in c) for c in left.cells}


def test_preorder(t3):
    part = cell_partition(3, ASYMPTOTIC, "left", t3)
    e = from_word("e", 3)
    for w in enumerate_group(3):
        assert part.leq(w, e)
        assert part.leq(w, w)
    assert not part.leq(e, from_word("t", 3))


def test_bad_side_and_bad_basis(t3):
    with pytest.raises(ValueError):
        cell_partition(3, ASYMPTOTIC, "up", t3)
    with pytest.raises(ValueError):
        cell_partition(2, ASYMPTOTIC, "left", t3)
    cell = [from_word(x, 3) for x in ("s2 t", "s1 s2 t", "s2 s1 s2 t")]
    with pytest.raises(ValueError):
        cell_module(cell, t3, cell[:2])
    with pytest.raises(ValueError):
        cell_module(cell, t3, [cell[0], cell[0], cell[1]])


@pytest.mark.parametrize("order", [ASYMPTOTIC, WEIGHTED_11])
def test_all_cell_modules_satisfy_relations(order):
    table = KLTable(3, order)
    for c in cell_partition(3, order, "left", table).cells:
        assert check_relations(cell_module(c, table).matrices, 3)


def test_identity_cell_module(t3):
    # C_s C_e = C_s leaves the cell, so T_s acts by -v_s^-1
    m = cell_module([from_word("e", 3)], t3).matrices
    assert m == {0: [[-V ** -1]], 1: [[-v ** -1]], 2: [[-v ** -1]]}


def test_hom_space_self(t3):
    cell = [from_word(x, 3) for x in ("s2 t", "s1 s2 t", "s2 s1 s2 t")]
    rho = cell_module(cell, t3, cell).matrices
    homs = hom_space(rho, rho)
    assert len(homs) == 1 and homs[0].to_A() == eye(3)


def test_same_type_cells_agree(t3):
    part = cell_partition(3, ASYMPTOTIC, "left", t3)
    by_type = {}
    for c in part.cells:
        by_type.setdefault(type_of(c[0]), []).append(c)
    for cells in by_type.values():
        for other in cells[1:]:
            assert same_type_matrices_agree(cells[0], other, t3)
    assert [rs(w)[0] for w in canonical_basis_order(part.cells[1])] == sorted(
        (rs(w)[0] for w in part.cells[1]), key=lambda p: p.reading_word())


def test_parabolic_cells(t3):
    # S_{1,2} = <s2>: two left cells {e}, {s2}
    part = cell_partition(3, ASYMPTOTIC, "left", t3, elements=young_subgroup(1, 3), gens=[2])
    assert words(part.cells) == [["e"], ["s2"]]
