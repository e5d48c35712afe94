import pytest
from hypothesis import given, settings, strategies as st

from hecke_bn.laurent import ONE, ZERO, V, v
from hecke_bn.linalg import (
    RationalMatrix, det, eye, inverse_unitriangular, matmul, normalize_vector,
    nullspace, rref_fraction_free, solve_square,
)

small = st.sampled_from([ZERO, ONE, -ONE, V, v, V - v, 2 * V * v ** -1, v ** -1 + V])


def test_det_examples():
    assert det(eye(3)) == ONE
    assert det([[V, v], [v, V]]) == V ** 2 - v ** 2
    assert det([[ZERO, ONE], [ONE, ZERO]]) == -ONE
    assert det([[ONE, V], [ONE, V]]) == ZERO


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_multiplicative(a, b):
    assert det(matmul(a, b)) == det(a) * det(b)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=3))
def test_nullspace_vectors_are_solutions(rows):
    basis = nullspace(rows, 4)
    R, pivots, _ = rref_fraction_free(rows)
    assert len(basis) == 4 - len(pivots)
    for vec in basis:
        assert any(vec)
        for row in rows:
            assert sum((x * y for x, y in zip(row, vec)), ZERO) == ZERO


def test_normalize_vector():
    assert normalize_vector([ZERO, 2 * V * v, 2 * V * v * (V + v)]) == [ZERO, ONE, V + v]
    assert normalize_vector([-V, ZERO]) == [ONE, ZERO]
    assert normalize_vector([V + v, V ** 2 + V * v]) == [ONE, V]
    # no entry divides the others: strip content and the minimal monomial
    assert normalize_vector([-2 * V * (V + v), 2 * V * (V - v)]) == [V + v, v - V]
    assert normalize_vector([(V ** 2 + 1) * v, ZERO, (V ** 2 + 1) * v]) == [ONE, ZERO, ONE]


def test_solve_and_inverse():
    a = [[ONE, -v ** -1, ZERO], [ZERO, ONE, -v ** -1], [ZERO, ZERO, ONE]]
    inv = inverse_unitriangular(a)
    assert matmul(a, inv) == eye(3)
    num, den = solve_square([[V, ZERO], [ZERO, v]], [ONE, ONE])
    assert [x.exact_div(den) * den for x in num] == num
    with pytest.raises(ValueError):
        solve_square([[ONE, ONE], [ONE, ONE]], [ONE, ZERO])


def test_rational_matrix():
    m = RationalMatrix.from_A([[V, ZERO], [ZERO, v]])
    assert m.is_integral()
    assert m.equals_up_to_scalar([[V * v, ZERO], [ZERO, v * v]]) == v ** -1
    assert m.equals_up_to_scalar([[V + v, ZERO], [ZERO, v]]) is None
    with pytest.raises(ZeroDivisionError):
        RationalMatrix([[ONE]], [[ZERO]])
