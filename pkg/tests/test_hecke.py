import pytest
from hypothesis import given, settings, strategies as st

from hecke_bn.hecke import (
    GENERIC, HeckeElt, T, WeightSpec, bar_involution, flat, invert_T, mul,
    mul_gen_left, mul_gen_right,
)
from hecke_bn.laurent import ASYMPTOTIC, ONE, V, Laurent2, v
from hecke_bn.signed_perm import enumerate_group, from_word, generator, identity

N = 3
GROUP = enumerate_group(N)
E = identity(N)

coeff = st.sampled_from([ONE, -ONE, V, v, V ** -1 - v, 2 * v ** -2, V * v])
elements = st.dictionaries(st.sampled_from(GROUP), coeff, max_size=4).map(
    lambda d: HeckeElt(N, dict(d)))


def Ts(i):
    return T(generator(i, N))


def test_quadratic_relations():
    for i in range(N):
        vs = GENERIC.param(i)
        assert Ts(i) * Ts(i) == T(E) + Ts(i).scale(vs - vs.bar())


def test_braid_relations():
    t, s1, s2 = Ts(0), Ts(1), Ts(2)
    assert t * s1 * t * s1 == s1 * t * s1 * t
    assert s1 * s2 * s1 == s2 * s1 * s2
    assert t * s2 == s2 * t


def test_T_of_reduced_products():
    w = from_word("s2 s1 t", N)
    assert Ts(2) * Ts(1) * Ts(0) == T(w)


@settings(max_examples=40, deadline=None)
@given(elements, elements, elements)
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert mul(a, b + c) == mul(a, b) + mul(a, c)


@settings(max_examples=40, deadline=None)
@given(elements, elements)
def test_bar_is_ring_involution(a, b):
    assert bar_involution(bar_involution(a)) == a
    assert bar_involution(a * b) == bar_involution(a) * bar_involution(b)


@settings(max_examples=40, deadline=None)
@given(elements, elements)
def test_flat_is_anti_automorphism(a, b):
    assert flat(a * b) == flat(b) * flat(a)
    assert flat(flat(a)) == a


@settings(max_examples=40, deadline=None)
@given(elements, st.integers(0, N - 1))
def test_generator_products(a, i):
    assert mul_gen_left(i, a) == Ts(i) * a
    assert mul_gen_right(a, i) == a * Ts(i)


@pytest.mark.parametrize("w", GROUP)
def test_inverse(w):
    assert T(w) * invert_T(w) == T(E)
    assert invert_T(w) * T(w) == T(E)


def test_bar_of_generator():
    assert bar_involution(Ts(0)) == Ts(0) - T(E).scale(V - V ** -1)


def test_mixed_weights_rejected():
    other = WeightSpec(b=(2, 0))
    with pytest.raises(ValueError):
        T(E) + T(E, other)
    with pytest.raises(ValueError):
        WeightSpec(b=(-1, 0)).check_positive(ASYMPTOTIC)


def test_coefficients_and_scalars():
    h = T(E).scale(V) + Ts(0) * 2
    assert h.coeff(E) == V and h.coeff(generator(0, N)) == Laurent2({(0, 0): 2})
    assert h.coeff(generator(1, N)) == 0
    assert -h + h == HeckeElt(N, {})
