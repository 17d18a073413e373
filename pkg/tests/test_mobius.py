import pytest
from hypothesis import given, settings, strategies as st

from januarials.exceptions import InvalidInputError
from januarials.mobius import (
    INFINITY, MobiusTransformation, PrimeField, apply, compose, conjugate,
    element_order, in_psl, inverse, is_prime, is_square, iter_involutions, iter_pgl2,
    iter_psl2, point_from_index, primes_between, theta, theta_square_step,
)

import oracles

F = MobiusTransformation.from_formula


def to_oracle_point(z):
    return oracles.INF if z is INFINITY else z


def test_prime_field_rejects_bad_moduli():
    for bad in (1, 2, 3, 4, 9, 15, -7):
        with pytest.raises(InvalidInputError):
            PrimeField(bad)
    assert PrimeField(13).inv(5) * 5 % 13 == 1
    assert PrimeField(7).points()[-1] is INFINITY


def test_is_prime_matches_sieve():
    sieve = [n for n in range(2, 500) if all(n % d for d in range(2, n))]
    assert primes_between(0, 499) == sieve
    assert not is_prime(1)


def test_apply_examples():
    x = F(13, 0, -1, 1, 0)
    assert apply(x, 0) is INFINITY
    assert apply(F(13, 1, 1, 0, 1), 12) == 0
    y = F(13, 1, -1, 1, 0)
    assert apply(y, 0) is INFINITY
    assert apply(y, INFINITY) == 1
    assert apply(y, 1) == 0


def test_normalization_and_equality():
    m = MobiusTransformation(0, 1, -1, 0, 13)
    assert m.entries == (0, 1, 12, 0)
    assert MobiusTransformation(0, 5, -5, 0, 13) == m
    assert hash(MobiusTransformation(3, 6, 9, 3, 13)) == hash(MobiusTransformation(1, 2, 3, 1, 13))
    with pytest.raises(InvalidInputError):
        MobiusTransformation(1, 2, 2, 4, 13)


def test_compose_examples():
    x, y = F(13, 0, -1, 1, 0), F(13, 1, -1, 1, 0)
    assert compose(x, y) == F(13, 1, 1, 0, 1)
    assert compose(x, y).formula() == "z -> z+1"
    assert compose(x, MobiusTransformation.identity(13)) == x
    assert compose(x, F(13, 0, 1, 1, 0)).formula() == "z -> -z"
    with pytest.raises(InvalidInputError):
        compose(x, F(17, 0, -1, 1, 0))


def test_formula_strings():
    assert F(13, 0, -1, 1, 0).formula() == "z -> -1/z"
    assert F(13, 1, -1, 1, 0).formula() == "z -> (z-1)/z"
    assert F(13, 1, 1, 1, 0).formula() == "z -> (z+1)/z"
    assert F(31, 0, 10, 1, 0).formula() == "z -> 10/z"


def test_element_order_examples():
    assert element_order(F(13, 1, 1, 0, 1)) == 13
    assert element_order(MobiusTransformation.identity(13)) == 1
    assert element_order(F(13, 1, 1, 1, 0)) == 7


def test_theta_examples():
    assert theta(F(13, 1, 1, 0, 1)) == 4
    for m in iter_involutions(13):
        assert theta(m) == 0
    assert theta(F(13, 1, 1, 1, 0)) == 12


def test_theta_square_step_examples():
    assert theta_square_step(4, 13) == 4
    assert theta_square_step(0, 13) == 4
    g = F(13, 1, 1, 1, 0)
    assert theta_square_step(theta(g), 13) == theta(compose(g, g))


def test_is_square_examples():
    assert is_square(-1, 13)
    assert not is_square(-5, 13)
    assert is_square(0, 13)
    for p in (5, 7, 101):
        assert is_square(1, p)
    for p in (7, 13, 19, 31):
        squares = oracles.squares_mod(p)
        assert [is_square(a, p) for a in range(p)] == [a in squares for a in range(p)]


def test_in_psl_examples():
    assert in_psl(F(13, 0, 1, 1, 0))
    assert not in_psl(F(19, 0, 1, 1, 0))
    assert in_psl(MobiusTransformation.identity(19))


def test_group_sizes():
    for p in (5, 7):
        assert len(list(iter_pgl2(p))) == p * (p * p - 1)
        assert len(list(iter_psl2(p))) == p * (p * p - 1) // 2
        assert len(list(iter_involutions(p))) == p * p


def test_apply_matches_case_analysis_oracle():
    for p in (5, 13):
        for m in iter_pgl2(p):
            a, b, c, d = m.entries
            ref = oracles.mobius_map(a, c, b, d, p)
            for i in range(p + 1):
                z = point_from_index(i, p)
                assert to_oracle_point(apply(m, z)) == ref[to_oracle_point(z)]


def test_order_matches_point_map_oracle():
    for m in iter_pgl2(7):
        a, b, c, d = m.entries
        assert element_order(m) == oracles.map_order(oracles.mobius_map(a, c, b, d, 7))


@pytest.mark.parametrize("p", [5, 7, 11, 31, 97])
def test_apply_is_bijection(p):
    for m in (F(p, 1, 2, 3, 5), F(p, 0, 1, 1, 0), F(p, 2, 0, 0, 1)):
        images = {apply(m, point_from_index(i, p)) for i in range(p + 1)}
        assert len(images) == p + 1


matrices = st.tuples(*[st.integers(0, 30)] * 4)


def _mob(t, p=31):
    a, b, c, d = t
    return MobiusTransformation(a, b, c, d, p)


@settings(max_examples=200, deadline=None)
@given(matrices, matrices, matrices)
def test_compose_is_associative_and_left_to_right(t1, t2, t3):
    try:
        m1, m2, m3 = _mob(t1), _mob(t2), _mob(t3)
    except InvalidInputError:
        return
    assert compose(compose(m1, m2), m3) == compose(m1, compose(m2, m3))
    for i in range(32):
        z = point_from_index(i, 31)
        assert apply(compose(m1, m2), z) == apply(m2, apply(m1, z))


@settings(max_examples=200, deadline=None)
@given(matrices, matrices, st.integers(1, 30))
def test_theta_is_invariant(t1, t2, scale):
    try:
        m, h = _mob(t1), _mob(t2)
    except InvalidInputError:
        return
    assert theta(conjugate(m, h)) == theta(m)
    assert compose(m, inverse(m)).is_identity()
    # theta from a rescaled representative
    a, b, c, d = (v * scale % 31 for v in m.entries)
    assert (a + d) ** 2 * pow(a * d - b * c, -1, 31) % 31 == theta(m)
