import pytest

from fsind.group import (
    GroupError,
    conjugate,
    element,
    element_order,
    enumerate_group,
    gen_a,
    gen_u,
    gen_v,
    group_exponent,
    identity,
    inverse,
    make_group,
    multiply,
    power,
)


@pytest.fixture(scope="module")
def p34():
    return make_group(3, 4)


def test_parameter_validation():
    with pytest.raises(GroupError):
        make_group(2, 4)  # l >= 3
    with pytest.raises(GroupError):
        make_group(3, 6)  # 4 | k
    with pytest.raises(GroupError):
        make_group(3, 0)


def test_order_and_derived_constants(p34):
    assert p34.order == 64
    assert p34.n1 == 5 and p34.n2 == 3
    assert (p34.n1 * p34.n2) % 8 == 8 - 1  # n1 n2 = -1 mod 2^l


def test_defining_relations(p34):
    a, u, v = gen_a(p34), gen_u(p34), gen_v(p34)
    one = identity(p34)
    assert power(a, 8) == one
    assert power(u, 4) == one
    assert power(v, 2) == one
    assert conjugate(a, u) == power(a, p34.n1)
    assert conjugate(a, v) == power(a, p34.n2)
    assert conjugate(u, v) == inverse(u)


def test_enumeration_is_complete_and_deterministic(p34):
    elems = enumerate_group(p34)
    assert len(elems) == 64
    assert len(set(elems)) == 64
    assert elems == enumerate_group(p34)
    assert elems[0] == identity(p34)


def test_group_axioms_exhaustive(p34):
    elems = enumerate_group(p34)
    one = identity(p34)
    for g in elems:
        assert multiply(g, one) == g
        assert multiply(one, g) == g
        assert multiply(g, inverse(g)) == one
    # associativity on a deterministic sample triple grid
    sample = elems[::7]
    for g in sample:
        for h in sample:
            for t in sample:
                assert multiply(multiply(g, h), t) == multiply(g, multiply(h, t))


def test_power_matches_repeated_multiplication(p34):
    for g in enumerate_group(p34)[::5]:
        acc = identity(p34)
        for m in range(1, 10):
            acc = multiply(acc, g)
            assert power(g, m) == acc
        assert power(g, -1) == inverse(g)


def test_element_order_and_exponent(p34):
    assert element_order(identity(p34)) == 1
    assert element_order(gen_a(p34)) == 8
    assert element_order(gen_v(p34)) == 2
    assert group_exponent(p34) == 8
    assert group_exponent(make_group(4, 4)) == 16


def test_normal_form_reduction(p34):
    # exponents reduce into canonical ranges
    e = element(p34, 13, 7, 3)
    assert (e.s, e.i, e.x) == (5, 3, 1)
