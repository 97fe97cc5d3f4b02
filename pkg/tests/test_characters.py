import cmath

import pytest

from fsind.characters import (
    abelian_characters,
    full_group,
    h1_subgroup,
    h2_subgroup,
    induce,
    inner_product,
    irreducible_characters_of_G,
    irreducible_characters_of_centralizer,
    restrict,
)
from fsind.group import identity, make_group
from fsind.structure import centralizer, conjugacy_classes

TOL = 1e-9


@pytest.fixture(scope="module")
def p34():
    return make_group(3, 4)


def degree_multiset(table):
    return sorted(round(chi.degree.real) for chi in table.irreducibles)


def test_degree_multisets():
    assert degree_multiset(irreducible_characters_of_G(make_group(3, 4))) == (
        [1] * 8 + [2] * 6 + [4] * 2
    )
    assert degree_multiset(irreducible_characters_of_G(make_group(3, 8))) == (
        [1] * 8 + [2] * 14 + [4] * 4
    )


def test_sum_of_squared_degrees(p34):
    table = irreducible_characters_of_G(p34)
    assert sum(d * d for d in degree_multiset(table)) == p34.order


def test_character_count_equals_class_count(p34):
    table = irreducible_characters_of_G(p34)
    assert len(table.irreducibles) == len(conjugacy_classes(p34))


def test_orthonormality(p34):
    irr = irreducible_characters_of_G(p34).irreducibles
    for i, chi in enumerate(irr):
        for j, psi in enumerate(irr):
            want = 1.0 if i == j else 0.0
            assert abs(inner_product(chi, psi) - want) < TOL


def test_characters_are_real_valued(p34):
    # the group is completely real, so every character is real
    for chi in irreducible_characters_of_G(p34).irreducibles:
        for g in chi.domain.sorted_elements():
            assert abs(chi(g).imag) < TOL


def test_abelian_characters_of_h1(p34):
    h1 = h1_subgroup(p34)
    chars = abelian_characters(h1)
    assert len(chars) == h1.order
    one = identity(p34)
    for chi in chars:
        assert abs(chi(one) - 1) < TOL
        for g in h1.sorted_elements():
            assert abs(abs(chi(g)) - 1) < TOL


def test_induction_degree_and_reciprocity(p34):
    h1 = h1_subgroup(p34)
    g = full_group(p34)
    chi0 = abelian_characters(h1)[3]
    ind = induce(chi0, g)
    index = g.order // h1.order
    assert abs(ind(identity(p34)) - index) < TOL
    # Frobenius reciprocity against every irreducible of G
    for chi in irreducible_characters_of_G(p34).irreducibles:
        lhs = inner_product(ind, chi)
        rhs = inner_product(chi0, restrict(chi, h1))
        assert abs(lhs - rhs) < TOL


def test_centralizer_tables(p34):
    for cls in conjugacy_classes(p34):
        c = centralizer(p34, cls.representative)
        table = irreducible_characters_of_centralizer(p34, c)
        degs = degree_multiset(table)
        assert sum(d * d for d in degs) == c.order
        irr = table.irreducibles
        for i, chi in enumerate(irr):
            for j, psi in enumerate(irr):
                want = 1.0 if i == j else 0.0
                assert abs(inner_product(chi, psi) - want) < TOL


def test_exact_angles_match_complex_values(p34):
    for chi in abelian_characters(h1_subgroup(p34)):
        for g, angle in chi.angles.items():
            assert abs(chi(g) - cmath.exp(2j * cmath.pi * float(angle))) < TOL
