import pytest

from fsind.characters import irreducible_characters_of_G
from fsind.group import group_exponent, make_group
from fsind.group_indicators import (
    IndicatorValue,
    nu_group_bruteforce,
    nu_group_closed,
)
from fsind.structure import VerificationError


@pytest.fixture(scope="module")
def p34():
    return make_group(3, 4)


def test_indicator_integrality_guard():
    with pytest.raises(VerificationError):
        IndicatorValue(m=2, raw=0.5 + 0j, rounded=0)


def test_nu1_is_triviality_detector(p34):
    # nu_1 is the multiplicity of the trivial module: 1 for it, 0 otherwise
    for chi in irreducible_characters_of_G(p34).irreducibles:
        expected = 1 if chi.label.get("trivial") else 0
        assert nu_group_bruteforce(chi, 1).rounded == expected


def test_nu2_is_one_everywhere(p34):
    # total orthogonality
    for chi in irreducible_characters_of_G(p34).irreducibles:
        assert nu_group_bruteforce(chi, 2).rounded == 1


def test_periodicity_in_m(p34):
    # nu_m depends only on m mod exponent(G) once m > 0 is shifted by it
    e = group_exponent(p34)
    for chi in irreducible_characters_of_G(p34).irreducibles:
        for m in range(1, e + 1):
            assert (
                nu_group_bruteforce(chi, m).rounded
                == nu_group_bruteforce(chi, m + e).rounded
            )


@pytest.mark.parametrize("lk", [(3, 4), (3, 8)])
def test_closed_form_matches_bruteforce(lk):
    params = make_group(*lk)
    sweep = 2 * group_exponent(params)
    for chi in irreducible_characters_of_G(params).irreducibles:
        for m in range(1, sweep + 1):
            brute = nu_group_bruteforce(chi, m).rounded
            closed = nu_group_closed(params, chi.label, m)
            assert brute == closed, (lk, chi.label, m)
            assert brute >= 0
