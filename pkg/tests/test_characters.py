from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from klsums.characters import (
    CharacterError,
    NotMultiplicative,
    all_characters,
    char_eval,
    char_from_table,
    char_mul,
    char_value,
    decompose,
    omega_char,
    parse_character,
    primitive_characters,
    quadratic_character,
    trivial_character,
)
from klsums.cyclo import CycloElement
from klsums.padic import PrimeContext

GRID = [chi for n in range(1, 41) for chi in primitive_characters(n)]
chars = st.sampled_from(GRID)


def test_quadratic_values():
    chi = quadratic_character(3)
    assert (chi(5) + 1).is_zero()
    assert chi(3).is_zero()
    assert chi.conductor == 3 and not chi.is_even()
    assert quadratic_character(4).parity() == "odd"


def test_gen_table_grammar():
    chi = char_from_table(5, {2: "zeta_4^1"})
    assert chi.order == 4
    assert (chi(4) + 1).is_zero()
    with pytest.raises(NotMultiplicative):
        char_from_table(5, {2: "2"})
    assert parse_character({"modulus": 5, "gens": {"2": "zeta_4^1"}}) == chi


def test_omega_twist():
    ctx = PrimeContext(5, 3)
    w = omega_char(ctx)
    assert char_eval(w, 2).coeffs[0].residue() == 57
    w2 = omega_char(PrimeContext(2, 5))
    assert char_value(w2, 3) is not None
    assert char_eval(w2, 3).coeffs[0].residue() == 2 ** 5 - 1
    theta = char_mul(quadratic_character(3), w)
    assert theta.conductor == 15 and theta.is_even()


def test_parse_shorthands():
    ctx = PrimeContext(7, 4)
    assert parse_character("quad3") == quadratic_character(3)
    assert parse_character("1").is_trivial()
    assert parse_character("omega^2", ctx) == omega_char(ctx, 2)
    assert parse_character("quad4*omega", ctx) == char_mul(quadratic_character(4), omega_char(ctx))
    with pytest.raises(CharacterError):
        parse_character("nonsense")


def test_character_counts():
    for n in (5, 8, 12, 15):
        assert len(all_characters(n)) == sum(1 for a in range(n) if gcd(a, n) == 1)


@given(chars)
def test_orthogonality(chi):
    if chi.is_trivial():
        return
    total = CycloElement.scalar(0, chi.order)
    for a in range(chi.modulus):
        total = total + chi(a)
    assert total.is_zero()


@given(chars, st.integers(1, 200), st.integers(1, 200))
def test_multiplicative(chi, a, b):
    assert (chi(a * b) - chi(a) * chi(b)).is_zero()


@given(chars, chars, chars)
@settings(max_examples=60)
def test_mul_assoc_comm(a, b, c):
    assert char_mul(char_mul(a, b), c) == char_mul(a, char_mul(b, c))
    ab = char_mul(a, b)
    assert ab == char_mul(b, a)
    lcm = a.conductor * b.conductor // gcd(a.conductor, b.conductor)
    assert lcm % ab.conductor == 0


@given(chars, st.sampled_from([2, 3, 5, 7]))
def test_decomposition_reconstructs(chi, p):
    tame, wild = decompose(chi, p)
    assert tame.conductor % p != 0
    c = wild.conductor
    while c % p == 0:
        c //= p
    assert c == 1
    assert char_mul(tame, wild) == chi


def test_trivial_identity():
    chi = quadratic_character(12)
    assert char_mul(chi, trivial_character()) == chi
    assert char_mul(chi, chi).is_trivial()
