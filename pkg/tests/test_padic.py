from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from klsums.padic import (
    DivisionByZero,
    NotAUnit,
    PAdicError,
    PrimeContext,
    disc_log_int,
    exp_padic,
    flat,
    gamma_generator,
    log_iwasawa,
    parse_padic,
    pow_zp,
    render_padic,
    sharp,
    teichmuller,
    unit_projection,
    valuation,
    verschiebung,
    verschiebung_rational,
)

PRIMES = [2, 3, 5, 7, 11]
primes = st.sampled_from(PRIMES)


@st.composite
def unit_pairs(draw):
    p = draw(primes)
    W = draw(st.integers(3, 12))
    a = draw(st.integers(1, 10 ** 6).filter(lambda x: x % p))
    b = draw(st.integers(1, 10 ** 6).filter(lambda x: x % p))
    return PrimeContext(p, W), a, b


def test_context_rejects_composite_and_tiny_precision():
    with pytest.raises(ValueError):
        PrimeContext(6, 10)
    with pytest.raises(ValueError):
        PrimeContext(5, 2)


def test_rational_embedding_and_valuation():
    ctx = PrimeContext(5, 6)
    x = ctx(Fraction(-2, 3))
    assert x.residue(2) == 16
    assert ctx(50).valuation() == 2
    assert valuation(Fraction(3, 25), 5) == -2
    assert (ctx(Fraction(1, 5)) * 5 - 1).is_zero()


def test_division_by_zero_and_non_units():
    ctx = PrimeContext(5, 6)
    with pytest.raises(DivisionByZero):
        ctx(1) / ctx(0)
    with pytest.raises(NotAUnit):
        teichmuller(ctx(10))


def test_teichmuller_values():
    assert teichmuller(PrimeContext(5, 3)(2)).residue() == 57
    assert teichmuller(PrimeContext(2, 6)(3)).residue() == 2 ** 6 - 1


@given(unit_pairs())
def test_omega_multiplicative(data):
    ctx, a, b = data
    assert teichmuller(ctx(a * b)) == teichmuller(ctx(a)) * teichmuller(ctx(b))


@given(unit_pairs())
def test_unit_times_omega(data):
    ctx, a, _ = data
    assert unit_projection(ctx(a)) * teichmuller(ctx(a)) == ctx(a)
    x = unit_projection(ctx(a))
    assert (x - 1).valuation() >= (2 if ctx.p == 2 else 1)


@given(unit_pairs(), st.integers(0, 20))
def test_pow_zp_integer_exponents(data, k):
    ctx, a, _ = data
    x = unit_projection(ctx(a))
    acc = ctx(1)
    for _ in range(k):
        acc = acc * x
    assert pow_zp(ctx(a), k) == acc


@given(unit_pairs())
def test_pow_zp_rational_exponent(data):
    ctx, a, _ = data
    if ctx.p == 2:
        return
    r = pow_zp(ctx(a), Fraction(1, 2))
    assert r * r == unit_projection(ctx(a))


@given(unit_pairs())
@settings(max_examples=60)
def test_log_exp_inverse(data):
    ctx, a, _ = data
    p, W = ctx.p, ctx.W
    delta = W // (p - 1)
    assert 0 <= delta <= W
    lg = log_iwasawa(ctx(a))
    if lg.is_zero():
        return
    back = exp_padic(lg)
    keep = W - delta
    assert back.congruent(unit_projection(ctx(a)), keep)
    assert log_iwasawa(ctx(a) * ctx(a)).congruent(lg + lg, keep)


def test_exp_needs_convergence():
    with pytest.raises(PAdicError):
        exp_padic(PrimeContext(5, 6)(1))


@given(st.integers(0, 149), st.integers(2, 50))
def test_residue_reps(a, h):
    if a >= 3 * h:
        return
    lo, hi = flat(a, h), sharp(a, h)
    assert 0 <= lo < h and 0 < hi <= h
    assert hi - lo in (0, h)
    assert (lo - a) % h == 0 and (hi - a) % h == 0


def test_residue_reps_on_padics():
    ctx = PrimeContext(5, 6)
    assert flat(ctx(Fraction(1, 3)), 25) == pow(3, -1, 25)
    assert sharp(ctx(50), 25) == 25


@given(primes, st.integers(1, 4), st.integers(1, 10 ** 5))
def test_disc_log_round_trip(p, n, a):
    if a % p == 0:
        return
    g = gamma_generator(p)
    mod = p ** (n + (2 if p == 2 else 1))
    x = unit_projection(PrimeContext(p, n + 4)(a)).residue()
    k = disc_log_int(x, p, n)
    assert pow(g, k, mod) == x % mod


def test_verschiebung():
    assert verschiebung_rational(Fraction(17), 5) == 3
    ctx = PrimeContext(5, 6)
    v = verschiebung(ctx(17))
    assert v.residue(5) == 3
    # V(x) = (x - x mod p)/p for rationals in Z_p
    x = Fraction(2, 3)
    assert verschiebung_rational(x, 5) * 5 + flat(ctx(x), 5) == x


def test_render_and_parse_round_trip():
    ctx = PrimeContext(5, 6)
    x = ctx(Fraction(7, 3)) * 25
    assert parse_padic(ctx, render_padic(x)) == x
