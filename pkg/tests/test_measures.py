from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from klsums.characters import omega_char, quadratic_character, trivial_character
from klsums.cyclo import CycloElement
from klsums.measures import (
    BadLevel,
    BadRange,
    EvenPrime,
    gamma_index,
    h_coeff,
    lchi_series,
    period_2reg,
    period_chi,
    period_mazur,
    period_table,
    phi_s,
    stickelberger,
    theta_to_gamma,
    two_reg_order,
)
from klsums.padic import PrimeContext
from klsums.sums import gap_valuation
from klsums import verify

GRID = [(p, N) for p in (2, 3, 5) for N in (3, 4, 7) if gcd(p, N) == 1]


def test_mazur_total_mass():
    for N in (2, 3, 4, 7):
        assert period_mazur(N, 0, 0, 5) == Fraction(N - 1, 2)


def test_quadratic_periods_level_one():
    chi = quadratic_character(3)
    vals = [period_chi(chi, m, 1, 5).coeffs[0] for m in range(5)]
    assert vals == [Fraction(1, 3), Fraction(-2, 3), Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3)]


def test_range_errors():
    chi = quadratic_character(3)
    with pytest.raises(BadRange):
        period_chi(chi, 5, 1, 5)
    with pytest.raises(EvenPrime):
        period_2reg(chi, 0, 2, 2)
    f2 = two_reg_order(3, 5)
    if f2 > 1:
        with pytest.raises(BadLevel):
            period_2reg(chi, 0, 1, 5)


def test_h_coeff_range():
    for a in range(-10, 10):
        assert 0 <= h_coeff(a, 2, 1, 3, 5) < 3


@pytest.mark.parametrize("p,N", GRID)
def test_period_formulas(p, N):
    assert verify.check_period_formulas(p, N).ok


@pytest.mark.parametrize("p,N", GRID)
def test_distribution_relation(p, N):
    assert verify.check_distribution(p, N).ok


@pytest.mark.parametrize("p,N", GRID)
def test_periodicity(p, N):
    assert verify.check_periodicity(p, N).ok


@pytest.mark.parametrize("p,N", [(3, 4), (5, 3), (7, 3)])
def test_moment_identity(p, N):
    c = verify.check_moments(p, N, kmax=3, nmax=3)
    assert c.ok, c.counterexample


@given(st.sampled_from([3, 5, 7]), st.integers(0, 3), st.data())
@settings(max_examples=40, deadline=None)
def test_mazur_distribution_random(p, n, data):
    N = data.draw(st.sampled_from([N for N in (2, 3, 4, 7) if N % p]))
    m = data.draw(st.integers(0, p ** n - 1))
    total = sum(period_mazur(N, m + b * p ** n, n + 1, p) for b in range(p))
    assert total == period_mazur(N, m, n, p)


def test_two_regularized_distribution():
    chi = quadratic_character(3)
    p = 5
    f2 = two_reg_order(3, p)
    n = f2
    for m in range(p ** n):
        total = sum((period_2reg(chi, m + b * p ** n, n + f2, p) for b in range(p ** f2)),
                    CycloElement.scalar(0, 2))
        assert (total - period_2reg(chi, m, n, p)).is_zero()


def test_lchi_series_constant_term():
    # L_chi(1) = (1/N) sum chi(a) a = -L(0, chi) = B_{1,chi}
    chi = quadratic_character(3)
    c0 = lchi_series(chi, 2)[0]
    assert c0.coeffs[0] == Fraction(-1, 3)


def test_period_table_csv():
    t = period_table("chi", 5, [1], chi=quadratic_character(3))
    text = t.to_csv()
    assert text.splitlines()[0].startswith("m,n")
    assert len(text.splitlines()) == 6


def test_gamma_index_is_a_homomorphism():
    p, n = 5, 2
    for a in range(1, 60):
        for b in (2, 3, 7):
            if a % p:
                k = (gamma_index(a, p, n) + gamma_index(b, p, n)) % p ** n
                assert k == gamma_index(a * b, p, n)


def test_theta_coefficients_are_periods():
    assert verify.check_theta().ok


def test_theta_projection_is_minus_xi():
    ctx = PrimeContext(5, 8)
    chi = quadratic_character(3)
    for psi in (None, omega_char(ctx)):
        for n in (1, 2):
            th = stickelberger("theta", chi, None, n, 5)
            xi = stickelberger("xi", chi, psi, n, 5, ctx=ctx)
            proj = theta_to_gamma(th, psi)
            for s in (0, 1):
                assert gap_valuation(phi_s(proj, s, ctx), -phi_s(xi, s, ctx)) >= n


def test_xi_specializes_to_riemann_sums():
    assert verify.check_xi().ok


def test_eta_specializes_to_interpolation():
    assert verify.check_eta().ok


def test_eta_example_coefficient():
    eta = stickelberger("eta", trivial_character(), None, 0, 5, c=2)
    assert eta.size == 1
    assert eta.coeffs[0].coeffs[0] == 2
