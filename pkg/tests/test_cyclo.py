from fractions import Fraction

from hypothesis import given, settings, strategies as st

from klsums.cyclo import CycloElement, CycloRing, cyclotomic_poly, embed_scalar, euler_phi
from klsums.padic import PrimeContext

rationals = st.fractions(max_denominator=50).map(Fraction)
ms = st.sampled_from([1, 2, 3, 4, 5, 6, 7, 8, 12])


@st.composite
def elements(draw, m=None):
    m = m or draw(ms)
    vec = draw(st.lists(rationals, min_size=euler_phi(m), max_size=euler_phi(m)))
    return CycloElement.from_vector(m, vec)


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert len(cyclotomic_poly(12)) - 1 == euler_phi(12) == 4


def test_roots_of_unity_relations():
    for m in (2, 3, 5, 7):
        ring = CycloRing(m)
        z = ring.zeta()
        assert (z ** m - ring.one()).is_zero()
        total = ring.zero()
        for j in range(m):
            total = total + ring.zeta(j)
        assert total.is_zero()


def test_monomial_wraps_exponent():
    assert (CycloElement.monomial(6, 7) - CycloElement.monomial(6, 1)).is_zero()
    assert (CycloElement.monomial(2, 1) + 1).is_zero()


@given(st.data())
@settings(max_examples=60)
def test_ring_axioms(data):
    m = data.draw(ms)
    a, b, c = (data.draw(elements(m)) for _ in range(3))
    assert ((a + b) * c - (a * c + b * c)).is_zero()
    assert ((a * b) * c - a * (b * c)).is_zero()
    assert (a * b - b * a).is_zero()


@given(rationals, rationals, ms)
@settings(max_examples=100)
def test_embed_scalar_commutes(x, y, m):
    ring = CycloRing(m)
    ex, ey = embed_scalar(x, ring), embed_scalar(y, ring)
    assert (ex + ey - embed_scalar(x + y, ring)).is_zero()
    assert (ex * ey - embed_scalar(x * y, ring)).is_zero()


@given(st.data())
@settings(max_examples=40)
def test_reduction_commutes_with_arithmetic(data):
    ctx = PrimeContext(5, 6)
    m = data.draw(st.sampled_from([1, 2, 4]))
    a = data.draw(elements(m).filter(lambda e: all(Fraction(c).denominator % 5 for c in e.coeffs)))
    b = data.draw(elements(m).filter(lambda e: all(Fraction(c).denominator % 5 for c in e.coeffs)))
    assert ((a * b).to_padic(ctx) - a.to_padic(ctx) * b.to_padic(ctx)).is_zero()
    assert (a * b).congruent_mod(a.to_padic(ctx) * b.to_padic(ctx), 6)


def test_valuation_and_precision():
    ctx = PrimeContext(5, 6)
    x = CycloElement.from_vector(4, [25, 50])
    assert x.valuation(5) == 2
    assert x.is_exact()
    y = x.to_padic(ctx)
    assert not y.is_exact()
    assert y.precision() == 6
