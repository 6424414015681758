"""Exact Bernoulli numbers and polynomials, power sums, generalized Bernoulli numbers.

Convention: X e^{yX} / (e^X - 1) = sum B_r(y) X^r / r!, so B_1 = -1/2.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb

from .characters import DirichletCharacter, _normalize, char_value, trivial_character
from .cyclo import CycloElement
from .padic import PAdic, PrimeContext, valuation, verschiebung, verschiebung_rational

_lock = threading.Lock()
_B: list[Fraction] = [Fraction(1)]


def bernoulli_number(r: int) -> Fraction:
    if r < 0:
        raise ValueError("r must be >= 0")
    if r < len(_B):
        return _B[r]
    with _lock:
        # sum_{k<=n} C(n+1, k) B_k = 0 for n >= 1
        while len(_B) <= r:
            n = len(_B)
            acc = sum((comb(n + 1, k) * _B[k] for k in range(n)), Fraction(0))
            _B.append(-acc / (n + 1))
    return _B[r]


def bernoulli_poly(r: int, y):
    """B_r(y) = sum C(r,k) B_k y^(r-k); y may be rational or p-adic."""
    if r < 0:
        raise ValueError("r must be >= 0")
    if not isinstance(y, PAdic):
        y = Fraction(y)
    out = 0
    for k in range(r + 1):
        out = out + comb(r, k) * bernoulli_number(k) * y ** (r - k)
    return out if isinstance(out, PAdic) else Fraction(out)


def bernoulli_poly_coeffs(r: int) -> list[Fraction]:
    """Coefficients of B_r(y), lowest degree first."""
    return [comb(r, r - i) * bernoulli_number(r - i) for i in range(r + 1)]


def power_sum(k: int, n: int) -> Fraction:
    """S_k(n) = sum_{0 <= d <= n} d^k via the closed form (0^0 = 1)."""
    if k < 0 or n < 0:
        raise ValueError("k, n must be >= 0")
    return (bernoulli_poly(k + 1, n + 1) - bernoulli_number(k + 1)) / (k + 1)


def power_sum_brute(k: int, n: int) -> int:
    return sum(d ** k for d in range(n + 1))


def lambda_k_closed(k: int, x, p: int | None = None):
    """Lambda_k(x) = sum over 0 <= d < x with p not dividing d of d^k, in closed form.

    Valid for any p-integral x (rational or p-adic) by continuity.
    """
    if isinstance(x, PAdic):
        p = x.ctx.p
        vx = verschiebung(x - 1) + 1
    else:
        if p is None:
            raise ValueError("rational x needs p")
        x = Fraction(x)
        vx = verschiebung_rational(x - 1, p) + 1
    b = bernoulli_number(k + 1)
    pk = p ** k
    out = (bernoulli_poly(k + 1, x) - pk * bernoulli_poly(k + 1, vx) - (1 - pk) * b) / (k + 1)
    return out


def lambda_k_brute(k: int, n: int, p: int) -> int:
    return sum(d ** k for d in range(n) if d % p)


# -- generalized Bernoulli numbers ---------------------------------------------


def _lift_ctx(theta: DirichletCharacter, extra: int) -> DirichletCharacter:
    ctx = theta.ctx.with_precision(theta.ctx.W + extra)
    return _normalize(theta.modulus, theta.order, theta.exps, theta.omega, ctx)


def generalized_bernoulli(n: int, theta: DirichletCharacter) -> CycloElement:
    """B_{n,theta} = f^(n-1) sum_{a=1..f} theta(a) B_n(a/f), f the conductor.

    Exact for symbolic characters; twisted characters are summed at a raised
    precision and returned at the original one.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    f = theta.conductor
    order = theta.order
    if theta.is_trivial():
        b = bernoulli_number(n)
        # B_{1,1} = +1/2 under f = 1 and B_1(1) = 1/2
        return CycloElement.scalar(-b if n == 1 else b, 1)
    if theta.is_symbolic():
        vec = [Fraction(0)] * order
        for a in range(1, f + 1):
            val = char_value(theta, a)
            if val is None:
                continue
            vec[val[0] % order] += f ** (n - 1) * bernoulli_poly(n, Fraction(a, f))
        return CycloElement.from_vector(order, vec)
    ctx0 = theta.ctx
    guard = 2 * valuation(f, ctx0.p) + 2 + n.bit_length()
    big = _lift_ctx(theta, guard)
    ctx = big.ctx
    vec = [ctx.zero()] * order
    for a in range(1, f + 1):
        val = char_value(big, a)
        if val is None:
            continue
        j, w = val
        # f^(n-1) B_n(a/f) = sum_k C(n,k) B_k a^(n-k) f^(k-1)
        term = sum(comb(n, k) * bernoulli_number(k) * a ** (n - k) * Fraction(f) ** (k - 1) for k in range(n + 1))
        vec[j % order] = vec[j % order] + ctx(w) * ctx(term)
    out = CycloElement.from_vector(order, vec)
    return CycloElement(order, [_reprec(c, ctx0) for c in out.coeffs])


def _reprec(c: PAdic, ctx: PrimeContext) -> PAdic:
    prec = min(c.prec, ctx.W)
    if c.is_zero():
        return ctx.zero(prec)
    return PAdic(ctx, c.v, c.u, prec)


def classical_L_value(n: int, theta: DirichletCharacter) -> CycloElement:
    """L(1-n, theta) = -B_{n,theta}/n."""
    return -generalized_bernoulli(n, theta) / n


def trivial_zeta_value(n: int) -> Fraction:
    """zeta(1-n) for n >= 2."""
    return -bernoulli_number(n) / n


__all__ = [
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_poly_coeffs",
    "power_sum",
    "power_sum_brute",
    "lambda_k_closed",
    "lambda_k_brute",
    "generalized_bernoulli",
    "classical_L_value",
    "trivial_zeta_value",
    "trivial_character",
]
