"""Fixed-precision p-adic arithmetic.

A :class:`PAdic` is ``p**v * u`` with ``u`` a unit known modulo ``p**(prec - v)``;
``prec`` is the absolute precision, so the value is known modulo ``p**prec``.
All operations are pure and every result carries its own ``prec``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd


class PAdicError(ArithmeticError):
    pass


class DivisionByZero(PAdicError, ZeroDivisionError):
    pass


class PrecisionExhausted(PAdicError):
    pass


class NotAUnit(PAdicError):
    pass


class NotOneUnit(PAdicError):
    pass


class NonIntegral(PAdicError):
    pass


NonIntegralExponent = NonIntegral


class BadModulus(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def valuation(x, p: int) -> int:
    """p-adic valuation of a nonzero int or Fraction."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


class PrimeContext:
    """A prime ``p`` together with the working precision ``W``."""

    __slots__ = ("p", "W")

    def __init__(self, p: int, W: int = 20):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if W < 3:
            raise ValueError("working precision W must be >= 3")
        self.p = p
        self.W = W

    def __repr__(self):
        return f"PrimeContext(p={self.p}, W={self.W})"

    def __eq__(self, other):
        return isinstance(other, PrimeContext) and (self.p, self.W) == (other.p, other.W)

    def __hash__(self):
        return hash((self.p, self.W))

    @property
    def modulus(self) -> int:
        return self.p ** self.W

    @property
    def unit_modulus(self) -> int:
        """Modulus of the Teichmueller decomposition: 4 for p = 2, else p."""
        return 4 if self.p == 2 else self.p

    @property
    def teich_order(self) -> int:
        return 2 if self.p == 2 else self.p - 1

    def with_precision(self, W: int) -> PrimeContext:
        return PrimeContext(self.p, W)

    def __call__(self, x, prec: int | None = None) -> PAdic:
        if isinstance(x, PAdic):
            return x if x.ctx == self else PAdic(self, x.v, x.u, x.prec)
        if isinstance(x, str):
            return parse_padic(self, x)
        return PAdic.from_rational(self, x, prec)

    def zero(self, prec: int | None = None) -> PAdic:
        return PAdic(self, 0, 0, self.W if prec is None else prec)

    def one(self) -> PAdic:
        return PAdic(self, 0, 1, self.W)


class PAdic:
    __slots__ = ("ctx", "v", "u", "prec")

    def __init__(self, ctx: PrimeContext, v: int, u: int, prec: int):
        # normalizing constructor: accepts any integer u, extracts valuation
        p = ctx.p
        if u != 0:
            while u % p == 0 and v < prec:
                u //= p
                v += 1
        if u == 0 or v >= prec:
            self.ctx, self.v, self.u, self.prec = ctx, prec, 0, prec
            return
        rel = prec - v
        if rel > ctx.W:
            rel = ctx.W
            prec = v + rel
        if v < -ctx.W:
            raise PrecisionExhausted(f"valuation {v} below -W={-ctx.W}")
        self.ctx, self.v, self.u, self.prec = ctx, v, u % p ** rel, prec

    @classmethod
    def from_rational(cls, ctx: PrimeContext, x, prec: int | None = None) -> PAdic:
        x = Fraction(x)
        if x == 0:
            return cls(ctx, 0, 0, ctx.W if prec is None else prec)
        p = ctx.p
        v = valuation(x, p)
        n = x.numerator // p ** max(v, 0)
        d = x.denominator // p ** max(-v, 0)
        if v < -ctx.W:
            raise PrecisionExhausted(f"valuation {v} below -W={-ctx.W}")
        if prec is None:
            prec = ctx.W + min(v, 0)
        rel = prec - v
        if rel <= 0:
            return cls(ctx, 0, 0, prec)
        mod = p ** rel
        return cls(ctx, v, n * pow(d, -1, mod) % mod, prec)

    # -- basic properties -------------------------------------------------
    def is_zero(self) -> bool:
        return self.u == 0

    @property
    def rel(self) -> int:
        return self.prec - self.v

    def is_unit(self) -> bool:
        return self.u != 0 and self.v == 0

    def is_integral(self) -> bool:
        return self.v >= 0

    def residue(self, k: int | None = None) -> int:
        """Integer representative modulo p**k (default: p**prec)."""
        if k is None:
            k = self.prec
        if k > self.prec:
            raise PrecisionExhausted(f"asked for {k} digits, only {self.prec} known")
        if k <= 0:
            return 0
        if self.v < 0:
            raise NonIntegral("residue of a non-integral p-adic number")
        if self.u == 0:
            return 0
        return self.u * self.ctx.p ** self.v % self.ctx.p ** k

    def lift(self) -> int:
        return self.residue()

    def digits(self, k: int) -> list[int]:
        r = self.residue(k)
        out = []
        for _ in range(k):
            r, d = divmod(r, self.ctx.p)
            out.append(d)
        return out

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> PAdic:
        if isinstance(other, PAdic):
            if other.ctx.p != self.ctx.p:
                raise ValueError("p-adic numbers over different primes")
            return other
        if isinstance(other, (int, Fraction)):
            return PAdic.from_rational(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        a = self
        prec = min(a.prec, b.prec)
        e = min(a.v, b.v)
        if e >= prec:
            return PAdic(a.ctx, 0, 0, prec)
        p = a.ctx.p
        x = a.u * p ** (a.v - e) + b.u * p ** (b.v - e)
        return PAdic(a.ctx, e, x % p ** (prec - e), prec)

    __radd__ = __add__

    def __neg__(self):
        if self.u == 0:
            return self
        return PAdic(self.ctx, self.v, -self.u % self.ctx.p ** self.rel, self.prec)

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return b + (-self)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        a = self
        prec = min(a.prec + b.v, b.prec + a.v)
        if a.u == 0 or b.u == 0:
            return PAdic(a.ctx, 0, 0, prec)
        rel = min(a.rel, b.rel)
        return PAdic(a.ctx, a.v + b.v, a.u * b.u % a.ctx.p ** rel, a.v + b.v + rel)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self * b.inverse()

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return b * self.inverse()

    def inverse(self) -> PAdic:
        if self.u == 0:
            raise DivisionByZero("inverse of a p-adic zero")
        mod = self.ctx.p ** self.rel
        return PAdic(self.ctx, -self.v, pow(self.u, -1, mod), -self.v + self.rel)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ctx.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def valuation(self) -> int:
        """Valuation; for a zero this is its absolute precision."""
        return self.v

    def congruent(self, other, k: int) -> bool:
        d = self - other
        if k > d.prec:
            raise PrecisionExhausted(f"cannot decide congruence mod p^{k} at precision {d.prec}")
        return d.v >= k

    def __eq__(self, other):
        try:
            b = self._coerce(other)
        except ValueError:
            return False
        if b is NotImplemented:
            return NotImplemented
        return (self - b).is_zero()

    __hash__ = None

    def __repr__(self):
        return render_padic(self)

    __str__ = __repr__


_TEXT = re.compile(r"^\s*(-?\d+)\^(-?\d+)\s*\*\s*(\d+)\s*\+\s*O\(\s*(\d+)\^\(?(-?\d+)\)?\s*\)\s*$")
_ZERO = re.compile(r"^\s*0\s*\+\s*O\(\s*(\d+)\^\(?(-?\d+)\)?\s*\)\s*$")


def render_padic(x: PAdic) -> str:
    p = x.ctx.p
    if x.u == 0:
        return f"0 + O({p}^{x.prec})"
    return f"{p}^{x.v} * {x.u} + O({p}^{x.prec})"


def parse_padic(ctx: PrimeContext, text: str) -> PAdic:
    """Parse ``p^v * u + O(p^k)``, a plain integer, or a fraction ``a/b``."""
    m = _TEXT.match(text)
    if m:
        p, v, u, p2, k = (int(g) for g in m.groups())
        if p != ctx.p or p2 != ctx.p:
            raise ValueError(f"prime mismatch in {text!r}")
        return PAdic(ctx, v, u, k)
    m = _ZERO.match(text)
    if m:
        if int(m.group(1)) != ctx.p:
            raise ValueError(f"prime mismatch in {text!r}")
        return PAdic(ctx, 0, 0, int(m.group(2)))
    try:
        return PAdic.from_rational(ctx, Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse p-adic number {text!r}") from exc


# -- integer kernels --------------------------------------------------------


@lru_cache(maxsize=4096)
def teichmuller_int(a: int, p: int, k: int) -> int:
    """omega(a) mod p**k as an integer (a prime to p)."""
    if a % p == 0:
        raise NotAUnit(f"{a} is divisible by {p}")
    if p == 2:
        return 1 if a % 4 == 1 else 2 ** k - 1
    mod = p ** k
    x = a % mod
    # x -> x^p converges to omega(a) after k-1 steps
    for _ in range(k - 1):
        x = pow(x, p, mod)
    return x


def _guard_digits(p: int, nterms: int) -> int:
    g = 0
    t = p
    while t <= nterms:
        g += 1
        t *= p
    return g


def log_one_unit_int(x: int, p: int, k: int) -> int:
    """log(x) mod p**k for an integer x == 1 mod p (mod 4 if p = 2)."""
    u = x - 1
    if u % (4 if p == 2 else p):
        raise NotOneUnit(f"{x} is not a one-unit")
    if u % p ** k == 0:
        return 0
    vu = valuation(u, p)
    # terms u^j/j with j*vu - v_p(j) < k
    nterms = 1
    while nterms * vu - _guard_digits(p, nterms) < k:
        nterms += 1
    guard = _guard_digits(p, nterms)
    mod = p ** (k + guard)
    u %= mod
    total = 0
    power = 1
    for j in range(1, nterms + 1):
        power = power * u % mod
        jj, e = j, 0
        while jj % p == 0:
            jj //= p
            e += 1
        term = power // p ** e * pow(jj, -1, mod)
        total += term if j % 2 else -term
    return total % p ** k


def exp_int(z: int, p: int, k: int) -> int:
    """exp(z) mod p**k for an integer z with v(z) >= 1 (>= 2 if p = 2)."""
    if z % (4 if p == 2 else p):
        raise PAdicError("exp does not converge")
    if z % p ** k == 0:
        return 1
    vz = valuation(z, p)
    # v(z^j/j!) >= j*vz - (j-1)/(p-1)
    nterms = 1
    while nterms * vz - (nterms - 1) // (p - 1) - 1 < k:
        nterms += 1
    guard = sum(nterms // p ** i for i in range(1, nterms.bit_length() + 1))
    mod = p ** (k + guard + 1)
    total = 1
    term = 1
    for j in range(1, nterms + 1):
        term = term * z % mod
        jj = j
        while jj % p == 0:
            jj //= p
            term //= p
        term = term * pow(jj, -1, mod) % mod
        total += term
    return total % p ** k


# -- operations on PAdic ----------------------------------------------------


def _require_unit(a: PAdic):
    if not a.is_unit():
        raise NotAUnit(f"{a} is not a p-adic unit")


def teichmuller(a) -> PAdic:
    """Root-of-unity lift omega(a); exact to the working precision."""
    _require_unit(a)
    ctx = a.ctx
    return PAdic(ctx, 0, teichmuller_int(a.u % ctx.unit_modulus, ctx.p, ctx.W), ctx.W)


def unit_projection(a: PAdic) -> PAdic:
    """<a> = a / omega(a), a one-unit (1 mod 4 for p = 2)."""
    return a / teichmuller(a)


def log_iwasawa(a: PAdic) -> PAdic:
    """Iwasawa logarithm of a unit: the series log(1+u) at u = <a> - 1."""
    _require_unit(a)
    ctx = a.ctx
    x = unit_projection(a)
    k = x.prec
    return PAdic(ctx, 0, log_one_unit_int(x.residue(), ctx.p, k), k)


def exp_padic(z: PAdic) -> PAdic:
    ctx = z.ctx
    if z.is_zero():
        return PAdic(ctx, 0, 1, min(z.prec, ctx.W))
    if z.v < (2 if ctx.p == 2 else 1):
        raise PAdicError("exp does not converge")
    k = min(z.prec, ctx.W)
    return PAdic(ctx, 0, exp_int(z.residue(), ctx.p, k), k)


def exponent_residue(s: PAdic, ctx: PrimeContext) -> tuple[int, int]:
    """Integer t with <x>^s = <x>^t for all units x, and the precision achieved."""
    if s.v < 0:
        raise NonIntegral("exponent must lie in Z_p")
    shift = 2 if ctx.p == 2 else 1
    k = min(s.prec, ctx.W - shift)
    return s.residue(k), k + shift


def pow_zp(a: PAdic, s) -> PAdic:
    """<a>^s for a unit a and s in Z_p."""
    _require_unit(a)
    ctx = a.ctx
    if isinstance(s, int):
        s = PAdic.from_rational(ctx, s)
    elif isinstance(s, Fraction):
        s = PAdic.from_rational(ctx, s)
    t, k = exponent_residue(s, ctx)
    x = unit_projection(a)
    k = min(k, x.prec)
    mod = ctx.p ** k
    return PAdic(ctx, 0, pow(x.residue(k), t, mod), k)


def residue_rep(a, h: int, kind: str = "flat") -> int:
    """a^flat_h in [0, h) or a^sharp_h in (0, h]."""
    if h < 2:
        raise BadModulus(f"modulus {h} < 2")
    if isinstance(a, PAdic):
        p = a.ctx.p
        k, hh = 0, h
        while hh % p == 0:
            hh //= p
            k += 1
        if hh != 1:
            raise BadModulus("a p-adic number has residues only modulo powers of p")
        r = a.residue(k)
    else:
        x = Fraction(a)
        if gcd(x.denominator, h) != 1:
            raise BadModulus(f"{a} is not integral at {h}")
        r = x.numerator * pow(x.denominator, -1, h) % h
    if kind == "flat":
        return r
    if kind == "sharp":
        return r if r else h
    raise ValueError(f"unknown kind {kind!r}")


def flat(a, h: int) -> int:
    return residue_rep(a, h, "flat")


def sharp(a, h: int) -> int:
    return residue_rep(a, h, "sharp")


def gamma_generator(p: int) -> int:
    """Fixed topological generator of the one-units: 1+p (5 for p = 2)."""
    return 5 if p == 2 else 1 + p


def disc_log_int(a: int, p: int, n: int) -> int:
    """k in [0, p^n) with g^k = a modulo p^(n+1) (2^(n+2) for p = 2), g the fixed generator."""
    shift = 2 if p == 2 else 1
    if (a - 1) % (4 if p == 2 else p):
        raise NotOneUnit(f"{a} is not a one-unit")
    if n == 0:
        return 0
    k = n + shift + 1
    la = log_one_unit_int(a % p ** k, p, k)
    lg = log_one_unit_int(gamma_generator(p), p, k)
    # both logs have valuation >= shift; lg has valuation exactly shift
    mod = p ** n
    return (la // p ** shift) * pow(lg // p ** shift, -1, mod) % mod


def disc_log_1unit(a: PAdic, n: int) -> int:
    ctx = a.ctx
    shift = 2 if ctx.p == 2 else 1
    if n > ctx.W - 1:
        raise PrecisionExhausted(f"level {n} exceeds W-1")
    if not a.is_unit() or (a.residue(shift) - 1) % ctx.unit_modulus:
        raise NotOneUnit(f"{a} is not a one-unit")
    return disc_log_int(a.residue(min(a.prec, n + shift)), ctx.p, n)


def verschiebung(x) -> PAdic | Fraction:
    """Digit shift a0 + a1 p + ... -> a1 + a2 p + ...; exact on p-integral rationals.

    Rationals come back as Fractions (the shift of a rational is rational); p-adic
    inputs lose one digit of precision.
    """
    if isinstance(x, PAdic):
        if x.v < 0:
            raise NonIntegral("Verschiebung of a non-integral number")
        ctx = x.ctx
        d0 = x.residue(1)
        return (x - d0) / ctx.p
    raise TypeError("use verschiebung_rational for rationals")


def verschiebung_rational(x, p: int) -> Fraction:
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NonIntegral(f"{x} is not p-integral")
    return (x - flat(x, p)) / p
