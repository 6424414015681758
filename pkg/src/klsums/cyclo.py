"""The ring R[x]/(Phi_m(x)) for R = Q (Fraction coefficients) or Z_p (PAdic coefficients).

Character values are powers of ``z = x mod Phi_m``.  Elements of rings with
different ``m`` are lifted to the lcm ring before arithmetic.  The ring is not
assumed to be a domain, so equality and congruence are coefficientwise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .padic import PAdic, PrecisionExhausted, PrimeContext


class RingMismatch(ValueError):
    pass


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("m must be >= 1")
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in _divisors(m)[:-1]:
        num = _exact_div(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]  # den is monic
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    assert not any(num[: len(den) - 1]), "non-exact cyclotomic division"
    return q


def euler_phi(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


def reduce_coeffs(coeffs: list, m: int) -> list:
    """Reduce a coefficient list (any length) modulo Phi_m; returns phi(m) entries."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, deg - 1, -1):
        lead = c[i]
        if _is_zero(lead):
            continue
        c[i] = lead - lead
        for j in range(deg):
            if phi[j]:
                c[i - deg + j] = c[i - deg + j] - lead * phi[j]
    out = c[:deg]
    zero = _zero_like(c[0] if c else 0)
    return out + [zero] * (deg - len(out))


def _is_zero(x) -> bool:
    # p-adic zeros still carry a precision bound, so they are never skipped
    return not isinstance(x, PAdic) and x == 0


def _zero_like(x):
    if isinstance(x, PAdic):
        return x.ctx.zero()
    return Fraction(0)


class CycloRing:
    __slots__ = ("m", "ctx")

    def __init__(self, m: int, ctx: PrimeContext | None = None):
        self.m = m
        self.ctx = ctx

    @property
    def phi(self) -> tuple[int, ...]:
        return cyclotomic_poly(self.m)

    @property
    def degree(self) -> int:
        return euler_phi(self.m)

    def zero(self) -> CycloElement:
        return CycloElement.scalar(0, self.m, self.ctx)

    def one(self) -> CycloElement:
        return CycloElement.scalar(1, self.m, self.ctx)

    def zeta(self, j: int = 1) -> CycloElement:
        return CycloElement.monomial(self.m, j, 1, self.ctx)

    def __eq__(self, other):
        return isinstance(other, CycloRing) and self.m == other.m and self.ctx == other.ctx

    def __hash__(self):
        return hash((self.m, self.ctx))

    def __repr__(self):
        return f"CycloRing(m={self.m}, ctx={self.ctx})"


class CycloElement:
    """Element sum(c_i z^i) of Z_p[z]/Phi_m or Q[z]/Phi_m."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        self.m = m
        self.coeffs = tuple(coeffs)
        if len(self.coeffs) != euler_phi(m):
            raise ValueError("wrong number of coefficients; use from_vector")

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_vector(cls, m: int, vec) -> CycloElement:
        """From coefficients of z^0, z^1, ... of any length (z^m = 1 is used first)."""
        folded = None
        for i, c in enumerate(vec):
            if folded is None:
                folded = [_zero_like(c)] * m
            folded[i % m] = folded[i % m] + c
        if folded is None:
            folded = [Fraction(0)] * m
        return cls(m, reduce_coeffs(folded, m))

    @classmethod
    def scalar(cls, a, m: int = 1, ctx: PrimeContext | None = None) -> CycloElement:
        if ctx is not None and not isinstance(a, PAdic):
            a = ctx(a)
        elif not isinstance(a, PAdic):
            a = Fraction(a)
        zero = _zero_like(a)
        return cls(m, [a] + [zero] * (euler_phi(m) - 1))

    @classmethod
    def monomial(cls, m: int, j: int, coeff=1, ctx: PrimeContext | None = None) -> CycloElement:
        if ctx is not None and not isinstance(coeff, PAdic):
            coeff = ctx(coeff)
        elif not isinstance(coeff, PAdic):
            coeff = Fraction(coeff)
        vec = [_zero_like(coeff)] * m
        vec[j % m] = coeff
        return cls(m, reduce_coeffs(vec, m))

    @property
    def ctx(self) -> PrimeContext | None:
        for c in self.coeffs:
            if isinstance(c, PAdic):
                return c.ctx
        return None

    @property
    def ring(self) -> CycloRing:
        return CycloRing(self.m, self.ctx)

    def is_exact(self) -> bool:
        return not any(isinstance(c, PAdic) for c in self.coeffs)

    # -- ring changes -----------------------------------------------------
    def lift_to(self, big: int) -> CycloElement:
        if big == self.m:
            return self
        if big % self.m:
            raise RingMismatch(f"cannot lift Z[zeta_{self.m}] into Z[zeta_{big}]")
        step = big // self.m
        vec = [_zero_like(self.coeffs[0])] * big
        for i, c in enumerate(self.coeffs):
            vec[i * step] = c
        return CycloElement(big, reduce_coeffs(vec, big))

    def to_padic(self, ctx: PrimeContext) -> CycloElement:
        return CycloElement(self.m, [ctx(c) for c in self.coeffs])

    def _align(self, other) -> tuple[CycloElement, CycloElement]:
        if not isinstance(other, CycloElement):
            other = CycloElement.scalar(other, self.m, self.ctx)
        a, b = self, other
        ca, cb = a.ctx, b.ctx
        if ca is not None and cb is not None and ca.p != cb.p:
            raise RingMismatch("elements over different primes")
        if ca is not None and cb is None:
            b = b.to_padic(ca)
        elif cb is not None and ca is None:
            a = a.to_padic(cb)
        if a.m != b.m:
            big = lcm(a.m, b.m)
            a, b = a.lift_to(big), b.lift_to(big)
        return a, b

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        a, b = self._align(other)
        return CycloElement(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.m, [-c for c in self.coeffs])

    def __sub__(self, other):
        a, b = self._align(other)
        return CycloElement(a.m, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, PAdic)):
            return self.scale(other)
        a, b = self._align(other)
        d = len(a.coeffs)
        prod = [_zero_like(a.coeffs[0])] * (2 * d - 1)
        for i, x in enumerate(a.coeffs):
            if _is_zero(x):
                continue
            for j, y in enumerate(b.coeffs):
                prod[i + j] = prod[i + j] + x * y
        return CycloElement(a.m, reduce_coeffs(prod, a.m))

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c) -> CycloElement:
        if isinstance(c, PAdic) and self.is_exact():
            return self.to_padic(c.ctx).scale(c)
        return CycloElement(self.m, [x * c for x in self.coeffs])

    def __truediv__(self, c):
        if isinstance(c, CycloElement):
            raise TypeError("division by ring elements is not supported")
        if isinstance(c, PAdic):
            return self.scale(c.inverse())
        return self.scale(Fraction(1) / Fraction(c))

    def __pow__(self, k: int):
        out = CycloElement.scalar(1, self.m, self.ctx)
        for _ in range(k):
            out = out * self
        return out

    # -- comparison -------------------------------------------------------
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, (CycloElement, int, Fraction, PAdic)):
            return NotImplemented
        try:
            return (self - other).is_zero()
        except RingMismatch:
            return False

    __hash__ = None

    def precision(self) -> int | None:
        ps = [c.prec for c in self.coeffs if isinstance(c, PAdic)]
        return min(ps) if ps else None

    def valuation(self, p: int | None = None) -> int | float:
        """Minimum coefficient valuation (zero coefficients count as their precision)."""
        vals = []
        for c in self.coeffs:
            if isinstance(c, PAdic):
                vals.append(c.v)
            elif c != 0:
                if p is None:
                    raise ValueError("exact element needs p for a valuation")
                from .padic import valuation
                vals.append(valuation(c, p))
        return min(vals) if vals else float("inf")

    def congruent_mod(self, other, k: int) -> bool:
        return congruent_mod(self, other, k)

    def __repr__(self):
        return render_cyclo(self)


def congruent_mod(a: CycloElement, b, k: int, p: int | None = None) -> bool:
    """True iff every coefficient of a - b has valuation >= k."""
    d = a - b
    if d.is_exact():
        if p is None:
            raise ValueError("exact elements need p")
        return all(c == 0 or _val(c, p) >= k for c in d.coeffs)
    prec = d.precision()
    if prec is not None and k > prec:
        raise PrecisionExhausted(f"cannot decide congruence mod p^{k} at precision {prec}")
    return all(c.v >= k for c in d.coeffs)


def _val(c, p):
    from .padic import valuation
    return valuation(c, p)


def embed_scalar(a, ring: CycloRing) -> CycloElement:
    return CycloElement.scalar(a, ring.m, ring.ctx)


def render_cyclo(x: CycloElement) -> str:
    terms = []
    for i, c in enumerate(x.coeffs):
        s = str(c)
        if i == 0:
            terms.append(s)
        elif i == 1:
            terms.append(f"({s})*z")
        else:
            terms.append(f"({s})*z^{i}")
    ctx = x.ctx
    tail = f"p^W={ctx.p}^{ctx.W}" if ctx else "exact"
    return " + ".join(terms) + f" (mod Phi_{x.m}, {tail})"
