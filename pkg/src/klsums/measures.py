"""Period formulas for the measures behind p-adic L-functions, and finite-level Stickelberger elements.

Periods are values mu(m + p^n Z_p).  Three measures are covered: mu_chi attached
to a character of conductor N prime to p, the Mazur measure mu_{1,N^-1}, and the
2-regularized variant.  Group-ring elements live either on Gamma_n (indexed by
discrete logs to the base 1+p, or 5 when p = 2) or on Z/p^(n+1).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .bernoulli import classical_L_value
from .characters import DirichletCharacter, TrivialCharacter, char_mul, char_value
from .cyclo import CycloElement
from .padic import (
    BadModulus,
    NotAUnit,
    PAdic,
    PrimeContext,
    disc_log_int,
    exponent_residue,
    flat,
    gamma_generator,
    sharp,
    teichmuller_int,
)


class BadRange(ValueError):
    pass


class BadLevel(ValueError):
    pass


class EvenPrime(ValueError):
    pass


def _check_coprime(N: int, p: int):
    if gcd(N, p) != 1:
        raise BadModulus(f"N = {N} is not prime to p = {p}")


def _check_range(m: int, n: int, p: int):
    if n < 0 or not 0 <= m < p ** n:
        raise BadRange(f"need 0 <= m < p^n, got m = {m}, n = {n}")


def mult_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


# -- the coefficient h_n(a, m) ---------------------------------------------------


def h_coeff(a: int, m: int, n: int, N: int, p: int) -> int:
    """((a - m)/p^n) reduced into [0, N)."""
    _check_coprime(N, p)
    return flat(Fraction(a - m, p ** n), N)


# -- mu_chi ---------------------------------------------------------------------


def _require_chi(chi: DirichletCharacter, p: int):
    if chi.modulus == 1:
        raise TrivialCharacter("mu_chi needs a nontrivial character")
    if not chi.is_symbolic():
        raise ValueError("mu_chi needs a character of conductor prime to p")
    _check_coprime(chi.modulus, p)


@lru_cache(maxsize=None)
def _period_vec(chi: DirichletCharacter, r: int, u: int) -> tuple[Fraction, ...]:
    """Coefficients (in zeta^j, j < order) of (1/N) sum_{1<=a<N} chi(r + u a) a."""
    N, order = chi.modulus, chi.order
    vec = [Fraction(0)] * order
    for a in range(1, N):
        e = chi.exps[(r + u * a) % N]
        if e is not None:
            vec[e] += Fraction(a, N)
    return tuple(vec)


@lru_cache(maxsize=None)
def _char_partial_vec(chi: DirichletCharacter, k: int) -> tuple[int, ...]:
    """Coefficients of sum_{1<=a<k} chi(a)."""
    acc = [0] * chi.order
    for a in range(1, k):
        e = chi.exps[a % chi.modulus]
        if e is not None:
            acc[e] += 1
    return tuple(acc)


def _char_partial(chi: DirichletCharacter, k: int) -> list[int]:
    return list(_char_partial_vec(chi, k))


def period_vector(chi: DirichletCharacter, m: int, n: int, p: int) -> tuple[Fraction, ...]:
    """Unreduced coefficient vector of mu_chi(m + p^n Z_p); depends on m and p^n mod N only."""
    N = chi.modulus
    return _period_vec(chi, m % N, pow(p, n, N))


def period_chi(chi: DirichletCharacter, m: int, n: int, p: int, check: bool = True) -> CycloElement:
    """mu_chi(m + p^n Z_p) = (1/N) sum_{1<=a<N} chi(m + p^n a) a.

    When p^n = 1 mod N the value is also -L(0, chi) + sum_{1<=a<m mod N} chi(a),
    and with ``check`` the two are compared.
    """
    _require_chi(chi, p)
    _check_range(m, n, p)
    val = CycloElement.from_vector(chi.order, period_vector(chi, m, n, p))
    if check and pow(p, n, chi.modulus) == 1:
        alt = period_chi_special(chi, m)
        if not (val - alt).is_zero():
            raise AssertionError(f"period formulas disagree at m={m}, n={n}")
    return val


def period_chi_special(chi: DirichletCharacter, m: int) -> CycloElement:
    """-L(0, chi) + sum_{1<=a<m mod N} chi(a), the form valid when p^n = 1 mod N."""
    N = chi.modulus
    partial = CycloElement.from_vector(chi.order, [Fraction(c) for c in _char_partial(chi, m % N)])
    return partial - classical_L_value(1, chi)


# -- Mazur measure ----------------------------------------------------------------


def period_mazur(N: int, m: int, n: int, p: int, check: bool = True) -> Fraction:
    """mu_{1,N^-1}(m + p^n Z_p) = m/p^n - 1/2 - N((m/N) mod p^n / p^n - 1/2)."""
    if N < 2:
        raise BadModulus("N must be >= 2")
    _check_coprime(N, p)
    _check_range(m, n, p)
    pn = p ** n
    half = Fraction(1, 2)
    if n == 0:
        first = -half - N * (0 - half)
    else:
        first = Fraction(m, pn) - half - N * (Fraction(flat(Fraction(m, N), pn), pn) - half)
    if check:
        second = sharp(Fraction(m, pn), N) - Fraction(N + 1, 2)
        if first != second:
            raise AssertionError(f"Mazur period formulas disagree at m={m}, n={n}")
    return first


# -- 2-regularized periods ---------------------------------------------------------


def two_reg_order(N: int, p: int) -> int:
    """f' = order of p in (Z/2N)^x."""
    return mult_order(p, 2 * N)


def period_2reg(chi: DirichletCharacter, m: int, n: int, p: int) -> CycloElement:
    """L(0, chi) + sum_{1<=a<m} chi(a) - 2 sum_{1<=a<m/2} chi(a), at levels divisible by f'."""
    if p == 2:
        raise EvenPrime("the 2-regularized periods need p odd")
    _require_chi(chi, p)
    if n % two_reg_order(chi.modulus, p):
        raise BadLevel(f"level {n} is not a multiple of f' = {two_reg_order(chi.modulus, p)}")
    _check_range(m, n, p)
    order = chi.order
    vec = [Fraction(0)] * order
    for a in range(1, m):
        e = chi.exps[a % chi.modulus]
        if e is None:
            continue
        vec[e] += 1
        if 2 * a < m:
            vec[e] -= 2
    return classical_L_value(1, chi) + CycloElement.from_vector(order, vec)


# -- the power series L_chi -----------------------------------------------------------


def lchi_series(chi: DirichletCharacter, k: int) -> list[CycloElement]:
    """First k Taylor coefficients in T = t - 1 of sum_{a=1..N} chi(a) t^a / (t^N - 1)."""
    if chi.modulus == 1:
        raise TrivialCharacter("L_chi needs a nontrivial character")
    if k < 1:
        raise ValueError("k must be >= 1")
    N, order = chi.modulus, chi.order
    # numerator P(1+T) = sum_j c_j T^j with c_j = sum_a chi(a) C(a, j); c_0 = 0
    num = []
    for j in range(1, k + 1):
        vec = [Fraction(0)] * order
        for a in range(1, N + 1):
            e = chi.exps[a % N]
            if e is not None:
                vec[e] += comb(a, j)
        num.append(CycloElement.from_vector(order, vec))
    den = [Fraction(comb(N, j + 1)) for j in range(k)]  # (t^N - 1)/T
    out: list[CycloElement] = []
    for i in range(k):
        acc = num[i]
        for j in range(1, i + 1):
            acc = acc - out[i - j] * den[j]
        out.append(acc / den[0])
    return out


# -- tables -----------------------------------------------------------------------------


@dataclass(frozen=True)
class PeriodTable:
    """Periods P(m, n) for 0 <= m < p^n over a range of levels."""

    tag: str
    p: int
    entries: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.entries[key]

    def levels(self) -> list[int]:
        return sorted({n for _, n in self.entries})

    def to_rows(self) -> list[list[str]]:
        rows = []
        for (m, n), val in sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            coeffs = val.coeffs if isinstance(val, CycloElement) else (val,)
            rows.append([str(m), str(n)] + [str(c) for c in coeffs])
        return rows

    def to_csv(self) -> str:
        rows = self.to_rows()
        width = max((len(r) for r in rows), default=2) - 2
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "n"] + [f"c{i}" for i in range(width)])
        w.writerows(rows)
        return buf.getvalue()


def period_table(kind: str, p: int, levels, chi: DirichletCharacter | None = None, N: int | None = None) -> PeriodTable:
    entries = {}
    for n in levels:
        for m in range(p ** n):
            if kind == "chi":
                entries[(m, n)] = period_chi(chi, m, n, p)
            elif kind == "mazur":
                entries[(m, n)] = period_mazur(N, m, n, p)
            elif kind == "chi2reg":
                entries[(m, n)] = period_2reg(chi, m, n, p)
            else:
                raise ValueError(f"unknown measure {kind!r}")
    tag = kind if kind == "mazur" else f"{kind}:{chi.label()}"
    return PeriodTable(tag, p, entries)


# -- group rings and Stickelberger elements ---------------------------------------------


@dataclass(frozen=True)
class GroupRingElement:
    """sum_k coeffs[k] [g_k] over Gamma_n (g_k = gamma_0^k) or Z/p^(n+1) (g_k = k)."""

    p: int
    n: int
    coeffs: tuple
    group: str = "gamma"

    @property
    def size(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        self._same(other)
        return GroupRingElement(self.p, self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.group)

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        self._same(other)
        return GroupRingElement(self.p, self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.group)

    def __neg__(self):
        return GroupRingElement(self.p, self.n, tuple(-c for c in self.coeffs), self.group)

    def scale(self, c) -> GroupRingElement:
        return GroupRingElement(self.p, self.n, tuple(x * c for x in self.coeffs), self.group)

    def _same(self, other):
        if (self.p, self.n, self.group) != (other.p, other.n, other.group):
            raise ValueError("group ring elements over different groups")

    def is_integral(self) -> bool:
        for c in self.coeffs:
            for x in c.coeffs:
                if isinstance(x, PAdic):
                    if x.v < 0:
                        return False
                elif Fraction(x).denominator % self.p == 0:
                    return False
        return True


def gamma_size(p: int, n: int) -> int:
    return p ** n


def gamma_index(a: int, p: int, n: int) -> int:
    """k in [0, p^n) with gamma_0^k = <a>^{-1} in Gamma_n."""
    K = n + (2 if p == 2 else 1)
    mod = p ** K
    w = teichmuller_int(a % mod, p, K)
    proj_inv = w * pow(a, -1, mod) % mod  # <a>^{-1} = omega(a)/a
    return disc_log_int(proj_inv, p, n)


def _psi_level(psi: DirichletCharacter | None, p: int) -> int:
    """Exponent e of the p-power conductor."""
    if psi is None:
        return 0
    f = psi.conductor
    e = 0
    while f % p == 0:
        f //= p
        e += 1
    if f != 1:
        raise ValueError("psi must have p-power conductor")
    return e


def _zero_vec(order: int, ctx: PrimeContext | None):
    return [ctx.zero() if ctx else Fraction(0) for _ in range(order)]


def _guarded(theta: DirichletCharacter, extra: int) -> DirichletCharacter:
    from .characters import _normalize
    if theta.ctx is None:
        return theta
    big = theta.ctx.with_precision(theta.ctx.W + extra)
    return _normalize(theta.modulus, theta.order, theta.exps, theta.omega, big)


def _finish(vecs, order, ctx: PrimeContext | None, scale) -> tuple:
    """Turn accumulated integer/rational vectors into CycloElements times ``scale``."""
    out = []
    for vec in vecs:
        if ctx is None:
            out.append(CycloElement.from_vector(order, [Fraction(x) * scale for x in vec]))
        else:
            out.append(CycloElement.from_vector(order, [_down(x * scale, ctx) for x in vec]))
    return tuple(out)


def _down(x: PAdic, ctx: PrimeContext) -> PAdic:
    prec = min(x.prec, ctx.W + max(x.v, 0))
    if x.is_zero():
        return ctx.zero(min(x.prec, ctx.W))
    return PAdic(ctx, x.v, x.u, prec)


def stickelberger(kind: str, chi: DirichletCharacter, psi: DirichletCharacter | None, n: int,
                  p: int, c: int | None = None, ctx: PrimeContext | None = None) -> GroupRingElement:
    """xi_n, eta_{c,n} or theta_n.

    xi:    -(1/(N p^(n+1))) sum_{a < N p^(n+1), p not dividing a} chi psi(a) a [gamma(a)^-1]
    eta:   sum_{a < p^(n+1), p not dividing a} psi(ac) (ac - (ac mod p^(n+1)))/p^(n+1) [gamma(ac)^-1]
    theta: sum_{a < p^(n+1)} [a] sum over b = a mod p^(n+1) in Z/N p^(n+1) of (b/(N p^(n+1)) - 1/2) chi(b)
    """
    e = _psi_level(psi, p)
    if n < max(e - 1, 0):
        raise BadLevel(f"level {n} below e - 1 = {e - 1}")
    if psi is not None and psi.omega and ctx is None:
        ctx = psi.ctx
    P = p ** (n + 1)
    if kind == "theta":
        _require_chi(chi, p)
        N, order = chi.modulus, chi.order
        vecs = [[Fraction(0)] * order for _ in range(P)]
        NP = N * P
        for b in range(NP):
            j = chi.exps[b % N]
            if j is None:
                continue
            vecs[b % P][j] += Fraction(b, NP) - Fraction(1, 2)
        return GroupRingElement(p, n, _finish(vecs, order, None, 1), "additive")
    if kind == "xi":
        _require_chi(chi, p)
        theta = char_mul(chi, psi) if psi is not None else chi
        theta = _guarded(theta, n + 2)
        bctx = theta.ctx
        order = theta.order
        N = chi.modulus
        vecs = [_zero_vec(order, None) for _ in range(gamma_size(p, n))]
        mod = bctx.modulus if bctx else None
        for a in range(1, N * P):
            if a % p == 0:
                continue
            val = char_value(theta, a)
            if val is None:
                continue
            j, w = val
            k = gamma_index(a, p, n)
            term = a * w
            vecs[k][j] = (vecs[k][j] + term) % mod if mod else vecs[k][j] + term
        if bctx is None:
            return GroupRingElement(p, n, _finish(vecs, order, None, Fraction(-1, N * P)))
        pvecs = [[bctx(x) for x in v] for v in vecs]
        return GroupRingElement(p, n, _finish(pvecs, order, ctx, bctx(Fraction(-1, N * P))))
    if kind == "eta":
        if chi is not None and chi.modulus != 1:
            raise ValueError("eta needs the trivial character")
        if c is None or c % p == 0:
            raise NotAUnit(f"c = {c} is not prime to p")
        order = psi.order if psi is not None else 1
        bctx = psi.ctx if psi is not None else None
        vecs = [_zero_vec(order, None) for _ in range(gamma_size(p, n))]
        for a in range(1, P):
            if a % p == 0:
                continue
            ac = a * c
            if psi is None:
                j, w = 0, 1
            else:
                val = char_value(psi, ac)
                if val is None:
                    continue
                j, w = val
            k = gamma_index(ac, p, n)
            vecs[k][j] += w * ((ac - ac % P) // P)
        if bctx is None:
            return GroupRingElement(p, n, _finish(vecs, order, None, 1))
        pvecs = [[bctx(x) for x in v] for v in vecs]
        return GroupRingElement(p, n, _finish(pvecs, order, bctx, bctx.one()))
    raise ValueError(f"unknown Stickelberger kind {kind!r}")


def theta_to_gamma(theta_n: GroupRingElement, psi: DirichletCharacter | None = None) -> GroupRingElement:
    """Restrict theta_n to units, twist by psi and push to Gamma_n: sum psi(a) c_a [gamma(a)^-1]."""
    p, n = theta_n.p, theta_n.n
    if theta_n.group != "additive":
        raise ValueError("expected an element of Z/p^(n+1)")
    out = [None] * gamma_size(p, n)
    for a, c in enumerate(theta_n.coeffs):
        if a % p == 0:
            continue
        if psi is not None:
            from .characters import char_eval
            c = c * char_eval(psi, a)
        k = gamma_index(a, p, n)
        out[k] = c if out[k] is None else out[k] + c
    zero = theta_n.coeffs[0] - theta_n.coeffs[0]
    return GroupRingElement(p, n, tuple(zero if x is None else x for x in out))


def phi_s(x: GroupRingElement, s, ctx: PrimeContext) -> CycloElement:
    """Specialization gamma -> gamma^{-s}: sum_k coeffs[k] gamma_0^{-k s}."""
    if x.group != "gamma":
        raise ValueError("phi_s is defined on Gamma_n")
    s = s if isinstance(s, PAdic) else ctx(s)
    t, _ = exponent_residue(-s, ctx)
    g = gamma_generator(ctx.p)
    mod = ctx.modulus
    total = None
    for k, c in enumerate(x.coeffs):
        term = c.scale(ctx(pow(g, k * t, mod)))
        total = term if total is None else total + term
    return total


__all__ = [
    "BadRange", "BadLevel", "EvenPrime", "h_coeff", "period_chi", "period_chi_special", "period_vector",
    "period_mazur", "period_2reg", "two_reg_order", "lchi_series", "PeriodTable", "period_table",
    "GroupRingElement", "gamma_index", "stickelberger", "theta_to_gamma", "phi_s", "mult_order",
]
