"""Partial sums converging to p-adic L-values, with per-level congruence certificates.

Conventions.  Every sum runs over units 1 <= m < L (p not dividing m) and weights
m by psi(m) <m>^{-s}.  Writing theta = chi psi omega:

* ``riemann``  (chi nontrivial): sum psi(m)<m>^{-s} mu_chi(m + L Z_p) = -L_p(s, theta)  mod L
* ``riemann``  (zeta case):      sum psi(m)<m>^{-s} mu_{1,N^-1}(m + L Z_p)
                                 = -(1 - psi omega(N)<N>^{1-s}) L_p(s, psi omega)  mod L
* ``pruned_dirichlet``: weight sum_{1<=a<m mod N} chi(a); same limit as riemann
* ``pruned_zeta``:      weight m mod N in (0, N];           same limit as riemann
* ``residue_class``:    indicator of m = r mod N;  limit +L_p(s, theta) for the supported pattern
* ``pm1``:              weight (-1)^(m+1), N = 2; limit 2(1 - psi omega(2)<2>^{1-s}) L_p(s, psi omega)
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .bernoulli import bernoulli_number, classical_L_value
from .characters import DirichletCharacter, _normalize, char_eval, char_mul, omega_char, trivial_character
from .cyclo import CycloElement, congruent_mod, lcm
from .kernels import inverse_sum, split_class_power_sums, unit_exponent
from .measures import _char_partial, mult_order, period_vector
from .padic import (
    BadModulus,
    PAdic,
    PrecisionExhausted,
    PrimeContext,
    exponent_residue,
    log_iwasawa,
    pow_zp,
    sharp,
    valuation,
)

FORMS = ("riemann", "pruned_dirichlet", "pruned_zeta", "residue_class", "pm1")


class BadResiduePattern(ValueError):
    pass


class BadCongruence(ValueError):
    pass


class BadSumLevel(ValueError):
    pass


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("KLSUMS_WORKERS", "1")))
    except ValueError:
        return 1


# -- specification ------------------------------------------------------------------


@dataclass(frozen=True)
class SumSpec:
    ctx: PrimeContext
    N: int
    chi: DirichletCharacter | None = None
    psi: DirichletCharacter | None = None
    s: object = 0
    form: str = "riemann"
    residue: int | None = None

    def __post_init__(self):
        if self.N < 2 or gcd(self.N, self.ctx.p) != 1:
            raise BadModulus(f"N = {self.N} must be > 1 and prime to p = {self.ctx.p}")
        if self.form not in FORMS:
            raise ValueError(f"unknown form {self.form!r}")
        if self.chi is not None and self.chi.modulus != 1:
            if self.chi.modulus != self.N:
                raise BadModulus("chi must have conductor N")
            if not self.chi.is_symbolic():
                raise ValueError("chi must have conductor prime to p")
        if self.psi is not None:
            f = self.psi.modulus
            while f % self.ctx.p == 0:
                f //= self.ctx.p
            if f != 1:
                raise ValueError("psi must have p-power conductor")

    @property
    def f(self) -> int:
        return mult_order(self.ctx.p, self.N)

    @property
    def q(self) -> int:
        return self.ctx.p ** self.f

    @property
    def is_zeta(self) -> bool:
        return self.chi is None or self.chi.modulus == 1

    @property
    def psi_level(self) -> int:
        return _p_exponent(self.psi.modulus if self.psi else 1, self.ctx.p)

    def theta(self) -> DirichletCharacter:
        """chi psi omega."""
        out = omega_char(self.ctx)
        if self.psi is not None:
            out = char_mul(self.psi, out)
        if not self.is_zeta:
            out = char_mul(self.chi, out)
        return out


def _p_exponent(n: int, p: int) -> int:
    e = 0
    while n % p == 0 and n > 1:
        n //= p
        e += 1
    return e


# -- the weighted kernel --------------------------------------------------------------


def _psi_split(psi: DirichletCharacter | None):
    if psi is None:
        return trivial_character(), 0
    return _normalize(psi.modulus, psi.order, psi.exps), psi.omega


def _frac_mod(x: Fraction, p: int, mod: int) -> int:
    x = Fraction(x)
    if x.denominator % p == 0:
        raise BadModulus(f"{x} is not p-integral")
    return x.numerator * pow(x.denominator, -1, mod) % mod


def weighted_sum(ctx: PrimeContext, psi: DirichletCharacter | None, s, limit: int, M: int, weight,
                 workers: int | None = None) -> CycloElement:
    """sum over units m < limit of psi(m) <m>^{-s} weight(m mod M').

    ``weight(r)`` returns a scalar or an unreduced coefficient vector (tuple) over
    some zeta_k; M' = lcm(M, conductor of the symbolic part of psi).
    """
    p, W = ctx.p, ctx.W
    mod = ctx.modulus
    s_p = s if isinstance(s, PAdic) else ctx(s)
    t, prec = exponent_residue(-s_p, ctx)
    psym, j = _psi_split(psi)
    MM = lcm(M, psym.modulus)
    E, sign = unit_exponent(p, W, t, j)
    T = split_class_power_sums(p, W, limit, MM, E, sign, workers or default_workers())
    weights = {}
    order_w = 1
    for r in range(MM):
        if not T[r]:
            continue
        w = weight(r)
        if not isinstance(w, tuple):
            w = (w,)
        weights[r] = w
        order_w = lcm(order_w, len(w))
    L = lcm(psym.order, order_w)
    acc = [0] * L
    for r, w in weights.items():
        e = psym.exps[r % psym.modulus]
        if e is None:
            continue
        base = e * (L // psym.order)
        step = L // len(w)
        for i, c in enumerate(w):
            if c:
                idx = (base + i * step) % L
                acc[idx] = (acc[idx] + T[r] * _frac_mod(c, p, mod)) % mod
    prec = min(prec, W)
    return CycloElement.from_vector(L, [PAdic(ctx, 0, x, prec) for x in acc])


# -- the individual forms --------------------------------------------------------------


def _mazur_weight(N: int, level: int):
    def w(r):
        return sharp(Fraction(r, level), N) - Fraction(N + 1, 2)
    return w


def riemann_sum_at(ctx: PrimeContext, chi: DirichletCharacter | None, psi, s, e: int, N: int | None = None,
                   workers: int | None = None) -> CycloElement:
    """Riemann sum over the cosets of p^e Z_p; for chi trivial, N is the Mazur auxiliary modulus."""
    p = ctx.p
    L = p ** e
    if chi is not None and chi.modulus > 1:
        N = chi.modulus
        return weighted_sum(ctx, psi, s, L, N, lambda r: period_vector(chi, r, e, p), workers)
    if N is None:
        raise ValueError("the zeta case needs N")
    return weighted_sum(ctx, psi, s, L, N, _mazur_weight(N, L), workers)


def _check_level(n: int):
    if n < 1:
        raise BadSumLevel(f"level {n} < 1")


def riemann_sum_lp(spec: SumSpec, n: int, workers: int | None = None) -> CycloElement:
    _check_level(n)
    chi = None if spec.is_zeta else spec.chi
    return riemann_sum_at(spec.ctx, chi, spec.psi, spec.s, spec.f * n, spec.N, workers)


def lp_sum_zeta(spec: SumSpec, n: int, workers: int | None = None) -> CycloElement:
    """sum psi(m)<m>^{-s} (m mod N in (0, N]) over units m < q^n."""
    _check_level(n)
    N = spec.N
    return weighted_sum(spec.ctx, spec.psi, spec.s, spec.q ** n, N, lambda r: r if r else N, workers)


def lp_sum_dirichlet(spec: SumSpec, n: int, workers: int | None = None, kind: str = "flat") -> CycloElement:
    """sum psi(m)<m>^{-s} sum_{1<=a<m mod N} chi(a) over units m < q^n (kind 'sharp' uses (0, N])."""
    _check_level(n)
    if spec.is_zeta:
        from .characters import TrivialCharacter
        raise TrivialCharacter("the Dirichlet form needs a nontrivial chi")
    chi, N = spec.chi, spec.N

    def w(r):
        k = r if (kind == "flat" or r) else N
        return tuple(Fraction(c) for c in _char_partial(chi, k))

    return weighted_sum(spec.ctx, spec.psi, spec.s, spec.q ** n, N, w, workers)


def unit_sum(ctx: PrimeContext, psi, s, limit: int, workers: int | None = None) -> CycloElement:
    """sum psi(m)<m>^{-s} over units m < limit (tends to 0 along p-power limits)."""
    return weighted_sum(ctx, psi, s, limit, 1, lambda r: 1, workers)


def residue_class_sum_raw(ctx: PrimeContext, psi, s, limit: int, N: int, r: int,
                          workers: int | None = None) -> CycloElement:
    return weighted_sum(ctx, psi, s, limit, N, lambda x: 1 if x % N == r % N else 0, workers)


def check_residue_pattern(spec: SumSpec, level_exp: int):
    """The supported pattern: quadratic chi mod 3, p = 2 mod 3, odd level exponent, residue 1."""
    p = spec.ctx.p
    ok = (
        spec.N == 3
        and not spec.is_zeta
        and spec.chi.order == 2
        and p % 3 == 2
        and level_exp % 2 == 1
        and (spec.residue or 1) % 3 == 1
    )
    if not ok:
        raise BadResiduePattern("only quadratic chi mod 3 with p = 2 mod 3, odd level exponent and residue 1 is supported")


def residue_class_sum(spec: SumSpec, level_exp: int, workers: int | None = None) -> CycloElement:
    """sum psi(m)<m>^{-s} over units m < p^level_exp with m = 1 mod 3; tends to +L_p(s, theta)."""
    check_residue_pattern(spec, level_exp)
    return residue_class_sum_raw(spec.ctx, spec.psi, spec.s, spec.ctx.p ** level_exp, 3, 1, workers)


def pm1_sum(ctx: PrimeContext, psi, s, n: int, workers: int | None = None) -> CycloElement:
    """sum psi(m)<m>^{-s} (-1)^(m+1) over units m < p^n (p odd)."""
    if ctx.p == 2:
        raise BadModulus("the alternating form needs p odd")
    return weighted_sum(ctx, psi, s, ctx.p ** n, 2, lambda r: 1 if r % 2 else -1, workers)


# -- references -------------------------------------------------------------------------


def interpolation_reference(theta: DirichletCharacter, r: int, ctx: PrimeContext | None = None) -> CycloElement:
    """L_p(1-r, theta) = (1 - theta omega^{-r}(p) p^{r-1}) L(1-r, theta omega^{-r}); 0 for odd theta."""
    if r < 1:
        raise ValueError("r must be >= 1")
    ctx = ctx or theta.ctx
    if ctx is None:
        raise ValueError("need a PrimeContext")
    p = ctx.p
    if not theta.is_even():
        return CycloElement.scalar(0, 1, ctx)
    twisted = char_mul(theta, omega_char(ctx, -r))
    lval = classical_L_value(r, twisted)
    euler = CycloElement.scalar(1, 1) - char_eval(twisted, p) * (p ** (r - 1))
    out = euler * lval
    return out if not out.is_exact() else out.to_padic(ctx)


def _factor(ctx: PrimeContext, psi, s, c: int) -> CycloElement:
    """1 - psi omega(c) <c>^{1-s}."""
    po = char_mul(psi, omega_char(ctx)) if psi is not None else omega_char(ctx)
    s_p = s if isinstance(s, PAdic) else ctx(s)
    return CycloElement.scalar(1, 1, ctx) - char_eval(po, c).scale(pow_zp(ctx(c), 1 - s_p))


def _integer_s(s, ctx) -> int | None:
    if isinstance(s, PAdic):
        return None
    if isinstance(s, (int,)) or (isinstance(s, Fraction) and s.denominator == 1):
        return int(s)
    return None


def sum_reference(spec: SumSpec) -> CycloElement | None:
    """Limit of the partial sums of ``spec`` from the interpolation formula, when s = 1 - r with r >= 1."""
    si = _integer_s(spec.s, spec.ctx)
    if si is None or si > 0:
        return None
    r = 1 - si
    ctx = spec.ctx
    if spec.form == "pm1":
        po = char_mul(spec.psi, omega_char(ctx)) if spec.psi else omega_char(ctx)
        return _factor(ctx, spec.psi, spec.s, 2) * interpolation_reference(po, r, ctx) * 2
    if spec.is_zeta:
        po = char_mul(spec.psi, omega_char(ctx)) if spec.psi else omega_char(ctx)
        return -(_factor(ctx, spec.psi, spec.s, spec.N) * interpolation_reference(po, r, ctx))
    lp = interpolation_reference(spec.theta(), r, ctx)
    return lp if spec.form == "residue_class" else -lp


def partial_sum(spec: SumSpec, n: int, workers: int | None = None) -> CycloElement:
    """Level-n partial sum of ``spec.form`` (level q^n; p^n for pm1, p^(2n+1) for residue_class)."""
    if spec.form == "riemann":
        return riemann_sum_lp(spec, n, workers)
    if spec.form == "pruned_dirichlet":
        return lp_sum_dirichlet(spec, n, workers)
    if spec.form == "pruned_zeta":
        return lp_sum_zeta(spec, n, workers)
    if spec.form == "pm1":
        return pm1_sum(spec.ctx, spec.psi, spec.s, n, workers)
    if spec.form == "residue_class":
        return residue_class_sum(spec, 2 * n + 1, workers)
    raise ValueError(spec.form)


def guaranteed_valuation(spec: SumSpec, n: int) -> int:
    """Valuation of (partial - limit) guaranteed at level n for each form."""
    if spec.form == "riemann":
        return spec.f * n
    if spec.form in ("pruned_dirichlet", "pruned_zeta"):
        return spec.f * n - 1
    if spec.form == "pm1":
        return n - 1
    return 2 * n  # residue_class at level p^(2n+1)


# -- reports ------------------------------------------------------------------------------


def cyclo_to_json(x: CycloElement | None):
    if x is None:
        return None
    return {
        "m": x.m,
        "coeffs": [str(c.residue()) if isinstance(c, PAdic) and c.v >= 0 else str(c) for c in x.coeffs],
        "precision": x.precision(),
    }


def gap_valuation(a: CycloElement, b: CycloElement) -> int:
    d = a - b
    v = d.valuation(d.ctx.p if d.ctx else None)
    prec = d.precision()
    return min(v, prec) if prec is not None else v


@dataclass
class SumReport:
    form: str
    p: int
    W: int
    levels: list = field(default_factory=list)
    reference: CycloElement | None = None
    guaranteed: list = field(default_factory=list)

    def ok(self) -> bool:
        if self.reference is None:
            return True
        return all(l["valuation_gap"] >= g for l, g in zip(self.levels, self.guaranteed))

    def to_dict(self, timing: bool = True) -> dict:
        levels = []
        for l in self.levels:
            d = {"n": l["n"], "level": l["level"], "partial": cyclo_to_json(l["partial"]),
                 "valuation_gap": l["valuation_gap"], "guaranteed": l["guaranteed"]}
            if timing:
                d["ms"] = l["ms"]
            levels.append(d)
        return {"form": self.form, "p": self.p, "W": self.W, "levels": levels,
                "reference": cyclo_to_json(self.reference), "ok": self.ok()}

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        rows = ["n,level,partial,valuation_gap,guaranteed,ms"]
        for l in self.levels:
            part = " ".join(cyclo_to_json(l["partial"])["coeffs"])
            rows.append(f"{l['n']},{l['level']},{part},{l['valuation_gap']},{l['guaranteed']},{l['ms']}")
        return "\n".join(rows) + "\n"


def run_sum(spec: SumSpec, levels, workers: int | None = None) -> SumReport:
    ref = sum_reference(spec)
    report = SumReport(spec.form, spec.ctx.p, spec.ctx.W, reference=ref)
    for n in levels:
        t0 = time.perf_counter()
        part = partial_sum(spec, n, workers)
        ms = round((time.perf_counter() - t0) * 1000, 3)
        if spec.form == "pm1":
            level = spec.ctx.p ** n
        elif spec.form == "residue_class":
            level = spec.ctx.p ** (2 * n + 1)
        else:
            level = spec.q ** n
        gap = gap_valuation(part, ref) if ref is not None else None
        g = min(guaranteed_valuation(spec, n), spec.ctx.W - 1)
        report.levels.append({"n": n, "level": level, "partial": part, "valuation_gap": gap, "guaranteed": g, "ms": ms})
        report.guaranteed.append(g)
    return report


def pruning_identity_holds(spec: SumSpec, n: int) -> bool:
    """pruned - riemann = L(0, chi) * sum psi(m)<m>^{-s}, exactly at the working precision."""
    lhs = lp_sum_dirichlet(spec, n) - riemann_sum_lp(spec, n)
    rhs = unit_sum(spec.ctx, spec.psi, spec.s, spec.q ** n) * classical_L_value(1, spec.chi)
    return (lhs - rhs).is_zero()


# -- evaluation wrapper ----------------------------------------------------------------------


@dataclass(frozen=True)
class LpValue:
    value: CycloElement
    precision: int
    level: int
    N: int

    def to_dict(self) -> dict:
        return {"value": cyclo_to_json(self.value), "precision": self.precision, "level": self.level, "N": self.N}


def _aux_modulus(ctx: PrimeContext, psi, s) -> tuple[int, CycloElement, int]:
    best = None
    for c in (2, 3, 5, 7, 11, 13):
        if c % ctx.p == 0:
            continue
        fac = _factor(ctx, psi, s, c)
        v = fac.valuation()
        if best is None or v < best[2]:
            best = (c, fac, v)
        if v == 0:
            break
    return best


def lp_value(chi: DirichletCharacter | None, psi: DirichletCharacter | None, s, ctx: PrimeContext,
             target_precision: int, workers: int | None = None) -> LpValue:
    """L_p(s, chi psi omega) from a Riemann sum at the smallest level certifying ``target_precision``."""
    if target_precision > ctx.W - 1:
        raise PrecisionExhausted(f"target p^{target_precision} exceeds W - 1 = {ctx.W - 1}")
    zeta = chi is None or chi.modulus == 1
    theta = omega_char(ctx)
    if psi is not None:
        theta = char_mul(psi, theta)
    if not zeta:
        theta = char_mul(chi, theta)
    e = _p_exponent(psi.modulus if psi else 1, ctx.p)
    if not theta.is_even():
        return LpValue(CycloElement.scalar(0, 1, ctx), ctx.W, 1, chi.modulus if not zeta else 1)
    if zeta:
        N, fac, v = _aux_modulus(ctx, psi, s)
        if fac.is_zero():
            raise PrecisionExhausted("pole of the p-adic zeta function")
    else:
        N, v = chi.modulus, 0
    f = mult_order(ctx.p, N)
    need = max(target_precision + v, e)
    n = max(1, -(-need // f))
    if f * n > ctx.W + v:
        raise PrecisionExhausted("level exceeds the working precision")
    S = riemann_sum_at(ctx, None if zeta else chi, psi, s, f * n, N, workers)
    if zeta:
        val = _divide(-S, fac)
    else:
        val = -S
    prec = min(f * n - v, ctx.W - v)
    return LpValue(val, prec, ctx.p ** (f * n), N)


def _divide(x: CycloElement, fac: CycloElement) -> CycloElement:
    """x / fac for fac a scalar (Phi_1 or Phi_2) element."""
    c = fac.coeffs[0]
    if fac.m > 2 or any(not cc.is_zero() for cc in fac.coeffs[1:]):
        raise ValueError("expected a scalar factor")
    return x / c


def lp_difference_quotient(chi: DirichletCharacter, psi, s, ctx: PrimeContext, n: int,
                           workers: int | None = None) -> LpValue:
    """(L_p(s, theta) - L_p(0, theta)) / s from Riemann sums at level q^n, certified mod q^n."""
    s_p = s if isinstance(s, PAdic) else ctx(s)
    if s_p.is_zero():
        raise ValueError("s must be nonzero")
    v = s_p.v
    big = ctx.with_precision(ctx.W + v + 1)
    s_big = PAdic(big, s_p.v, s_p.u, s_p.prec)
    f = mult_order(ctx.p, chi.modulus)
    e = f * n
    S1 = riemann_sum_at(big, chi, psi, s_big, e, workers=workers)
    S0 = riemann_sum_at(big, chi, psi, 0, e, workers=workers)
    q = -(S1 - S0) / s_big
    out = CycloElement(q.m, [_shrink(c, ctx) for c in q.coeffs])
    return LpValue(out, min(e, ctx.W), ctx.p ** e, chi.modulus)


def _shrink(c: PAdic, ctx: PrimeContext) -> PAdic:
    if c.is_zero():
        return ctx.zero(min(c.prec, ctx.W))
    return PAdic(ctx, c.v, c.u, min(c.prec, ctx.W + c.v))


# -- logarithmic sums ---------------------------------------------------------------------------


def leopoldt_reference(ctx: PrimeContext, N: int) -> PAdic:
    """-(1 - 1/p) log_p N."""
    p = ctx.p
    return -(ctx(Fraction(p - 1, p)) * log_iwasawa(ctx(N)))


def leopoldt_log_sum(ctx: PrimeContext, N: int, n: int) -> PAdic:
    """sum over units m < q^n of (m mod N in (0, N]) / m."""
    if gcd(N, ctx.p) != 1:
        raise BadModulus("N must be prime to p")
    if n == 0:
        return ctx.zero()
    f = mult_order(ctx.p, N)
    weights = [r if r else N for r in range(N)]
    return PAdic(ctx, 0, inverse_sum(ctx.p, ctx.W, ctx.p ** (f * n), weights, N), ctx.W)


def half_range_reference(ctx: PrimeContext) -> PAdic:
    """-2 (1 - 1/p) log_p 2."""
    return leopoldt_reference(ctx, 2) * 2


def half_range_sum(ctx: PrimeContext, n: int) -> PAdic:
    """sum over units m < p^n / 2 of 1/m (p odd)."""
    if ctx.p == 2:
        raise BadModulus("p must be odd")
    if n == 0:
        return ctx.zero()
    limit = (ctx.p ** n + 1) // 2  # m < p^n/2 with p^n odd
    return PAdic(ctx, 0, inverse_sum(ctx.p, ctx.W, limit), ctx.W)


@dataclass(frozen=True)
class DRow:
    n: int
    d: int | None
    bound: int
    capped: bool

    def to_dict(self):
        return {"n": self.n, "d": self.d, "bound": self.bound, "capped": self.capped}


def d_value(ctx: PrimeContext, n: int) -> tuple[int | None, bool]:
    """Largest d with the half-range sum congruent to its limit mod p^d; None for n = 0."""
    if n == 0:
        return None, False
    diff = half_range_sum(ctx, n) - half_range_reference(ctx)
    if diff.is_zero():
        return diff.prec, True
    return diff.v, False


def d_experiment(p: int, n_max: int, W: int | None = None) -> list[DRow]:
    if p == 2:
        raise BadModulus("p must be odd")
    W = W or 2 * n_max + 6
    if 2 * n_max + 2 > W:
        raise PrecisionExhausted(f"W = {W} too small for n_max = {n_max}")
    ctx = PrimeContext(p, W)
    rows = []
    for n in range(1, n_max + 1):
        d, capped = d_value(ctx, n)
        rows.append(DRow(n, d, 2 * n - 1, capped))
    return rows


# -- the elementary closed form ---------------------------------------------------------------------


def elementary_Lk(p: int, N: int, r: int, n: int, k: int | None = None) -> tuple[int, Fraction]:
    """(sum over units m < q^n of m^(r-1) (m mod N in (0, N]),  (1 - N^r)(1 - p^(r-1)) B_r / r).

    k is the even Teichmueller exponent with r = k mod p - 1 (defaults to r).
    """
    if p == 2:
        raise BadModulus("p must be odd")
    if gcd(N, p) != 1 or N < 2:
        raise BadModulus("N must be > 1 and prime to p")
    k = r if k is None else k
    if k % 2:
        raise BadCongruence("k must be even")
    if r < 1 or (r - k) % (p - 1):
        raise BadCongruence(f"r = {r} is not congruent to k = {k} mod p - 1")
    f = mult_order(p, N)
    L = p ** (f * n)
    partial = 0
    for m in range(1, L):
        if m % p:
            partial += m ** (r - 1) * (m % N or N)
    closed = (1 - Fraction(N) ** r) * (1 - Fraction(p) ** (r - 1)) * bernoulli_number(r) / r
    return partial, closed


def fraction_valuation(x: Fraction, p: int) -> float:
    return float("inf") if x == 0 else valuation(x, p)


__all__ = [
    "SumSpec", "SumReport", "LpValue", "FORMS", "BadResiduePattern", "BadCongruence", "BadSumLevel",
    "weighted_sum", "riemann_sum_at", "riemann_sum_lp", "lp_sum_zeta", "lp_sum_dirichlet", "unit_sum",
    "residue_class_sum", "residue_class_sum_raw", "pm1_sum", "interpolation_reference", "sum_reference",
    "partial_sum", "run_sum", "pruning_identity_holds", "lp_value", "lp_difference_quotient",
    "leopoldt_log_sum", "leopoldt_reference", "half_range_sum", "half_range_reference", "d_value",
    "d_experiment", "elementary_Lk", "congruent_mod", "gap_valuation", "fraction_valuation",
]
