"""Ferrero-Greenberg permutation, the difference-equation solver Lambda_f, and derivatives at s = 0."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, gcd

from .bernoulli import classical_L_value, lambda_k_closed
from .characters import DirichletCharacter, char_value
from .cyclo import CycloElement
from .kernels import running_product
from .measures import mult_order
from .padic import (
    BadModulus,
    NonIntegral,
    PAdic,
    PrecisionExhausted,
    PrimeContext,
    flat,
    log_iwasawa,
    log_one_unit_int,
    sharp,
    teichmuller_int,
    verschiebung,
    verschiebung_rational,
)


class NotInDomain(ValueError):
    pass


class EvenCharacter(ValueError):
    pass


# -- the permutation ------------------------------------------------------------------


@dataclass(frozen=True)
class FGContext:
    p: int
    N: int
    n: int = 1

    def __post_init__(self):
        if self.N < 2 or gcd(self.N, self.p) != 1:
            raise BadModulus(f"N = {self.N} must be > 1 and prime to p = {self.p}")
        if self.n < 1:
            raise ValueError("level must be >= 1")

    @property
    def f(self) -> int:
        return mult_order(self.p, self.N)

    @property
    def level(self) -> int:
        """q^n."""
        return self.p ** (self.f * self.n)

    def M(self) -> list[int]:
        return [m for m in range(1, self.level) if m % self.p]


def fg_iota(fg: FGContext, m: int) -> int:
    """For m = m# + hN (m# in (0, N]): h + 1 + (N - m#)(q^n - 1)/N."""
    Q = fg.level
    if not (1 <= m < Q) or m % fg.p == 0:
        raise NotInDomain(f"{m} is not in M_n")
    ms = sharp(m, fg.N)
    h = (m - ms) // fg.N
    return h + 1 + (fg.N - ms) * ((Q - 1) // fg.N)


def fg_filtration(fg: FGContext, a: int, kind: str) -> set[int]:
    """Phi_a = {m# > a} or Psi_a = {m < (N - a) q^n / N}, both inside M_n."""
    if not 0 <= a <= fg.N:
        from .measures import BadRange
        raise BadRange(f"a = {a} outside [0, N]")
    if kind.lower() == "phi":
        return {m for m in fg.M() if sharp(m, fg.N) > a}
    if kind.lower() == "psi":
        return {m for m in fg.M() if m * fg.N < (fg.N - a) * fg.level}
    raise ValueError(f"unknown filtration {kind!r}")


def fg_table(fg: FGContext) -> tuple[list[list[int | None]], list[list[int | None]]]:
    """Rows r = 1..N, columns h: the entry r + hN of M_n (None if divisible by p) and its image."""
    cols = (fg.level - 1) // fg.N
    before, after = [], []
    for r in range(1, fg.N + 1):
        row_b, row_a = [], []
        for h in range(cols):
            m = r + h * fg.N
            if m % fg.p == 0 or m >= fg.level:
                row_b.append(None)
                row_a.append(None)
            else:
                row_b.append(m)
                row_a.append(fg_iota(fg, m))
        before.append(row_b)
        after.append(row_a)
    return before, after


def render_table(rows: list[list[int | None]]) -> str:
    width = max((len(str(x)) for row in rows for x in row if x is not None), default=1)
    return "\n".join(" ".join((str(x) if x is not None else "").rjust(width) for x in row) for row in rows)


# -- Lambda_f -------------------------------------------------------------------------


def _log_unit_int(d: int, p: int, K: int) -> int:
    """Iwasawa log of the integer unit d, mod p^K."""
    mod = p ** K
    if p == 2:
        x = d if d % 4 == 1 else -d
        return log_one_unit_int(x % (mod * 4), 2, K)
    kk = K + 1
    x = pow(d, p - 1, p ** kk)
    return log_one_unit_int(x, p, K) * pow(p - 1, -1, mod) % mod


@dataclass
class LambdaFunctional:
    """Lambda_f for f on units given by ``term(d, K) -> {zeta exponent: integer mod p^K}``.

    ``kind`` is 'sum' (generic) or 'log' (f = log_p, evaluated through a product).
    """

    ctx: PrimeContext
    order: int
    term: object = None
    kind: str = "sum"
    label: str = "f"
    power_k: int | None = None
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)
    _cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def constant(cls, ctx: PrimeContext) -> LambdaFunctional:
        return cls(ctx, 1, lambda d, K: {0: 1}, "sum", "1", power_k=0)

    @classmethod
    def power(cls, ctx: PrimeContext, k: int) -> LambdaFunctional:
        return cls(ctx, 1, lambda d, K: {0: pow(d, k, ctx.p ** K)}, "sum", f"x^{k}", power_k=k)

    @classmethod
    def log(cls, ctx: PrimeContext) -> LambdaFunctional:
        return cls(ctx, 1, None, "log", "log")

    @classmethod
    def psi_log_power(cls, ctx: PrimeContext, psi: DirichletCharacter | None, i: int) -> LambdaFunctional:
        if psi is None and i == 1:
            return cls.log(ctx)
        order = psi.order if psi is not None else 1
        p = ctx.p

        def term(d, K):
            mod = p ** K
            if psi is None:
                j, w = 0, 1
            else:
                val = char_value(psi, d)
                if val is None:
                    return {}
                j, w0 = val
                w = 1
                if psi.omega:
                    w = pow(teichmuller_int(d % p ** K, p, K), psi.omega, mod)
            lg = _log_unit_int(d, p, K) if i else 1
            return {j: w * pow(lg, i, mod) % mod}

        return cls(ctx, order, term, "sum", f"psi*log^{i}")

    # integer evaluation --------------------------------------------------------------
    def at_int(self, n: int, K: int) -> list[int]:
        """sum_{0 <= d < n, p not dividing d} f(d) as a coefficient vector mod p^K."""
        p = self.ctx.p
        mod = p ** K
        if n < 0:
            raise NonIntegral("negative integer probe")
        if self.kind == "log":
            prod = running_product(p, K + 2, n)
            return [_log_unit_int(prod, p, K) if n > 1 else 0]
        if self.power_k is not None:
            return [int(lambda_k_closed(self.power_k, n, p)) % mod]
        key = (n, K)
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        acc = [0] * self.order
        for d in range(1, n):
            if d % p == 0:
                continue
            for j, w in self.term(d, K).items():
                acc[j] = (acc[j] + w) % mod
        with self._lock:
            self._cache[key] = acc
        return acc


@dataclass(frozen=True)
class LambdaResult:
    value: CycloElement
    precision: int
    probe_level: int


def _as_digits_source(x, p: int):
    """Return a function j -> x mod p^j (non-negative integer)."""
    if isinstance(x, PAdic):
        if x.v < 0:
            raise NonIntegral(f"{x} is not integral")
        return lambda j: x.residue(j)
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NonIntegral(f"{x} is not p-integral")
    return lambda j: flat(x, p ** j)


def lambda_solve(L: LambdaFunctional, x, precision: int, max_level: int | None = None) -> LambdaResult:
    """Lambda_f(x) mod p^precision.

    Non-negative integers are summed directly.  Otherwise x is probed by the integers
    x mod p^j: for f = log the value mod p^j depends only on that residue; in general
    j increases until three successive probes agree mod p^precision.
    """
    ctx = L.ctx
    p = ctx.p
    K = precision
    order = L.order

    def wrap(vec, prec, j):
        ctx2 = ctx.with_precision(max(prec, 3)) if prec > ctx.W else ctx
        el = CycloElement.from_vector(order, [PAdic(ctx2, 0, c, prec) for c in vec])
        return LambdaResult(el, prec, j)

    if isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1 and x >= 0):
        n = int(x)
        if n >= 0:
            return wrap(L.at_int(n, K), K, 0)
    digits = _as_digits_source(x, p)
    if L.kind == "log":
        j = K if p != 2 else K + 1
        return wrap(L.at_int(digits(j), K), K, j)
    max_level = max_level or (precision + 8)
    history = []
    last_n = None
    for j in range(1, max_level + 1):
        n = digits(j)
        if n == last_n:
            continue
        last_n = n
        history.append((j, L.at_int(n, K)))
        if len(history) >= 3 and history[-1][1] == history[-2][1] == history[-3][1]:
            return wrap(history[-1][1], K, history[-3][0])
        if L.power_k is None and p ** j > 5_000_000:
            break
    raise PrecisionExhausted(f"Lambda_{L.label} did not stabilize mod p^{precision}")


def lambda_1_closed(x, p: int):
    """x - 1 - V(x - 1)."""
    if isinstance(x, PAdic):
        return x - 1 - verschiebung(x - 1)
    x = Fraction(x)
    return x - 1 - verschiebung_rational(x - 1, p)


def log_gamma_p(x, ctx: PrimeContext, precision: int | None = None) -> PAdic:
    """log_p Gamma_p(x) = Lambda_log(x)."""
    precision = precision or ctx.W - 1
    res = lambda_solve(LambdaFunctional.log(ctx), x, precision)
    return res.value.coeffs[0]


def morita_gamma_log(x, ctx: PrimeContext, precision: int | None = None) -> PAdic:
    """log_p Gamma_p(x + 1); for integers n >= 1 this is sum_{1<=m<=n, p not dividing m} log_p m."""
    if isinstance(x, PAdic):
        return log_gamma_p(x + 1, ctx, precision)
    return log_gamma_p(Fraction(x) + 1, ctx, precision)


# -- derivative formulas --------------------------------------------------------------------


def lemma_verschiebung(chi: DirichletCharacter, p: int) -> tuple[CycloElement, CycloElement]:
    """(sum chi(a) V(a/N - 1),  chi(p) sum chi(a) a/N), exact; equal for odd chi."""
    N, order = chi.modulus, chi.order
    lhs = [Fraction(0)] * order
    rhs = [Fraction(0)] * order
    jp = chi.exps[p % N]
    for a in range(1, N):
        e = chi.exps[a]
        if e is None:
            continue
        lhs[e] += verschiebung_rational(Fraction(a, N) - 1, p)
        if jp is not None:
            rhs[(e + jp) % order] += Fraction(a, N)
    return CycloElement.from_vector(order, lhs), CycloElement.from_vector(order, rhs)


def _check_odd(chi: DirichletCharacter, p: int):
    if chi.modulus == 1:
        raise ValueError("chi must be nontrivial")
    if gcd(chi.modulus, p) != 1 or not chi.is_symbolic():
        raise BadModulus("chi must have conductor prime to p")
    if chi.is_even():
        raise EvenCharacter("chi must be odd")


def _log_gammas(chi: DirichletCharacter, ctx: PrimeContext, precision: int) -> dict[int, PAdic]:
    return {a: log_gamma_p(Fraction(a, chi.modulus), ctx, precision)
            for a in range(1, chi.modulus) if chi.exps[a] is not None}


def lp_derivative(chi: DirichletCharacter, ctx: PrimeContext, precision: int | None = None,
                  check: bool = True) -> CycloElement:
    """L_p'(0, chi omega) = sum chi(a) log_p Gamma_p(a/N) - (1 - chi(p)) L(0, chi) log_p N.

    With ``check`` the unsimplified form
    sum chi(a) [log_p N (a/N - 1 - V(a/N - 1)) + log_p Gamma_p(a/N)] is computed too
    and compared.
    """
    _check_odd(chi, ctx.p)
    p, N, order = ctx.p, chi.modulus, chi.order
    precision = precision or ctx.W - 2
    lg = _log_gammas(chi, ctx, precision)
    logN = log_iwasawa(ctx(N))
    gsum = CycloElement.from_vector(order, [ctx.zero()] * order)
    for a, val in lg.items():
        gsum = gsum + CycloElement.monomial(order, chi.exps[a], val, ctx)
    chip = CycloElement.monomial(order, chi.exps[p % N], 1) if chi.exps[p % N] is not None else CycloElement.scalar(0, order)
    euler = (CycloElement.scalar(1, order) - chip) * classical_L_value(1, chi)
    value = gsum - euler.to_padic(ctx).scale(logN)
    if check:
        lhs, rhs = lemma_verschiebung(chi, p)
        if not (lhs - rhs).is_zero():
            raise AssertionError("Verschiebung lemma failed")
        bracket = [Fraction(0)] * order
        for a in lg:
            x = Fraction(a, N)
            bracket[chi.exps[a]] += x - 1 - verschiebung_rational(x - 1, p)
        pre = gsum + CycloElement.from_vector(order, bracket).to_padic(ctx).scale(logN)
        if not (pre - value).is_zero():
            raise AssertionError("simplified and unsimplified derivative formulas disagree")
    return value


def taylor_coeff(chi: DirichletCharacter, psi: DirichletCharacter | None, k: int, ctx: PrimeContext,
                 precision: int | None = None) -> CycloElement:
    """c_k in -L_p(-s, chi psi omega) = sum_k c_k s^k:

    c_k = psi(N)/k! sum_{1<=a<N} chi(a) sum_{i<=k} C(k,i) (log_p N)^(k-i) Lambda_{psi log^i}(a/N).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    p, N = ctx.p, chi.modulus
    if gcd(N, p) != 1 or chi.modulus == 1:
        raise BadModulus("chi must be nontrivial with conductor prime to p")
    precision = precision or ctx.W - 2
    logN = log_iwasawa(ctx(N))
    total = None
    lam = {}
    for i in range(k + 1):
        lam[i] = LambdaFunctional.psi_log_power(ctx, psi, i)
    for a in range(1, N):
        if chi.exps[a] is None:
            continue
        x = Fraction(a, N)
        inner = None
        for i in range(k + 1):
            if psi is None and i == 0:
                val = CycloElement.scalar(lambda_1_closed(x, p), 1, ctx)
            else:
                val = lambda_solve(lam[i], x, precision).value
            term = val.scale(logN ** (k - i) * comb(k, i)) if k - i else val.scale(ctx(comb(k, i)))
            inner = term if inner is None else inner + term
        term = CycloElement.monomial(chi.order, chi.exps[a], 1, ctx) * inner
        total = term if total is None else total + term
    if psi is not None:
        total = total * char_eval_psi(psi, N, ctx)
    return total / factorial(k)


def char_eval_psi(psi: DirichletCharacter, a: int, ctx: PrimeContext) -> CycloElement:
    from .characters import char_eval
    return char_eval(psi, a).to_padic(ctx) if char_eval(psi, a).is_exact() else char_eval(psi, a)


__all__ = [
    "FGContext", "fg_iota", "fg_filtration", "fg_table", "render_table", "NotInDomain", "EvenCharacter",
    "LambdaFunctional", "LambdaResult", "lambda_solve", "lambda_1_closed", "log_gamma_p", "morita_gamma_log",
    "lemma_verschiebung", "lp_derivative", "taylor_coeff",
]
