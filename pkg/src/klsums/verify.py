"""Invariant suites shared by the CLI ``verify`` command and the experiment scripts."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .bernoulli import (
    bernoulli_number,
    bernoulli_poly,
    generalized_bernoulli,
    lambda_k_brute,
    lambda_k_closed,
    power_sum,
)
from .characters import char_eval, char_mul, omega_char, primitive_characters, quadratic_character, trivial_character
from .cyclo import CycloElement
from .fg import FGContext, fg_iota, fg_table, lemma_verschiebung, lp_derivative
from .measures import (
    mult_order,
    period_chi,
    period_chi_special,
    period_mazur,
    phi_s,
    stickelberger,
)
from .padic import PrimeContext, pow_zp, valuation
from .sums import (
    SumSpec,
    d_experiment,
    elementary_Lk,
    gap_valuation,
    interpolation_reference,
    lp_difference_quotient,
    lp_sum_zeta,
    pm1_sum,
    pruning_identity_holds,
    riemann_sum_at,
    riemann_sum_lp,
    unit_sum,
)

# Ferrero-Greenberg tables for p = 5, N = 3, q^n = 25 (rows m# = 1, 2, 3)
FG_TABLE_BEFORE = [
    [1, 4, 7, None, 13, 16, 19, 22],
    [2, None, 8, 11, 14, 17, None, 23],
    [3, 6, 9, 12, None, 18, 21, 24],
]
FG_TABLE_AFTER = [
    [17, 18, 19, None, 21, 22, 23, 24],
    [9, None, 11, 12, 13, 14, None, 16],
    [1, 2, 3, 4, None, 6, 7, 8],
]


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    counterexample: object = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "ok": self.ok, "detail": self.detail}
        if self.counterexample is not None:
            d["counterexample"] = str(self.counterexample)
        return d


@dataclass
class SuiteResult:
    suite: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}


def _first_failure(items):
    for item in items:
        if item is not None:
            return item
    return None


def nontrivial_characters(N: int):
    return [c for c in primitive_characters(N) if c.modulus > 1]


# -- periods -------------------------------------------------------------------------


def check_period_formulas(p: int, N: int, max_level: int = 3) -> Check:
    bad = None
    for chi in nontrivial_characters(N):
        for n in range(max_level + 1):
            if pow(p, n, N) != 1:
                continue
            for m in range(p ** n):
                a = period_chi(chi, m, n, p, check=False)
                if not (a - period_chi_special(chi, m)).is_zero():
                    bad = (chi, m, n)
    return Check(f"period formulas agree p={p} N={N}", bad is None, counterexample=bad)


def check_distribution(p: int, N: int, max_level: int = 3) -> Check:
    bad = None
    for chi in nontrivial_characters(N):
        for n in range(max_level):
            for m in range(p ** n):
                tot = period_chi(chi, m, n + 1, p) * 0
                for b in range(p):
                    tot = tot + period_chi(chi, m + b * p ** n, n + 1, p)
                if not (tot - period_chi(chi, m, n, p)).is_zero():
                    bad = (chi, m, n)
    for n in range(max_level):
        for m in range(p ** n):
            tot = sum(period_mazur(N, m + b * p ** n, n + 1, p) for b in range(p))
            if tot != period_mazur(N, m, n, p):
                bad = ("mazur", m, n)
    return Check(f"distribution relation p={p} N={N}", bad is None, counterexample=bad)


def check_periodicity(p: int, N: int, max_level: int = 3) -> Check:
    f = mult_order(p, N)
    bad = None
    for chi in nontrivial_characters(N):
        for n in range(max_level + 1):
            for m in range(p ** n):
                if not (period_chi(chi, m, n, p) - period_chi(chi, m, n + f, p)).is_zero():
                    bad = (chi, m, n)
    return Check(f"f-periodicity p={p} N={N}", bad is None, counterexample=bad)


def moment_valuations(p: int, chi, k: int, n: int) -> tuple[int, int]:
    """(valuation of sum m^k P(m, n) + L(-k, chi), the guaranteed bound n)."""
    tot = CycloElement.scalar(0, chi.order)
    for m in range(p ** n):
        per = period_chi(chi, m, n, p, check=False)
        tot = tot + per * (m ** k)
    ref = generalized_bernoulli(k + 1, chi) / (k + 1)  # -L(-k, chi)
    d = tot - ref
    v = d.valuation(p)
    return (10 ** 9 if v == float("inf") else int(v)), n


def check_moments(p: int, N: int, kmax: int = 3, nmax: int = 4) -> Check:
    bad = None
    worst = None
    for chi in nontrivial_characters(N):
        for k in range(kmax + 1):
            for n in range(1, nmax + 1):
                if p ** n > 3000:
                    continue
                v, bound = moment_valuations(p, chi, k, n)
                slack = v - bound
                worst = slack if worst is None else min(worst, slack)
                if v < bound:
                    bad = (chi, k, n, v)
    return Check(f"moment identity p={p} N={N}", bad is None, f"min slack {worst}", bad)


def suite_periods() -> SuiteResult:
    res = SuiteResult("periods")
    for p in (2, 3, 5):
        for N in (3, 4, 7):
            if gcd(p, N) != 1:
                continue
            res.checks += [check_period_formulas(p, N), check_distribution(p, N), check_periodicity(p, N),
                           check_moments(p, N)]
    return res


# -- Ferrero-Greenberg -----------------------------------------------------------------


def check_fg_tables() -> Check:
    before, after = fg_table(FGContext(5, 3, 1))
    ok = before == FG_TABLE_BEFORE and after == FG_TABLE_AFTER
    return Check("Ferrero-Greenberg tables p=5 N=3", ok)


def check_fg_grid(p: int, N: int, n: int, chunk: int = 1 << 22) -> Check:
    """Streams over M_n in numpy chunks.

    m = N iota(m) mod q^n with N invertible makes iota injective, so landing in M_n
    is enough for bijectivity; the filtrations are compared elementwise for every a.
    """
    fg = FGContext(p, N, n)
    Q = fg.level
    step = (Q - 1) // N
    bad = None
    count = 0
    for lo in range(1, Q, chunk):
        m = np.arange(lo, min(lo + chunk, Q), dtype=np.int64)
        m = m[m % p != 0]
        count += m.size
        ms = (m - 1) % N + 1
        img = (m - ms) // N + 1 + (N - ms) * step
        if lo == 1 and m.size:
            probe = [int(x) for x in m[:50]]
            if [fg_iota(fg, x) for x in probe] != [int(x) for x in img[:50]]:
                bad = ("closed form", probe[0])
        if ((img < 1) | (img >= Q) | (img % p == 0)).any():
            bad = ("range", int(m[(img < 1) | (img >= Q) | (img % p == 0)][0]))
        if ((m - N * img) % Q != 0).any():
            bad = ("congruence", int(m[(m - N * img) % Q != 0][0]))
        for a in range(N + 1):
            diff = (ms > a) != (img * N < (N - a) * Q)
            if diff.any():
                bad = ("filtration", a, int(m[diff][0]))
    return Check(f"FG permutation p={p} N={N} n={n}", bad is None, f"|M_n| = {count}", bad)


def suite_fg() -> SuiteResult:
    res = SuiteResult("fg", [check_fg_tables()])
    for p in (2, 3, 5, 7):
        for N in (3, 4, 5, 7):
            if gcd(p, N) != 1:
                continue
            for n in (1, 2):
                res.checks.append(check_fg_grid(p, N, n))
    return res


# -- Bernoulli and power-sum identities ----------------------------------------------------


def check_distribution_identity(rmax: int = 20, Nmax: int = 20) -> Check:
    bad = None
    for r in range(1, rmax + 1):
        for N in range(2, Nmax + 1):
            lhs = sum((bernoulli_poly(r, Fraction(a, N)) for a in range(N)), Fraction(0))
            if lhs != Fraction(N) ** (1 - r) * bernoulli_number(r):
                bad = (r, N)
    return Check("Bernoulli distribution identity", bad is None, counterexample=bad)


def check_power_sums(rmax: int = 10, nmax: int = 200) -> Check:
    bad = None
    for r in range(rmax + 1):
        brute = 0
        for n in range(nmax + 1):
            brute += n ** r if (n or r) else 1
            if power_sum(r, n) != brute:
                bad = (r, n)
    return Check("power sum closed form", bad is None, counterexample=bad)


def check_lambda_k(primes=(2, 3, 5), kmax: int = 5, nmax: int = 200) -> Check:
    bad = None
    for p in primes:
        for k in range(kmax + 1):
            for n in range(nmax + 1):
                if lambda_k_closed(k, n, p) != lambda_k_brute(k, n, p):
                    bad = (p, k, n)
    return Check("Lambda_k closed form", bad is None, counterexample=bad)


def check_elementary(primes=(3, 5, 7), Ns=(2, 3, 4), rs=(2, 4), ns=(1, 2)) -> Check:
    bad = None
    for p in primes:
        for N in Ns:
            if gcd(N, p) != 1:
                continue
            f = mult_order(p, N)
            for r in rs:
                for n in ns:
                    partial, closed = elementary_Lk(p, N, r, n)
                    d = partial - closed
                    if d != 0 and valuation(d, p) < f * n - 1:
                        bad = (p, N, r, n)
    return Check("elementary closed form congruences", bad is None, counterexample=bad)


def suite_appendixC() -> SuiteResult:
    return SuiteResult("appendixC", [check_distribution_identity(), check_power_sums(), check_lambda_k(),
                                     check_elementary()])


# -- Stickelberger -------------------------------------------------------------------------


def check_theta(p: int = 5, N: int = 3, nmax: int = 2) -> Check:
    chi = quadratic_character(N)
    bad = None
    for n in range(nmax + 1):
        th = stickelberger("theta", chi, None, n, p)
        for m, c in enumerate(th.coeffs):
            if not (c - period_chi(chi, m, n + 1, p)).is_zero():
                bad = (n, m)
    return Check("theta_n coefficients are periods", bad is None, counterexample=bad)


def check_xi(p: int = 5, N: int = 3, W: int = 8) -> Check:
    ctx = PrimeContext(p, W)
    chi = quadratic_character(N)
    bad = None
    for psi in (None, omega_char(ctx), omega_char(ctx, 2)):
        for s in (0, 1, 2):
            for n in (1, 2):
                xi = stickelberger("xi", chi, psi, n, p, ctx=ctx)
                if not xi.is_integral():
                    bad = ("integrality", n)
                a = phi_s(xi, s, ctx)
                b = -riemann_sum_at(ctx, chi, psi, -s, n + 1)
                if gap_valuation(a, b) < n:
                    bad = (psi, s, n)
    return Check("phi_s(xi_n) matches Riemann sums", bad is None, counterexample=bad)


def eta_gap(p: int, psi, c: int, s: int, n: int, ctx: PrimeContext) -> int:
    eta = stickelberger("eta", trivial_character(), psi, n, p, c=c, ctx=ctx)
    lhs = phi_s(eta, s, ctx)
    po = char_mul(psi, omega_char(ctx)) if psi is not None else omega_char(ctx)
    fac = CycloElement.scalar(1, 1, ctx) - char_eval(po, c).scale(pow_zp(ctx(c), 1 + s))
    rhs = fac * interpolation_reference(po, 1 + s, ctx)
    return gap_valuation(lhs, rhs)


def check_eta(p: int = 5, W: int = 8) -> Check:
    ctx = PrimeContext(p, W)
    bad = None
    for psi in (None, omega_char(ctx), omega_char(ctx, 3)):
        for c in (2, 3):
            for s in (0, 1, 2):
                for n in (1, 2):
                    if eta_gap(p, psi, c, s, n, ctx) < n:
                        bad = (psi, c, s, n)
    return Check("phi_s(eta_{c,n}) matches the interpolation side", bad is None, counterexample=bad)


def suite_stickelberger() -> SuiteResult:
    return SuiteResult("stickelberger", [check_theta(), check_xi(), check_eta()])


# -- derivative ----------------------------------------------------------------------------


def check_lemma(primes=(2, 3, 5, 7), max_conductor: int = 30) -> Check:
    bad = None
    count = 0
    for p in primes:
        for N in range(3, max_conductor + 1):
            if gcd(N, p) != 1:
                continue
            for chi in nontrivial_characters(N):
                if chi.is_even():
                    continue
                lhs, rhs = lemma_verschiebung(chi, p)
                count += 1
                if not (lhs - rhs).is_zero():
                    bad = (p, chi)
    return Check("Verschiebung lemma", bad is None, f"{count} characters", bad)


def derivative_gaps(p: int, N: int, ks=(2, 3, 4), precision: int = 6) -> dict[int, int]:
    ctx = PrimeContext(p, precision + 2)
    chi = quadratic_character(N)
    d = lp_derivative(chi, ctx, precision)
    f = mult_order(p, N)
    n = -(-precision // f)
    out = {}
    for k in ks:
        fd = lp_difference_quotient(chi, None, -(p ** k), ctx, n)
        out[k] = gap_valuation(fd.value, d)
    return out


def suite_derivative() -> SuiteResult:
    res = SuiteResult("derivative", [check_lemma()])
    for p in (5, 7):
        for N in (3, 4):
            gaps = derivative_gaps(p, N)
            res.checks.append(Check(f"finite differences p={p} N={N}", all(g >= k - 1 for k, g in gaps.items()),
                                    f"gaps {gaps}"))
    return res


# -- sums ------------------------------------------------------------------------------------


def riemann_grid_checks(primes=(3, 5, 7), Ns=(3, 4), rs=(1, 2, 3), ns=(1, 2), W: int = 8) -> list[Check]:
    out = []
    for p in primes:
        ctx = PrimeContext(p, W)
        for N in Ns:
            if gcd(N, p) != 1:
                continue
            chi = quadratic_character(N)
            for psi_k in (0, 1, 2):
                psi = omega_char(ctx, psi_k) if psi_k else None
                for r in rs:
                    spec = SumSpec(ctx, N, chi, psi, 1 - r)
                    theta = spec.theta()
                    if not theta.is_even():
                        continue
                    ref = interpolation_reference(theta, r, ctx)
                    for n in ns:
                        S = riemann_sum_lp(spec, n)
                        g = gap_valuation(S, -ref)
                        out.append(Check(f"riemann p={p} N={N} psi=omega^{psi_k} r={r} n={n}",
                                         g >= spec.f * n, f"gap {g} needed {spec.f * n}"))
    return out


def eq12_checks(primes=(3, 5, 7), ns=(1, 2), W: int = 8) -> list[Check]:
    out = []
    for p in primes:
        ctx = PrimeContext(p, W)
        for beta in range(0, p - 1):
            psi = omega_char(ctx, beta) if beta else None
            for s in (0, 1, -1):
                spec = SumSpec(ctx, 2, None, psi, s, "pruned_zeta")
                for n in ns:
                    lhs = pm1_sum(ctx, psi, s, n)
                    rhs = unit_sum(ctx, psi, s, p ** n) * 3 - lp_sum_zeta(spec, n) * 2
                    out.append(Check(f"alternating form p={p} beta={beta} s={s} n={n}", (lhs - rhs).is_zero()))
    return out


def suite_sums() -> SuiteResult:
    res = SuiteResult("sums", riemann_grid_checks())
    ctx = PrimeContext(5, 8)
    spec = SumSpec(ctx, 3, quadratic_character(3), None, 0)
    res.checks.append(Check("pruning identity", all(pruning_identity_holds(spec, n) for n in (1, 2))))
    res.checks += eq12_checks()
    return res


def suite_experiment(primes=(3, 5, 7), n_max: int = 5) -> SuiteResult:
    res = SuiteResult("experiment")
    for p in primes:
        rows = d_experiment(p, n_max)
        res.checks.append(Check(f"d(n) >= 2n-1 for p={p}", all(r.d >= 2 * r.n - 1 for r in rows),
                                " ".join(f"d({r.n})={r.d}" for r in rows)))
        res.checks.append(Check(f"d(n) >= n for p={p}", all(r.d >= r.n for r in rows)))
    return res


SUITES = {
    "periods": suite_periods,
    "fg": suite_fg,
    "appendixC": suite_appendixC,
    "stickelberger": suite_stickelberger,
    "derivative": suite_derivative,
    "sums": suite_sums,
    "experiment": suite_experiment,
}


def run_suite(name: str) -> list[SuiteResult]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for nm in names:
        if nm not in SUITES:
            raise KeyError(nm)
        t0 = time.perf_counter()
        res = SUITES[nm]()
        res.seconds = round(time.perf_counter() - t0, 3)
        out.append(res)
    return out
