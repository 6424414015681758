"""Dirichlet characters with symbolic root-of-unity values and an optional Teichmueller twist.

A character is stored as ``a -> zeta_order^exps[a % modulus] * omega(a)^omega``.
The symbolic part is primitive of conductor ``modulus``; the twist ``omega^k``
(conductor p, or 4 for p = 2) is realized p-adically so that products like
``omega(m) * <m>`` equal ``m`` exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd

from .cyclo import CycloElement, lcm
from .padic import PAdic, PrimeContext, teichmuller_int


class CharacterError(ValueError):
    pass


class NotMultiplicative(CharacterError):
    pass


class InconsistentOrder(CharacterError):
    pass


class NotPrimitive(CharacterError):
    pass


class TrivialCharacter(CharacterError):
    pass


# -- unit group structure -----------------------------------------------------


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _mult_order(a: int, n: int) -> int:
    k, x = 1, a % n
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k


def _crt_lift(g: int, q: int, n: int) -> int:
    """Integer = g mod q and = 1 mod n/q."""
    r = n // q
    if r == 1:
        return g % n
    # x = g + q*t, x = 1 mod r
    t = (1 - g) * pow(q, -1, r) % r
    return (g + q * t) % n


@lru_cache(maxsize=None)
def unit_group(n: int) -> tuple[tuple[tuple[int, int], ...], dict[int, tuple[int, ...]]]:
    """Generators (g, order) of (Z/n)^x as a direct product, and the exponent vector of every unit."""
    gens: list[tuple[int, int]] = []
    for ell, e in sorted(_factor(n).items()):
        q = ell ** e
        if ell == 2:
            if e >= 2:
                gens.append((_crt_lift(q - 1, q, n), 2))
            if e >= 3:
                gens.append((_crt_lift(5, q, n), 2 ** (e - 2)))
        else:
            phi = q - q // ell
            g = next(g for g in range(2, q) if gcd(g, ell) == 1 and _mult_order(g, q) == phi)
            gens.append((_crt_lift(g, q, n), phi))
    dlog: dict[int, tuple[int, ...]] = {}
    for exps in product(*(range(o) for _, o in gens)):
        x = 1 % n
        for (g, _), k in zip(gens, exps):
            x = x * pow(g, k, n) % n
        dlog[x] = exps
    return tuple(gens), dlog


# -- the character type --------------------------------------------------------


@dataclass(frozen=True)
class DirichletCharacter:
    """``exps[a]`` is the exponent of ``zeta_order`` at a (None off the units)."""

    modulus: int
    order: int
    exps: tuple
    omega: int = 0
    ctx: PrimeContext | None = field(default=None, compare=False)
    p: int | None = None

    def __post_init__(self):
        if self.omega and self.ctx is None:
            raise CharacterError("a Teichmueller twist needs a PrimeContext")

    # -- basic data -------------------------------------------------------
    @property
    def omega_modulus(self) -> int:
        if not self.omega:
            return 1
        return 4 if self.p == 2 else self.p

    @property
    def conductor(self) -> int:
        return lcm(self.modulus, self.omega_modulus)

    @property
    def full_order(self) -> int:
        if not self.omega:
            return self.order
        t = self.ctx.teich_order
        return lcm(self.order, t // gcd(t, self.omega))

    def is_trivial(self) -> bool:
        return self.modulus == 1 and not self.omega

    def is_symbolic(self) -> bool:
        return not self.omega

    def exp_at(self, a: int) -> int | None:
        """Exponent of zeta_order at a, ignoring the twist; None where the symbolic part vanishes."""
        return self.exps[a % self.modulus]

    def vanishes_at(self, a: int) -> bool:
        if self.exps[a % self.modulus] is None:
            return True
        return bool(self.omega) and a % self.p == 0

    def parity(self) -> str:
        j = self.exps[-1 % self.modulus]
        if 2 * j % self.order:
            raise CharacterError("chi(-1) is not +-1")
        sym = 1 if j % self.order == 0 else -1
        return "even" if sym * (-1) ** self.omega == 1 else "odd"

    def is_even(self) -> bool:
        return self.parity() == "even"

    def __call__(self, a) -> CycloElement:
        return char_eval(self, a)

    def __mul__(self, other):
        return char_mul(self, other)

    def __pow__(self, k: int):
        return char_pow(self, k)

    def __repr__(self):
        name = f"chi(mod {self.modulus}, order {self.order})"
        if self.omega:
            name += f"*omega^{self.omega} (p={self.p})"
        return name

    def label(self) -> str:
        if self.is_trivial():
            return "1"
        parts = []
        if self.modulus > 1:
            parts.append(f"chi_{self.modulus}^{{" + ",".join("-" if e is None else str(e) for e in self.exps) + f"}}/{self.order}")
        if self.omega:
            parts.append(f"omega^{self.omega}")
        return "*".join(parts)


def _normalize(modulus: int, order: int, exps, omega=0, ctx=None) -> DirichletCharacter:
    vals = [e % order for e in exps if e is not None]
    g = order
    for e in vals:
        g = gcd(g, e)
    new_order = order // g if vals else 1
    new = tuple(None if e is None else (e % order) // g for e in exps)
    if ctx is not None:
        omega %= ctx.teich_order
    p = ctx.p if (ctx is not None and omega) else None
    return DirichletCharacter(modulus, max(new_order, 1), new, omega, ctx if omega else None, p)


def trivial_character() -> DirichletCharacter:
    return DirichletCharacter(1, 1, (0,))


def _conductor(modulus: int, order: int, exps) -> int:
    for d in sorted(x for x in range(1, modulus + 1) if modulus % x == 0):
        ok = True
        for a in range(1, modulus, d) if d > 1 else range(modulus):
            if gcd(a, modulus) != 1:
                continue
            if a % d != 1 % d:
                continue
            if exps[a] % order:
                ok = False
                break
        if ok:
            return d
    return modulus


def primitive(modulus: int, order: int, exps) -> tuple[int, tuple]:
    """Primitive table inducing the given one."""
    d = _conductor(modulus, order, exps)
    table = []
    for b in range(d):
        if gcd(b, d) != 1:
            table.append(None)
            continue
        a = next(a for a in range(b, b + d * modulus + 1, d) if gcd(a, modulus) == 1)
        table.append(exps[a % modulus])
    if d == 1:
        table = [0]
    return d, tuple(table)


def char_from_exponents(modulus: int, order: int, exps, require_primitive=False) -> DirichletCharacter:
    d, table = primitive(modulus, order, exps)
    if require_primitive and d != modulus:
        raise NotPrimitive(f"character mod {modulus} has conductor {d}")
    return _normalize(d, order, table)


_ZETA = re.compile(r"^\s*zeta_(\d+)(?:\^(-?\d+))?\s*$")


def parse_root(value) -> tuple[int, int]:
    """Parse a root of unity as (j, m) meaning zeta_m^j."""
    if isinstance(value, tuple):
        return value
    if isinstance(value, (int, Fraction)) or (isinstance(value, str) and re.fullmatch(r"\s*[+-]?\d+\s*", value)):
        v = int(value)
        if v == 1:
            return 0, 1
        if v == -1:
            return 1, 2
        raise NotMultiplicative(f"{value} is not a root of unity")
    m = _ZETA.match(str(value))
    if not m:
        raise NotMultiplicative(f"cannot read root of unity {value!r}")
    mm = int(m.group(1))
    return int(m.group(2) or 1) % mm, mm


def char_from_table(modulus: int, gen_values: dict, primitive_required: bool = True) -> DirichletCharacter:
    """Build a character from values on generators of (Z/modulus)^x."""
    if modulus == 1:
        return trivial_character()
    gens, dlog = unit_group(modulus)
    roots = {}
    for g, val in gen_values.items():
        g = int(g)
        if gcd(g, modulus) != 1:
            raise NotMultiplicative(f"{g} is not a unit mod {modulus}")
        j, m = parse_root(val)
        roots[g % modulus] = (j, m)
    L = 1
    for j, m in roots.values():
        L = lcm(L, m)
    for g, (j, m) in roots.items():
        if j * (L // m) * _mult_order(g, modulus) % L:
            raise InconsistentOrder(f"value at {g} has order not dividing the order of {g}")
    matches = []
    for xs in product(*(range(L) for _ in gens)):
        ok = all(
            (xs[i] * o) % L == 0 for i, (_, o) in enumerate(gens)
        )
        if not ok:
            continue
        good = True
        for g, (j, m) in roots.items():
            e = sum(k * x for k, x in zip(dlog[g], xs)) % L
            if e != j * (L // m) % L:
                good = False
                break
        if good:
            matches.append(xs)
            if len(matches) > 1:
                raise InconsistentOrder("generator values do not determine the character")
    if not matches:
        raise NotMultiplicative("no character takes these values")
    xs = matches[0]
    exps = tuple(
        None if gcd(a, modulus) != 1 else sum(k * x for k, x in zip(dlog[a], xs)) % L
        for a in range(modulus)
    )
    return char_from_exponents(modulus, L, exps, require_primitive=primitive_required)


def omega_char(ctx: PrimeContext, k: int = 1) -> DirichletCharacter:
    """The Teichmueller character (conductor p, or 4 if p = 2) to the power k."""
    return _normalize(1, 1, (0,), k, ctx)


def quadratic_character(N: int) -> DirichletCharacter:
    """The primitive quadratic character of conductor N (N = 3, 4, 5, 7, 8, ...)."""
    for chi in all_characters(N):
        if chi.order == 2 and chi.modulus == N:
            return chi
    raise CharacterError(f"no primitive quadratic character of conductor {N}")


@lru_cache(maxsize=None)
def all_characters(n: int) -> tuple[DirichletCharacter, ...]:
    """All characters mod n, each stored primitively."""
    if n == 1:
        return (trivial_character(),)
    gens, dlog = unit_group(n)
    L = 1
    for _, o in gens:
        L = lcm(L, o)
    out = []
    for xs in product(*(range(o) for _, o in gens)):
        exps = tuple(
            None if gcd(a, n) != 1 else sum(k * x * (L // o) for k, x, (_, o) in zip(dlog[a], xs, gens)) % L
            for a in range(n)
        )
        out.append(char_from_exponents(n, L, exps))
    return tuple(out)


def primitive_characters(N: int) -> list[DirichletCharacter]:
    return [c for c in all_characters(N) if c.modulus == N]


# -- evaluation and products --------------------------------------------------


def char_value(chi: DirichletCharacter, a: int):
    """(exponent, scalar) with chi(a) = zeta^exponent * scalar; None if chi(a) = 0."""
    if chi.vanishes_at(a):
        return None
    j = chi.exps[a % chi.modulus]
    if not chi.omega:
        return j, 1
    ctx = chi.ctx
    w = teichmuller_int(a % ctx.unit_modulus, ctx.p, ctx.W)
    return j, pow(w, chi.omega, ctx.modulus)


def char_eval(chi: DirichletCharacter, a) -> CycloElement:
    if isinstance(a, PAdic):
        if chi.modulus > 1 and (chi.modulus % a.ctx.p or chi.modulus != a.ctx.p ** _vp(chi.modulus, a.ctx.p)):
            raise CharacterError("p-adic arguments need a p-power conductor")
        a = a.residue(_vp(chi.conductor, a.ctx.p))
    a = int(a)
    val = char_value(chi, a)
    ctx = chi.ctx
    if val is None:
        return CycloElement.scalar(0, chi.order, ctx)
    j, w = val
    coeff = ctx(w) if ctx is not None else 1
    return CycloElement.monomial(chi.order, j, coeff, ctx)


def _vp(n, p):
    k = 0
    while n % p == 0 and n:
        n //= p
        k += 1
    return k


def char_mul(chi1: DirichletCharacter, chi2: DirichletCharacter) -> DirichletCharacter:
    ctx = chi1.ctx or chi2.ctx
    if chi1.ctx and chi2.ctx and chi1.ctx.p != chi2.ctx.p:
        raise CharacterError("twists over different primes")
    M = lcm(chi1.modulus, chi2.modulus)
    O = lcm(chi1.order, chi2.order)
    exps = []
    for a in range(M):
        e1, e2 = chi1.exps[a % chi1.modulus], chi2.exps[a % chi2.modulus]
        if e1 is None or e2 is None or gcd(a, M) != 1:
            exps.append(None)
        else:
            exps.append((e1 * (O // chi1.order) + e2 * (O // chi2.order)) % O)
    d, table = primitive(M, O, tuple(exps))
    return _normalize(d, O, table, chi1.omega + chi2.omega, ctx)


def char_pow(chi: DirichletCharacter, k: int) -> DirichletCharacter:
    exps = tuple(None if e is None else e * k % chi.order for e in chi.exps)
    d, table = primitive(chi.modulus, chi.order, exps)
    return _normalize(d, chi.order, table, chi.omega * k, chi.ctx)


def char_inverse(chi: DirichletCharacter) -> DirichletCharacter:
    return char_pow(chi, -1)


def parity(chi: DirichletCharacter) -> str:
    return chi.parity()


def decompose(chi: DirichletCharacter, p: int) -> tuple[DirichletCharacter, DirichletCharacter]:
    """Split the symbolic part as (prime-to-p conductor part, p-power conductor part)."""
    n = chi.modulus
    pk = p ** _vp(n, p)
    N = n // pk
    tame = []
    for a in range(N):
        if gcd(a, N) != 1:
            tame.append(None)
            continue
        b = _crt(a, N, 1, pk)
        tame.append(chi.exps[b])
    wild = []
    for a in range(pk):
        if gcd(a, pk) != 1:
            wild.append(None)
            continue
        b = _crt(1, N, a, pk)
        wild.append(chi.exps[b])
    c1 = char_from_exponents(N, chi.order, tuple(tame)) if N > 1 else trivial_character()
    c2 = char_from_exponents(pk, chi.order, tuple(wild)) if pk > 1 else trivial_character()
    if chi.omega:
        c2 = _normalize(c2.modulus, c2.order, c2.exps, chi.omega, chi.ctx)
    return c1, c2


def _crt(a, m, b, n):
    if m == 1:
        return b % n
    if n == 1:
        return a % m
    t = (b - a) * pow(m, -1, n) % n
    return (a + m * t) % (m * n)


# -- shorthand names ------------------------------------------------------------

_SHORT = re.compile(r"^\s*(?:quad(\d+)|omega(?:\^(-?\d+))?|1|trivial)\s*$")


def parse_character(spec, ctx: PrimeContext | None = None) -> DirichletCharacter:
    """``quad3``, ``quad4``, ``omega``, ``omega^k``, ``1`` or a dict
    ``{"modulus": N, "gens": {g: "zeta_m^j" | "+1" | "-1"}}``; products with ``*``."""
    if isinstance(spec, DirichletCharacter):
        return spec
    if isinstance(spec, dict):
        chi = char_from_table(int(spec["modulus"]), spec.get("gens", {}))
        if spec.get("omega"):
            chi = char_mul(chi, omega_char(ctx, int(spec["omega"])))
        return chi
    text = str(spec)
    if "*" in text:
        out = trivial_character()
        for part in text.split("*"):
            out = char_mul(out, parse_character(part, ctx))
        return out
    m = _SHORT.match(text)
    if not m:
        raise CharacterError(f"unknown character {spec!r}")
    if m.group(1):
        return quadratic_character(int(m.group(1)))
    if text.strip().startswith("omega"):
        if ctx is None:
            raise CharacterError("omega needs a prime")
        return omega_char(ctx, int(m.group(2) or 1))
    return trivial_character()
