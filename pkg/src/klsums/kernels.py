"""Bulk modular power sums over p-units, grouped by residue class.

The heavy loops of the sum engine reduce to

    T_r = sum over 1 <= m < L, p not dividing m, m = r mod M of w(m)  (mod p^K)

with w(m) = sign(m) * m^E.  For moduli below 2^31 this is done with numpy int64
arithmetic (products stay below 2^62); otherwise with Python integers.
"""

from __future__ import annotations

import numpy as np

_NUMPY_LIMIT = 1 << 31
_CHUNK = 1 << 20


def _modpow_vec(base: np.ndarray, e: int, mod: int) -> np.ndarray:
    result = np.ones_like(base)
    b = base % mod
    while e:
        if e & 1:
            result = result * b % mod
        e >>= 1
        if e:
            b = b * b % mod
    return result


def unit_exponent(p: int, K: int, t: int, j: int) -> tuple[int, bool]:
    """Exponent E (and a sign flag) with m^E (times omega(m)^(j+t) when the flag is set)
    equal to omega(m)^j <m>^t mod p^K for every unit m.

    For odd p the two factors combine into one power by CRT; for p = 2 the
    root-of-unity part is a sign and is handled separately.
    """
    if p == 2:
        return t % (1 << max(K - 2, 0)) if K > 2 else 0, (j + t) % 2 == 1
    # E = t mod p^(K-1), E = j mod p-1
    a, ma = t % p ** (K - 1), p ** (K - 1)
    b, mb = j % (p - 1), p - 1
    E = a + ma * ((b - a) * pow(ma, -1, mb) % mb)
    return E % (ma * mb), False


def class_power_sums(p: int, K: int, limit: int, M: int, E: int, sign: bool = False, start: int = 1) -> list[int]:
    """Residue-class sums T_r (r in [0, M)) of w(m) over start <= m < limit with p not dividing m.

    ``sign`` multiplies each term by (-1)^((m-1)/2), which is omega(m) for p = 2.
    """
    mod = p ** K
    out = [0] * M
    if limit <= start:
        return out
    if mod < _NUMPY_LIMIT:
        for lo in range(start, limit, _CHUNK):
            hi = min(lo + _CHUNK, limit)
            m = np.arange(lo, hi, dtype=np.int64)
            m = m[m % p != 0]
            if m.size == 0:
                continue
            w = _modpow_vec(m, E, mod)
            if sign:
                w = np.where(m % 4 == 3, (mod - w) % mod, w)
            cls = m % M
            for r in range(M):
                sel = w[cls == r]
                if sel.size:
                    out[r] = (out[r] + int(sel.sum(dtype=np.int64))) % mod
        return out
    for m in range(start, limit):
        if m % p == 0:
            continue
        w = pow(m, E, mod)
        if sign and m % 4 == 3:
            w = -w
        out[m % M] = (out[m % M] + w) % mod
    return out


def inverse_sum(p: int, K: int, limit: int, weights=None, M: int = 1) -> int:
    """sum over 1 <= m < limit, p not dividing m of weights[m % M] / m, mod p^K."""
    mod = p ** K
    total = 0
    for m in range(1, limit):
        if m % p == 0:
            continue
        w = 1 if weights is None else weights[m % M]
        if w:
            total += w * pow(m, -1, mod)
    return total % mod


def running_product(p: int, K: int, limit: int) -> int:
    """prod over 1 <= m < limit, p not dividing m, of m (mod p^K)."""
    mod = p ** K
    acc = 1
    for m in range(1, limit):
        if m % p:
            acc = acc * m % mod
    return acc


def split_class_power_sums(p: int, K: int, limit: int, M: int, E: int, sign: bool = False,
                           workers: int = 1, start: int = 1) -> list[int]:
    """class_power_sums over [start, limit) split into ``workers`` ranges; the result does not depend on the split."""
    if workers <= 1 or limit - start < 2 * _CHUNK:
        return class_power_sums(p, K, limit, M, E, sign, start)
    from concurrent.futures import ThreadPoolExecutor

    step = -(-(limit - start) // workers)
    bounds = [(lo, min(lo + step, limit)) for lo in range(start, limit, step)]
    mod = p ** K
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda b: class_power_sums(p, K, b[1], M, E, sign, b[0]), bounds))
    return [sum(col) % mod for col in zip(*parts)]
