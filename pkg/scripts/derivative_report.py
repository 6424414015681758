"""Compare L_p'(0) from the log-Gamma formula with finite-difference quotients at s = -p^k."""

import sys
from dataclasses import dataclass

from _config import parse

from klsums.verify import derivative_gaps


@dataclass
class Config:
    primes: tuple = (5, 7)
    conductors: tuple = (3, 4)
    ks: tuple = (2, 3, 4)
    precision: int = 6


def main(argv=None):
    cfg = parse(Config, argv, __doc__)
    ok = True
    for p in cfg.primes:
        for N in cfg.conductors:
            if N % p == 0:
                continue
            gaps = derivative_gaps(p, N, cfg.ks, cfg.precision)
            row = "  ".join(f"k={k}: {g}" for k, g in gaps.items())
            print(f"p={p} N={N}  {row}")
            ok &= all(g >= k - 1 for k, g in gaps.items())
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
