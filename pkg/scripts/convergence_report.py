"""Gap valuations of each sum form against its limit, level by level."""

import sys
from dataclasses import dataclass

from _config import parse

from klsums.characters import omega_char, parse_character
from klsums.padic import PrimeContext
from klsums.sums import SumSpec, run_sum


@dataclass
class Config:
    p: int = 5
    W: int = 12
    N: int = 3
    chi: str = "quad3"
    psi_power: int = 0
    r: int = 1
    levels: tuple = (1, 2, 3)
    forms: tuple = ("riemann", "pruned_dirichlet", "pruned_zeta", "pm1")


def main(argv=None):
    cfg = parse(Config, argv, __doc__)
    ctx = PrimeContext(cfg.p, cfg.W)
    psi = omega_char(ctx, cfg.psi_power) if cfg.psi_power else None
    print(f"{'form':18} {'n':>2} {'level':>8} {'gap':>4} {'guaranteed':>10}")
    for form in cfg.forms:
        chi = None if form in ("pruned_zeta", "pm1") else parse_character(cfg.chi, ctx)
        N = 2 if form == "pm1" else cfg.N
        try:
            spec = SumSpec(ctx, N, chi, psi, 1 - cfg.r, form)
            report = run_sum(spec, cfg.levels)
        except ValueError as exc:
            print(f"{form:18} skipped: {exc}")
            continue
        for lv in report.levels:
            print(f"{form:18} {lv['n']:>2} {lv['level']:>8} {lv['valuation_gap']!s:>4} {lv['guaranteed']:>10}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
