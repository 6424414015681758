"""Half-range convergence experiment: the largest d(n) with the level-n sum
congruent to its limit mod p^d, tabulated against 2n - 1."""

import csv
import sys
from dataclasses import dataclass

from _config import parse

from klsums.sums import d_experiment


@dataclass
class Config:
    primes: tuple = (3, 5, 7, 11)
    n_max: int = 5
    out: str = ""


def main(argv=None):
    cfg = parse(Config, argv, __doc__)
    fh = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["p", "n", "d", "2n-1", "capped"])
    worst = None
    for p in cfg.primes:
        for row in d_experiment(p, cfg.n_max):
            w.writerow([p, row.n, row.d, row.bound, row.capped])
            excess = row.d - row.bound
            worst = excess if worst is None else min(worst, excess)
    if fh is not sys.stdout:
        fh.close()
    print(f"min d(n) - (2n-1) over the grid: {worst}", file=sys.stderr)
    return 0 if worst is not None and worst >= 0 else 1


if __name__ == "__main__":
    sys.exit(main())
