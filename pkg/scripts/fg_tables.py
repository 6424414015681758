"""Print the Ferrero-Greenberg permutation as two row-by-residue matrices."""

import sys
from dataclasses import dataclass

from _config import parse

from klsums.fg import FGContext, fg_table, render_table


@dataclass
class Config:
    p: int = 5
    N: int = 3
    n: int = 1


def main(argv=None):
    cfg = parse(Config, argv, __doc__)
    fg = FGContext(cfg.p, cfg.N, cfg.n)
    before, after = fg_table(fg)
    print(f"M_n for p={fg.p}, N={fg.N}, q^n={fg.level}; row r holds m = r + hN")
    print(render_table(before))
    print("\nimages under iota")
    print(render_table(after))
    return 0


if __name__ == "__main__":
    sys.exit(main())
