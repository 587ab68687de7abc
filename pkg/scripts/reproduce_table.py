"""List the complete bipartite graphs K_{m,n} that pass the k-split edge-count test.

For each k the output groups feasible pairs by the smaller side m: either
every n is feasible, or n runs up to a largest value. It also reports the
largest d such that every K_{m,d-m} is feasible.

    python scripts/reproduce_table.py --k 2 3 4
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from splitthick.bounds import eq2_feasible, eq2_max_partner


@dataclass
class TableConfig:
    ks: tuple[int, ...] = (2, 3)
    n_max: int = 500


def rows_for(k: int, n_max: int) -> list[str]:
    rows = []
    unbounded = [m for m in range(1, n_max) if all(eq2_feasible(m, m + n, k) for n in range(1, n_max))]
    if unbounded:
        rows.append(f"m <= {max(unbounded)}, any n")
    m = max(unbounded, default=0) + 1
    while True:
        ns = [n for n in range(m, n_max) if eq2_feasible(m, m + n, k)]
        if not ns:
            break
        assert ns == list(range(m, max(ns) + 1))
        assert max(ns) == eq2_max_partner(m, k)
        rows.append(f"m = {m}, n <= {max(ns)}")
        m += 1
    d = 2
    while all(eq2_feasible(a, d + 1, k) for a in range(1, d + 1)):
        d += 1
    rows.append(f"every K_(m, d-m) feasible up to d = {d}")
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, nargs="+", default=list(TableConfig.ks))
    ap.add_argument("--n-max", type=int, default=TableConfig.n_max)
    args = ap.parse_args(argv)
    for k in args.k:
        print(f"k = {k}")
        for row in rows_for(k, args.n_max):
            print(f"  {row}")


if __name__ == "__main__":
    main()
