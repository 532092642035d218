"""Print Poincare series tables for the cone Y_d and the fat point Z_{d-1}.

    python3 scripts/poincare_tables.py --d-min 3 --d-max 8 --order 6
    python3 scripts/poincare_tables.py --d-max 5 --multigraded 3
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from cotangent.formulas import p_cone, p_fat_point, p_tilde_cone, q_cone
from cotangent.lattice import ConeContext


@dataclass
class TableConfig:
    d_min: int = 3
    d_max: int = 8
    order: int = 6
    multigraded: int = 0  # height cut for the P~ slices, 0 to skip


def row(label, series, width):
    cells = "".join(str(c).rjust(width) for c in series.to_list())
    return f"{label:<10}{cells}"


def main(cfg: TableConfig):
    width = 8
    header = "".join(f"t^{n}".rjust(width) for n in range(cfg.order + 1))
    for title, fn in (("P_Y", p_cone), ("Q_Y", q_cone)):
        print(f"{title}\n{'d':<10}{header}")
        for d in range(cfg.d_min, cfg.d_max + 1):
            print(row(f"d={d}", fn(d, cfg.order), width))
        print()
    print(f"P_Z\n{'m':<10}{header}")
    for d in range(cfg.d_min, cfg.d_max + 1):
        print(row(f"m={d - 1}", p_fat_point(d - 1, cfg.order), width))
    if cfg.multigraded:
        for d in range(cfg.d_min, cfg.d_max + 1):
            P = p_tilde_cone(ConeContext(d), cfg.multigraded)
            print(f"\nP~ for d={d} (coefficient of x^[i,k], i = 0..dk)")
            for k in range(1, cfg.multigraded + 1):
                print(f"  k={k}: " + " ".join(str(P[(i, k)]) for i in range(d * k + 1)))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--d-min", type=int, default=TableConfig.d_min)
    p.add_argument("--d-max", type=int, default=TableConfig.d_max)
    p.add_argument("--order", type=int, default=TableConfig.order)
    p.add_argument("--multigraded", type=int, default=TableConfig.multigraded)
    a = p.parse_args()
    main(TableConfig(a.d_min, a.d_max, a.order, a.multigraded))
