"""Sweep the toric oracle against the closed formula and time each height.

For every d and height k, compares T^n(-R) from the linear-algebra oracle
with the multigraded series at n = k, and checks vanishing for the other n.
Larger heights grow combinatorially; ht 5 at d = 6 takes about half a minute.

    python3 scripts/oracle_sweep.py --d 3 4 5 --max-height 5
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from cotangent.formulas import p_tilde_cone
from cotangent.lattice import ConeContext, lambda_slice
from cotangent.oracle import toric_complex, toric_T_dim


@dataclass
class SweepConfig:
    ds: list = field(default_factory=lambda: [3, 4, 5])
    max_height: int = 4


def sweep(cfg: SweepConfig) -> bool:
    ok = True
    for d in cfg.ds:
        ctx = ConeContext(d)
        P = p_tilde_cone(ctx, cfg.max_height)
        for k in range(2, cfg.max_height + 1):
            t0 = time.perf_counter()
            bad, cells = [], 0
            for R in lambda_slice(ctx, k):
                for n in range(2, cfg.max_height + 2):
                    want = P[R] if n == k else 0
                    got = toric_T_dim(ctx, R, n)
                    if got != want:
                        bad.append((R, n, got, want))
                size = sum(len(toric_complex(ctx, R).complex.keys(n)) for n in range(k + 1))
                cells = max(cells, size)
            dt = time.perf_counter() - t0
            status = "PASS" if not bad else f"FAIL {bad[:3]}"
            total = sum(P[R] for R in lambda_slice(ctx, k))
            print(f"d={d} ht={k}  dim T^{k} = {total:5d}  largest complex {cells:6d} tuples  {dt:7.2f}s  {status}")
            ok &= not bad
    return ok


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--d", type=int, nargs="+", default=[3, 4, 5])
    p.add_argument("--max-height", type=int, default=4)
    a = p.parse_args()
    raise SystemExit(0 if sweep(SweepConfig(a.d, a.max_height)) else 1)
