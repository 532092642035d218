"""The ten acceptance criteria as runnable checks.

Each criterion returns a :class:`CriterionResult`; ``run_all`` is what both
``cotangent verify --acceptance`` and tests/test_acceptance.py drive.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from cotangent.formulas import (
    PartitionCurveSpec,
    fat_point_harrison_dim,
    ht3_cone_closed_form,
    ht3_cone_symmetric_form,
    hyperplane_section_series,
    multigraded_harrison_dim,
    p_cone,
    p_fat_point,
    p_partition_curve,
    p_tilde_cone,
    t1_dim,
    t2_dim,
)
from cotangent.lattice import ConeContext, MultiDegree, lambda_slice
from cotangent.oracle import (
    fat_point_harrison_A_dims,
    fat_point_module_complex,
    homogeneous_complex,
    shuffle_harrison_dim,
    toric_complex,
    toric_T_dim,
)
from cotangent.series import UniSeries, heightize
from cotangent.verify import euler_rhs


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float
    budget: float

    @property
    def in_budget(self) -> bool:
        return self.seconds < self.budget

    def line(self) -> str:
        status = "PASS" if self.ok and self.in_budget else "FAIL"
        return (
            f"criterion {self.number:2d} {status}  {self.title}  "
            f"[{self.seconds:.2f}s / {self.budget:g}s]  {self.detail}"
        )


def _timed(number, title, budget, fn) -> CriterionResult:
    t0 = time.perf_counter()
    failures, checked = fn()
    dt = time.perf_counter() - t0
    detail = f"{checked} checks" if not failures else f"{len(failures)}/{checked} failed, first: {failures[0]}"
    return CriterionResult(number, title, not failures, detail, dt, budget)


def criterion_1() -> CriterionResult:
    def run():
        bad, n_checks = [], 0
        for m in (2, 3, 4):
            for n in range(1, 7):
                n_checks += 1
                f, o = fat_point_harrison_dim(m, n), shuffle_harrison_dim(m, n)
                if f != o:
                    bad.append(f"m={m} n={n}: formula {f} oracle {o}")
        return bad, n_checks

    return _timed(1, "fat-point c_n formula = shuffle-rank oracle", 30, run)


def criterion_2() -> CriterionResult:
    def run():
        bad, n_checks = [], 0
        for d in range(3, 7):
            ctx = ConeContext(d)
            for n in range(1, 7):
                cs = {R: multigraded_harrison_dim(ctx, R) for R in lambda_slice(ctx, n)}
                n_checks += 1
                if sum(cs.values()) != fat_point_harrison_dim(d - 1, n):
                    bad.append(f"d={d} n={n}: sum {sum(cs.values())}")
                for R, c in cs.items():
                    n_checks += 1
                    # the cone spanned by [1,1] and [d-1,1]
                    if c and not (n <= R.i <= (d - 1) * n):
                        bad.append(f"d={d}: c_{R} = {c} outside the cone")
        return bad, n_checks

    return _timed(2, "sum of c_R over a height = c_n; support in cone([1,1],[d-1,1])", 5, run)


def criterion_3() -> CriterionResult:
    def run():
        bad, n_checks = [], 0
        for d in range(3, 9):
            ctx = ConeContext(d)
            P = p_tilde_cone(ctx, 2)
            for R in lambda_slice(ctx, 1):
                n_checks += 1
                if P[R] != t1_dim(ctx, R):
                    bad.append(f"d={d} {R}: {P[R]} vs T1 table {t1_dim(ctx, R)}")
            for R in lambda_slice(ctx, 2):
                n_checks += 1
                if P[R] != t2_dim(ctx, R):
                    bad.append(f"d={d} {R}: {P[R]} vs T2 table {t2_dim(ctx, R)}")
            h = heightize(P)
            n_checks += 2
            if h[1] != 2 * d - 4:
                bad.append(f"d={d}: dim T1 = {h[1]}")
            if h[2] != (d - 1) * (d - 3):
                bad.append(f"d={d}: dim T2 = {h[2]}")
        return bad, n_checks

    return _timed(3, "ht-1, ht-2 slices of P~ = T1, T2 tables", 5, run)


def criterion_4() -> CriterionResult:
    def run():
        bad, n_checks = [], 0
        for d in range(3, 9):
            ctx = ConeContext(d)
            slice3 = p_tilde_cone(ctx, 3).slice_series(3)
            n_checks += 1
            if slice3 != ht3_cone_closed_form(ctx):
                bad.append(f"d={d}: quotient form differs")
            if d % 2 == 0:
                n_checks += 1
                if slice3 != ht3_cone_symmetric_form(ctx):
                    bad.append(f"d={d}: symmetric even-d form differs")
        return bad, n_checks

    return _timed(4, "ht-3 slice of P~ = closed product forms", 5, run)


def criterion_5() -> CriterionResult:
    def run():
        bad, n_checks = [], 0
        for d in (3, 4, 5):
            ctx = ConeContext(d)
            P = p_tilde_cone(ctx, 4)
            for h in (3, 4):
                for R in lambda_slice(ctx, h):
                    for n in range(2, 6):
                        n_checks += 1
                        want = P[R] if n == h else 0
                        got = toric_T_dim(ctx, R, n)
                        if got != want:
                            bad.append(f"d={d} R={R} n={n}: oracle {got}, expected {want}")
        return bad, n_checks

    return _timed(5, "P~ coefficients = toric oracle T^n(-R); vanishing off height", 600, run)


def criterion_6() -> CriterionResult:
    def run():
        bad, n_checks = [], 0
        for d in range(3, 7):
            for N in range(0, 6):
                n_checks += 1
                a, b = heightize(p_tilde_cone(ConeContext(d), N)), p_cone(d, N)
                if a != b:
                    bad.append(f"d={d} N={N}: {a} vs {b}")
        n_checks += 1
        if p_cone(4, 4) != UniSeries.from_list([0, 4, 3, 3, 9]):
            bad.append(f"p_cone(4,4) = {p_cone(4, 4)}")
        return bad, n_checks

    return _timed(6, "heightize(P~) = P_Y; P_{Y_4} = 4t+3t^2+3t^3+9t^4", 5, run)


def criterion_7() -> CriterionResult:
    def run():
        bad, n_checks = [], 0
        for tau_H in range(0, 12):
            n_checks += 1
            got = p_partition_curve(PartitionCurveSpec(4, tau_H), 3)
            if got != UniSeries.from_list([0, tau_H, 6, 12]):
                bad.append(f"d=4 tau_H={tau_H}: {got}")
        for d in range(3, 7):
            base = (d - 1) * (d - 3)
            for tau_H in range(base, base + 6):
                spec = PartitionCurveSpec(d, tau_H)
                for N in range(1, 6):
                    n_checks += 1
                    direct = p_partition_curve(spec, N)
                    via = hyperplane_section_series(p_cone(d, N + 1), 2 * d - 4, tau_H - base)
                    if direct != via:
                        bad.append(f"d={d} tau_H={tau_H} N={N}: {direct} vs {via}")
        return bad, n_checks

    return _timed(7, "partition-curve series = hyperplane-section relation on P_Y", 5, run)


def criterion_8() -> CriterionResult:
    def run():
        bad, n_checks = [], 0
        for m in (2, 3):
            P = p_fat_point(m, 3)
            harr = fat_point_harrison_A_dims(m, 4)  # Harr^1..Harr^4
            for n in range(0, 4):
                n_checks += 1
                closed = m * m if n == 0 else (
                    m * fat_point_harrison_dim(m, n + 1) - fat_point_harrison_dim(m, n)
                )
                if not (P[n] == closed == harr[n]):
                    bad.append(f"m={m} n={n}: series {P[n]}, closed {closed}, oracle Harr^{n + 1} {harr[n]}")
        return bad, n_checks

    return _timed(8, "P_Z coefficients = m c_{n+1} - c_n = oracle Harr^{n+1}(A,A)", 60, run)


def criterion_9() -> CriterionResult:
    def run():
        bad, n_checks = [], 0
        for d in (3, 4):
            ctx = ConeContext(d)
            for h in (1, 2, 3, 4):
                for R in lambda_slice(ctx, h):
                    want = toric_T_dim(ctx, R, h) if h >= 3 else 0
                    for source in ("formula", "oracle"):
                        n_checks += 1
                        got = euler_rhs(ctx, R, source)
                        if got != want:
                            bad.append(f"d={d} R={R} ({source}): rhs {got}, expected {want}")
        return bad, n_checks

    return _timed(9, "Euler-characteristic identity; zero at heights 1 and 2", 600, run)


def criterion_10() -> CriterionResult:
    def run():
        bad, n_checks = [], 0
        complexes = []
        for d in (3, 4, 5):
            ctx = ConeContext(d)
            for h in (1, 2, 3, 4):
                for R in lambda_slice(ctx, h):
                    complexes.append((f"toric d={d} R={R}", toric_complex(ctx, R)))
                    if d <= 4:
                        complexes.append((f"split d={d} r={R}", homogeneous_complex(ctx, R)))
        for name, cx in complexes:
            for prop, ok in cx.sanity().items():
                n_checks += 1
                if not ok:
                    bad.append(f"{name}: {prop}")
        for m in (2, 3):
            cx = fat_point_module_complex(m, 4)
            for n in range(0, 5):
                n_checks += 3
                if not cx.d_squared_vanishes(n):
                    bad.append(f"fat point m={m} n={n}: d o d != 0")
                if not cx.preserves_invariants(n):
                    bad.append(f"fat point m={m} n={n}: invariants not preserved")
                if not cx.invariants_are_annihilated(n):
                    bad.append(f"fat point m={m} n={n}: basis fails relations")
        return bad, n_checks

    return _timed(10, "d o d = 0 and shuffle-subspace preservation on every complex", 600, run)


CRITERIA = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
]


def run_all() -> list[CriterionResult]:
    return [c() for c in CRITERIA]
