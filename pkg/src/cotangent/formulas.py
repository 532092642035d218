"""Closed dimension formulas and Poincare series.

Notation: m = d - 1 is the embedding dimension of the fat point Z_m, c_n is
the dimension of Harr^n(C+V/C, C) (the degree -n part of the free graded Lie
algebra on m odd generators), and c_R its refinement by the multidegree R
when the generators z_v carry degree [v,1], v = 1..d-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from cotangent.lattice import (
    ConeContext,
    MultiDegree,
    as_degree,
    divisors_of_degree,
    moebius,
)
from cotangent.series import (
    IntegrityError,
    MultiSeries,
    UniSeries,
    exact_divide_by_height_zero_poly,
    exact_divide_height_zero,
    expand_inverse_one_plus,
    one_plus_t,
    uni_rational_eval,
)


@dataclass(frozen=True)
class PartitionCurveSpec:
    d: int
    tau_H: int

    def __post_init__(self):
        if self.d < 3:
            raise ValueError(f"d must be >= 3, got {self.d}")
        if self.tau_H < 0:
            raise ValueError(f"tau_H must be >= 0, got {self.tau_H}")


@dataclass(frozen=True)
class QuotientSpec:
    d: int
    tau: int

    def __post_init__(self):
        if self.d < 3:
            raise ValueError(f"d must be >= 3, got {self.d}")
        if self.tau < 0:
            raise ValueError(f"tau must be >= 0, got {self.tau}")


def _as_int(x: Fraction, where) -> int:
    if x.denominator != 1:
        raise IntegrityError(f"non-integral dimension {x} at {where}", where)
    if x < 0:
        raise IntegrityError(f"negative dimension {x} at {where}", where)
    return int(x)


# ---------------------------------------------------------------- fat point


@lru_cache(maxsize=None)
def fat_point_harrison_dim(m: int, n: int) -> int:
    """c_n = (1/n) sum_{e|n} (-1)^(n + n/e) mu(e) m^(n/e)."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    total = sum(
        (-1) ** (n + n // e) * moebius(e) * m ** (n // e) for e in range(1, n + 1) if n % e == 0
    )
    return _as_int(Fraction(total, n), n)


def q_fat_point(m: int, order: int) -> UniSeries:
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    return UniSeries(order, {n: fat_point_harrison_dim(m, n) for n in range(1, order + 1)})


def p_fat_point(m: int, order: int) -> UniSeries:
    """m^2 + sum_{n>=1} (m c_{n+1} - c_n) t^n: dimensions of T^n of the fat point."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    c = fat_point_harrison_dim
    coeffs = {0: m * m}
    coeffs.update({n: m * c(m, n + 1) - c(m, n) for n in range(1, order + 1)})
    return UniSeries(order, coeffs).assert_nonnegative()


# ---------------------------------------------------- multigraded Harrison


@lru_cache(maxsize=None)
def _compositions(d: int, total: int, parts: int) -> int:
    """#{(v_1..v_parts) in [1, d-1]^parts : sum = total}."""
    if parts == 0:
        return 1 if total == 0 else 0
    if total < parts or total > (d - 1) * parts:
        return 0
    return sum(_compositions(d, total - v, parts - 1) for v in range(1, d))


def _signed_power_coeff(d: int, R: MultiDegree) -> int:
    # coefficient of x^R in (-1)^n (x^[1,1] + ... + x^[d-1,1])^n, n = ht(R)
    n = R.k
    return (-1) ** n * _compositions(d, R.i, n)


@lru_cache(maxsize=None)
def _multigraded_dim(d: int, i: int, k: int) -> int:
    R = MultiDegree(i, k)
    if k < 1 or not (k <= i <= (d - 1) * k):
        return 0
    s = sum(moebius(j) * _signed_power_coeff(d, Rj) for j, Rj in divisors_of_degree(R))
    c = _as_int(Fraction((-1) ** k * s, k), R)
    # round trip: sum_{R'|R} (-1)^ht(R') ht(R') c_R' must give back a_R
    back = sum(
        (-1) ** Rj.k * Rj.k * (c if j == 1 else _multigraded_dim(d, Rj.i, Rj.k))
        for j, Rj in divisors_of_degree(R)
    )
    if back != _signed_power_coeff(d, R):
        raise IntegrityError(f"Moebius inversion does not round-trip at {R}", R)
    return c


def multigraded_harrison_dim(ctx: ConeContext, R) -> int:
    """c_R, the dimension of Harr^ht(R)(C+V/C, C) in degree -R."""
    R = as_degree(R)
    if R.i == 0 and R.k == 0:
        raise ValueError("c_R is undefined for R = 0")
    return _multigraded_dim(ctx.d, R.i, R.k)


def q_tilde_fat_point(ctx: ConeContext, height_cut: int) -> MultiSeries:
    d = ctx.d
    coeffs = {
        MultiDegree(i, k): _multigraded_dim(d, i, k)
        for k in range(1, height_cut + 1)
        for i in range(k, (d - 1) * k + 1)
    }
    return MultiSeries(ctx, height_cut, coeffs)


def q_tilde_cone(ctx: ConeContext, height_cut: int) -> MultiSeries:
    """Q~_{Z_{d-1}} + x^[0,1] + x^[d,1]."""
    extra = MultiSeries(ctx, height_cut, {MultiDegree(0, 1): 1, MultiDegree(ctx.d, 1): 1})
    return q_tilde_fat_point(ctx, height_cut) + extra


def q_cone(d: int, order: int) -> UniSeries:
    return q_fat_point(d - 1, order) + UniSeries(order, {1: 2})


# --------------------------------------------------------- toric tables


def t0_dim(ctx: ConeContext, R) -> int:
    u, v = ctx.ray_values(R)
    if u <= 0 and v <= 0:
        return 2
    if (u <= 0 and v == 1) or (v <= 0 and u == 1):
        return 1
    return 0


def t1_dim(ctx: ConeContext, R) -> int:
    i, k = R
    d = ctx.d
    if k != 1 or not (1 <= i <= d - 1):
        return 0
    return 1 if i in (1, d - 1) else 2


def t2_dim(ctx: ConeContext, R) -> int:
    i, k = R
    d = ctx.d
    if k != 2:
        return 0
    if 2 <= i <= d - 1:
        return i - 2
    if i == d:
        return d - 3
    if d + 1 <= i <= 2 * d - 2:
        return 2 * d - i - 2
    return 0


# ------------------------------------------------------------ the cone


def height_one_generators(ctx: ConeContext, height_cut: int) -> MultiSeries:
    """x^[1,1] + ... + x^[d-1,1], built as (x^[d,1] - x^[1,1]) / (x^[1,0] - 1)."""
    num = MultiSeries(ctx, height_cut, {MultiDegree(ctx.d, 1): 1, MultiDegree(1, 1): -1})
    return exact_divide_height_zero(num, 1)


def p_tilde_cone(ctx: ConeContext, height_cut: int) -> MultiSeries:
    """Multigraded Poincare series of T^{>=1} of the cone Y_d.

    F (Q~_Y + 2) / ((1 + x^[0,1])(1 + x^[d,1])) - x^[1,1]/(1 + x^[0,1])
    - x^[d-1,1]/(1 + x^[d,1]),  F = sum_v x^[v,1] - x^[d,2].
    """
    d = ctx.d
    N = height_cut
    F = height_one_generators(ctx, N) - MultiSeries.monomial(ctx, (d, 2), N)
    inv0 = expand_inverse_one_plus(ctx, (0, 1), N)
    invd = expand_inverse_one_plus(ctx, (d, 1), N)
    Q = q_tilde_cone(ctx, N) + 2
    P = F * Q * inv0 * invd
    P = P - MultiSeries.monomial(ctx, (1, 1), N) * inv0
    P = P - MultiSeries.monomial(ctx, (d - 1, 1), N) * invd
    if P[MultiDegree(0, 0)] != 0:
        raise IntegrityError("constant term of P~ must vanish", MultiDegree(0, 0))
    return P.assert_nonnegative()


def _binomial_factor(ctx: ConeContext, cut: int, a, b) -> MultiSeries:
    return MultiSeries(ctx, cut, {as_degree(a): 1}) - MultiSeries(ctx, cut, {as_degree(b): 1})


def _run(ctx: ConeContext, cut: int, first: int, last: int, step: int = 1) -> MultiSeries:
    return MultiSeries(ctx, cut, {MultiDegree(v, 1): 1 for v in range(first, last + 1, step)})


def ht2_fat_point_closed_form(ctx: ConeContext) -> MultiSeries:
    """Height-2 part of Q~_{Z_{d-1}}: (X^2 + sum_v x^[2v,2]) / 2, X = sum_v x^[v,1].

    The plus sign reflects odd generators: [z, z] = 2 z^2 survives.
    """
    d = ctx.d
    X = height_one_generators(ctx, 2)
    doubled = X * X + MultiSeries(ctx, 2, {MultiDegree(2 * v, 2): 1 for v in range(1, d)})
    for R, c in doubled.coeffs.items():
        if c % 2:
            raise IntegrityError(f"odd coefficient {c} at x^{R}", R)
    return MultiSeries(ctx, 2, {R: c // 2 for R, c in doubled.coeffs.items()})


def ht3_cone_closed_form(ctx: ConeContext) -> MultiSeries:
    """Height-3 part of P~_{Y_d} as a quotient.

    (x^[d,1] - x^[1,1])(x^[d-1,1] - x^[2,1])(x^[d,1] - x^[2,1])
    / ((x^[1,0] - 1)^2 (x^[2,0] - 1)).
    """
    d = ctx.d
    num = (
        _binomial_factor(ctx, 3, (d, 1), (1, 1))
        * _binomial_factor(ctx, 3, (d - 1, 1), (2, 1))
        * _binomial_factor(ctx, 3, (d, 1), (2, 1))
    )
    out = exact_divide_height_zero(num, 2)
    return exact_divide_by_height_zero_poly(out, [-1, 0, 1])


def ht3_cone_symmetric_form(ctx: ConeContext) -> MultiSeries:
    """(x^[1,1]+..+x^[d-1,1])(x^[2,1]+..+x^[d-2,1])(x^[2,1]+x^[4,1]+..+x^[d-2,1]), d even."""
    d = ctx.d
    if d % 2:
        raise ValueError("the symmetric product form needs even d")
    return _run(ctx, 3, 1, d - 1) * _run(ctx, 3, 2, d - 2) * _run(ctx, 3, 2, d - 2, 2)


def p_cone(d: int, order: int) -> UniSeries:
    """(Q_Y + 2) ((d-1) t - t^2) / (1+t)^2 - 2t / (1+t)."""
    if d < 3:
        raise ValueError(f"d must be >= 3, got {d}")
    N = order
    Q = q_cone(d, N) + 2
    num = UniSeries(N, {1: d - 1, 2: -1})
    first = uni_rational_eval(Q * num, [(one_plus_t(N), 2)], N)
    second = uni_rational_eval(UniSeries(N, {1: 2}), [one_plus_t(N)], N)
    return (first - second).assert_nonnegative()


# ------------------------------------------------------ hyperplane sections


def hyperplane_section_series(P_Y: UniSeries, tau_Y: int, e: int) -> UniSeries:
    """(1 + 1/t) P_Y - tau_Y (t + 1) + e t.

    Valid when f T^n_Y = 0 for n >= 2; that hypothesis is the caller's.  The
    result is known one order below P_Y.
    """
    if P_Y.coeffs.get(0, 0) != 0:
        raise ValueError("P_Y must have zero constant term")
    if P_Y.order >= 1 and P_Y[1] != tau_Y:
        raise ValueError(f"t^1 coefficient of P_Y is {P_Y[1]}, expected tau_Y = {tau_Y}")
    N = P_Y.order - 1
    if N < 0:
        raise ValueError("P_Y must be known at least to order 1")
    P = UniSeries(N, P_Y.coeffs) + P_Y.shift(-1).truncate(N)
    return P - UniSeries(N, {0: tau_Y, 1: tau_Y - e})


def smoothing_component_dim(spec: PartitionCurveSpec) -> int:
    """e_{H,Y} = tau_H - (d-1)(d-3) for the section of the cone Y_d."""
    return spec.tau_H - (spec.d - 1) * (spec.d - 3)


def p_partition_curve(spec: PartitionCurveSpec, order: int) -> UniSeries:
    """((d-1-t)/(1+t)) Q_{Z_{d-1}} + tau_H t - (d-1)^2 t."""
    if order < 1:
        raise ValueError("order must be >= 1")
    m = spec.d - 1
    N = order
    lead = uni_rational_eval(UniSeries(N, {0: m, 1: -1}) * q_fat_point(m, N), [one_plus_t(N)], N)
    P = lead + UniSeries(N, {1: spec.tau_H - m * m})
    if P[1] != spec.tau_H:
        raise IntegrityError(f"t^1 coefficient {P[1]} differs from tau_H = {spec.tau_H}", 1)
    return P.assert_nonnegative()


def p_quotient(spec: QuotientSpec, order: int) -> UniSeries:
    """P_{Y_d} with the linear coefficient 2d-4 replaced by tau = dim T^1."""
    if order < 1:
        raise ValueError("order must be >= 1")
    d = spec.d
    P = p_cone(d, order) + UniSeries(order, {1: spec.tau - (2 * d - 4)})
    if P[1] != spec.tau:
        raise IntegrityError(f"t^1 coefficient {P[1]} differs from tau = {spec.tau}", 1)
    return P.assert_nonnegative()
