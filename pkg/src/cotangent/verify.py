"""Formula-versus-oracle checks for the cone over the rational normal curve."""

from __future__ import annotations

from dataclasses import dataclass, field

from cotangent.formulas import (
    fat_point_harrison_dim,
    multigraded_harrison_dim,
    p_cone,
    p_tilde_cone,
    q_tilde_cone,
    t1_dim,
    t2_dim,
)
from cotangent.lattice import (
    ConeContext,
    MultiDegree,
    as_degree,
    in_interior_lambda,
    in_lambda_plus,
    lambda_plus_up_to,
    lambda_slice,
)
from cotangent.oracle import homogeneous_complex, homogeneous_split_dims, toric_complex, toric_T_dim
from cotangent.series import heightize


def euler_rhs(ctx: ConeContext, R, harrison: str = "formula") -> int:
    """sum_{r in int Lambda, R-r in Lambda_+} (-1)^(ht r - 1) h(R-r) + (-1)^(ht R - 1) dim HA^1(K_R).

    h(s) = dim Harr^ht(s)(A_d/C, C)(-s), read from Q~_Y (``harrison="formula"``)
    or from the homogeneous complex V(-s) (``harrison="oracle"``).
    """
    R = as_degree(R)
    if harrison == "formula":
        Q = q_tilde_cone(ctx, max(R.k, 1))

        def h(s):
            return Q[s]
    elif harrison == "oracle":
        def h(s):
            return homogeneous_split_dims(ctx, s, s.k)
    else:
        raise ValueError(f"unknown harrison source {harrison!r}")
    total = 0
    for b in range(1, R.k):
        for a in range(1, ctx.d * b):
            r = MultiDegree(a, b)
            s = R - r
            if in_interior_lambda(ctx, r) and in_lambda_plus(ctx, s):
                total += (-1) ** (b - 1) * h(s)
    return total + (-1) ** (R.k - 1) * toric_complex(ctx, R).HA(1)


@dataclass
class Check:
    name: str
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got


@dataclass
class DegreeReport:
    R: MultiDegree
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        parts = []
        for c in self.checks:
            mark = "" if c.ok else "!"
            parts.append(f"{mark}{c.name}={c.got}" + ("" if c.ok else f"(want {c.expected})"))
        return f"{status} R={self.R} " + " ".join(parts)


def verify_degree(ctx: ConeContext, R, P=None, max_n: int | None = None) -> DegreeReport:
    """All checks at one multidegree R in Lambda_+."""
    R = as_degree(R)
    h = R.k
    if P is None:
        P = p_tilde_cone(ctx, h)
    max_n = max_n if max_n is not None else h + 1
    rep = DegreeReport(R)
    formula = P[R]
    if h == 1:
        rep.checks.append(Check("T1[table]", t1_dim(ctx, R), formula))
    elif h == 2:
        rep.checks.append(Check("T2[table]", t2_dim(ctx, R), formula))
    if h >= 2:
        rep.checks.append(Check(f"T{h}[oracle]", formula, toric_T_dim(ctx, R, h)))
    off = [n for n in range(2, max_n + 1) if n != h]
    if off:
        rep.checks.append(Check("vanish", 0, sum(abs(toric_T_dim(ctx, R, n)) for n in off)))
    rhs = euler_rhs(ctx, R)
    rep.checks.append(Check("euler", formula if h >= 3 else 0, rhs))
    Q = q_tilde_cone(ctx, h)
    hom = [homogeneous_split_dims(ctx, R, n) for n in range(1, h + 1)]
    rep.checks.append(Check("split", [Q[R] if n == h else 0 for n in range(1, h + 1)], hom))
    sanity = {**toric_complex(ctx, R).sanity(), **homogeneous_complex(ctx, R).sanity()}
    rep.checks.append(Check("dd=0,inv", True, all(sanity.values())))
    return rep


def verify_cone(d: int, max_height: int):
    """Per-degree reports for every R in Lambda_+ with ht(R) <= max_height, plus global checks."""
    ctx = ConeContext(d)
    P = p_tilde_cone(ctx, max_height)
    reports = [verify_degree(ctx, R, P, max_n=max_height + 1) for R in lambda_plus_up_to(ctx, max_height)]
    glob = [
        Check("heightize(P~) = P_Y", p_cone(d, max_height), heightize(P)),
    ]
    for n in range(1, max_height + 1):
        total = sum(multigraded_harrison_dim(ctx, R) for R in lambda_slice(ctx, n))
        glob.append(Check(f"sum c_R (ht {n}) = c_{n}", fat_point_harrison_dim(d - 1, n), total))
    return reports, glob
