"""Truncated power series in t and in the semigroup ring of Lambda.

Multigraded series are truncated by height only; every height slice of
Lambda is finite, so truncated objects are finite dictionaries.  Factors of
height zero, (x^[1,0] - 1) and friends, never get expanded geometrically:
they are removed by exact division slice by slice.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from cotangent.lattice import ConeContext, MultiDegree, as_degree, in_lambda


class IntegrityError(ArithmeticError):
    """An exactness guarantee failed: non-integral, negative or nonzero remainder.

    ``degree`` names the offending exponent when there is one.
    """

    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


def _clean(coeffs: Mapping) -> dict:
    return {k: v for k, v in coeffs.items() if v != 0}


@dataclass(frozen=True, eq=False)
class UniSeries:
    order: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be >= 0")
        cleaned = {}
        for n, c in self.coeffs.items():
            if n < 0:
                raise ValueError(f"negative exponent {n}")
            if n <= self.order and c != 0:
                cleaned[int(n)] = c
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def from_list(cls, coeffs: Iterable, order: int | None = None) -> "UniSeries":
        coeffs = list(coeffs)
        if order is None:
            order = max(len(coeffs) - 1, 0)
        return cls(order, {n: c for n, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, n: int, order: int, c=1) -> "UniSeries":
        return cls(order, {n: c})

    def __getitem__(self, n: int):
        if n > self.order:
            raise IndexError(f"exponent {n} beyond truncation order {self.order}")
        return self.coeffs.get(n, 0)

    def to_list(self) -> list:
        return [self.coeffs.get(n, 0) for n in range(self.order + 1)]

    def truncate(self, order: int) -> "UniSeries":
        return UniSeries(min(order, self.order), self.coeffs)

    def _coerce(self, other) -> "UniSeries":
        if isinstance(other, UniSeries):
            return other
        return UniSeries(self.order, {0: other})

    def __eq__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        out = defaultdict(int, {n: c for n, c in self.coeffs.items() if n <= order})
        for n, c in other.coeffs.items():
            if n <= order:
                out[n] += c
        return UniSeries(order, out)

    __radd__ = __add__

    def __neg__(self):
        return UniSeries(self.order, {n: -c for n, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniSeries):
            return UniSeries(self.order, {n: c * other for n, c in self.coeffs.items()})
        order = min(self.order, other.order)
        out = defaultdict(int)
        for n1, c1 in self.coeffs.items():
            for n2, c2 in other.coeffs.items():
                if n1 + n2 <= order:
                    out[n1 + n2] += c1 * c2
        return UniSeries(order, out)

    __rmul__ = __mul__

    def shift(self, s: int) -> "UniSeries":
        """Multiply by t**s; negative s divides and requires the low terms to vanish."""
        if s < 0 and any(n < -s for n in self.coeffs):
            raise ValueError(f"cannot divide by t^{-s}: low order terms present")
        return UniSeries(max(self.order + s, 0), {n + s: c for n, c in self.coeffs.items()})

    def inverse(self, order: int | None = None) -> "UniSeries":
        """1/self as a truncated series; the constant term must be nonzero."""
        order = self.order if order is None else order
        c0 = self.coeffs.get(0, 0)
        if c0 == 0:
            raise ValueError("denominator has zero constant term")
        inv = [Fraction(0)] * (order + 1)
        inv[0] = Fraction(1, 1) / c0
        for n in range(1, order + 1):
            acc = sum(self.coeffs.get(j, 0) * inv[n - j] for j in range(1, n + 1))
            inv[n] = -acc / c0
        return UniSeries(order, dict(enumerate(inv)))

    def integral(self) -> "UniSeries":
        """Coerce Fraction coefficients to int, raising if any is non-integral."""
        out = {}
        for n, c in self.coeffs.items():
            c = Fraction(c)
            if c.denominator != 1:
                raise IntegrityError(f"non-integral coefficient {c} at t^{n}", n)
            out[n] = int(c)
        return UniSeries(self.order, out)

    def assert_nonnegative(self) -> "UniSeries":
        for n, c in sorted(self.coeffs.items()):
            if c < 0:
                raise IntegrityError(f"negative coefficient {c} at t^{n}", n)
        return self

    def to_json_obj(self, d: int | None = None) -> dict:
        return {
            "kind": "uni",
            "d": d,
            "cut": self.order,
            "terms": [{"deg": n, "c": int(c)} for n, c in sorted(self.coeffs.items())],
        }

    def __repr__(self):
        if not self.coeffs:
            return f"UniSeries(0 + O(t^{self.order + 1}))"
        body = " + ".join(f"{c}*t^{n}" for n, c in sorted(self.coeffs.items()))
        return f"UniSeries({body} + O(t^{self.order + 1}))"


def uni_rational_eval(numerator: UniSeries, denominator_factors, order: int) -> UniSeries:
    """Expand numerator / prod(denominator_factors) up to t^order.

    Each factor may be a UniSeries or a (UniSeries, power) pair.
    """
    num = UniSeries(order, numerator.coeffs)
    result = num
    for factor in denominator_factors:
        power = 1
        if isinstance(factor, tuple):
            factor, power = factor
        inv = UniSeries(order, factor.coeffs).inverse(order)
        for _ in range(power):
            result = result * inv
    return result.integral()


def one_plus_t(order: int) -> UniSeries:
    return UniSeries(order, {0: 1, 1: 1})


@dataclass(frozen=True, eq=False)
class MultiSeries:
    """Sum of c_R x^R over R in Lambda with ht(R) <= height_cut."""

    ctx: ConeContext
    height_cut: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.height_cut < 0:
            raise ValueError("height_cut must be >= 0")
        cleaned = {}
        for R, c in self.coeffs.items():
            R = as_degree(R)
            if R.k > self.height_cut or c == 0:
                continue
            if not in_lambda(self.ctx, R):
                raise ValueError(f"degree {R} is outside Lambda for d={self.ctx.d}")
            cleaned[R] = c
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def monomial(cls, ctx: ConeContext, R, height_cut: int, c=1) -> "MultiSeries":
        return cls(ctx, height_cut, {as_degree(R): c})

    @classmethod
    def one(cls, ctx: ConeContext, height_cut: int) -> "MultiSeries":
        return cls(ctx, height_cut, {MultiDegree(0, 0): 1})

    def __getitem__(self, R):
        return self.coeffs.get(as_degree(R), 0)

    def slice(self, k: int) -> dict:
        """The height-k part as {first coordinate: coefficient}."""
        return {R.i: c for R, c in self.coeffs.items() if R.k == k}

    def slice_series(self, k: int) -> "MultiSeries":
        return MultiSeries(self.ctx, self.height_cut, {R: c for R, c in self.coeffs.items() if R.k == k})

    def truncate(self, height_cut: int) -> "MultiSeries":
        return MultiSeries(self.ctx, min(height_cut, self.height_cut), self.coeffs)

    def _check(self, other: "MultiSeries"):
        if not isinstance(other, MultiSeries):
            raise TypeError(f"expected MultiSeries, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ValueError(f"mismatched cone contexts d={self.ctx.d} and d={other.ctx.d}")

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (self.ctx, self.height_cut, self.coeffs) == (other.ctx, other.height_cut, other.coeffs)

    def __add__(self, other):
        if not isinstance(other, MultiSeries):
            other = MultiSeries.one(self.ctx, self.height_cut) * other
        self._check(other)
        cut = min(self.height_cut, other.height_cut)
        out = defaultdict(int)
        for src in (self.coeffs, other.coeffs):
            for R, c in src.items():
                if R.k <= cut:
                    out[R] += c
        return MultiSeries(self.ctx, cut, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiSeries(self.ctx, self.height_cut, {R: -c for R, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            return MultiSeries(self.ctx, self.height_cut, {R: c * other for R, c in self.coeffs.items()})
        self._check(other)
        cut = min(self.height_cut, other.height_cut)
        out = defaultdict(int)
        for R1, c1 in self.coeffs.items():
            for R2, c2 in other.coeffs.items():
                if R1.k + R2.k <= cut:
                    out[R1 + R2] += c1 * c2
        return MultiSeries(self.ctx, cut, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = MultiSeries.one(self.ctx, self.height_cut)
        for _ in range(e):
            result = result * self
        return result

    def assert_nonnegative(self) -> "MultiSeries":
        for R, c in sorted(self.coeffs.items(), key=lambda rc: (rc[0].k, rc[0].i)):
            if c < 0:
                raise IntegrityError(f"negative coefficient {c} at x^{R}", R)
        return self

    def terms(self) -> list[tuple[MultiDegree, int]]:
        return sorted(self.coeffs.items(), key=lambda rc: (rc[0].k, rc[0].i))

    def to_json_obj(self) -> dict:
        return {
            "kind": "multi",
            "d": self.ctx.d,
            "cut": self.height_cut,
            "terms": [{"deg": [R.i, R.k], "c": int(c)} for R, c in self.terms()],
        }

    def __repr__(self):
        body = " + ".join(f"{c}*x^{R}" for R, c in self.terms()) or "0"
        return f"MultiSeries(d={self.ctx.d}, {body}, cut={self.height_cut})"


def multi_add(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    return a + b


def multi_mul(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    return a * b


def expand_inverse_one_plus(ctx: ConeContext, R, height_cut: int) -> MultiSeries:
    """Geometric expansion of 1/(1 + x^R), truncated at height_cut."""
    R = as_degree(R)
    if R.k < 1:
        raise ValueError(f"1/(1+x^{R}) is not height graded; need ht(R) >= 1")
    if not in_lambda(ctx, R):
        raise ValueError(f"degree {R} is outside Lambda")
    coeffs = {R.scale(j): (-1) ** j for j in range(height_cut // R.k + 1)}
    return MultiSeries(ctx, height_cut, coeffs)


def _divide_poly(p: dict, divisor: list[int]) -> tuple[dict, dict]:
    """Exact long division of a Laurent-free polynomial {exp: c} by divisor (list, lowest first).

    The divisor's leading coefficient must be +-1.
    """
    deg = len(divisor) - 1
    lead = divisor[-1]
    assert lead in (1, -1), "divisor must be monic up to sign"
    rem = dict(p)
    quot = {}
    while rem:
        top = max(rem)
        if top < deg:
            break
        c = rem[top] * lead
        shift = top - deg
        quot[shift] = c
        for j, dc in enumerate(divisor):
            e = shift + j
            v = rem.get(e, 0) - c * dc
            if v:
                rem[e] = v
            else:
                rem.pop(e, None)
    return quot, rem


def exact_divide_by_height_zero_poly(numerator: MultiSeries, divisor: list[int]) -> MultiSeries:
    """Divide every height slice by the polynomial sum_j divisor[j] * x^[j,0].

    Raises IntegrityError if any slice leaves a remainder.
    """
    out = {}
    for k in range(numerator.height_cut + 1):
        sl = numerator.slice(k)
        if not sl:
            continue
        quot, rem = _divide_poly(sl, divisor)
        if rem:
            bad = min(rem)
            raise IntegrityError(
                f"height-{k} slice not divisible by {divisor}; remainder at x^[{bad},{k}]",
                MultiDegree(bad, k),
            )
        for i, c in quot.items():
            out[MultiDegree(i, k)] = c
    return MultiSeries(numerator.ctx, numerator.height_cut, out)


def exact_divide_height_zero(numerator: MultiSeries, j: int) -> MultiSeries:
    """numerator / (x^[1,0] - 1)^j, exact in every height slice."""
    if j < 1:
        raise ValueError("j must be a positive integer")
    out = numerator
    for _ in range(j):
        out = exact_divide_by_height_zero_poly(out, [-1, 1])
    return out


def heightize(s: MultiSeries) -> UniSeries:
    """Substitute x^R -> t^ht(R)."""
    out = defaultdict(int)
    for R, c in s.coeffs.items():
        out[R.k] += c
    return UniSeries(s.height_cut, out)


def dumps(series, d: int | None = None) -> str:
    """Canonical JSON (sorted keys, terms by height then first coordinate)."""
    if isinstance(series, MultiSeries):
        obj = series.to_json_obj()
    else:
        obj = series.to_json_obj(d)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def loads(text: str):
    obj = json.loads(text)
    if obj["kind"] == "multi":
        ctx = ConeContext(obj["d"])
        return MultiSeries(ctx, obj["cut"], {MultiDegree(*t["deg"]): t["c"] for t in obj["terms"]})
    if obj["kind"] == "uni":
        return UniSeries(obj["cut"], {t["deg"]: t["c"] for t in obj["terms"]})
    raise ValueError(f"unknown series kind {obj['kind']!r}")
