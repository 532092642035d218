"""Degree lattice of the cone sigma = cone((1,0), (-1,d)).

A multidegree R = [i, k] is a linear functional on the plane; it takes the
value i on the ray (1,0) and d*k - i on the ray (-1,d).  The height is k.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple


class MultiDegree(NamedTuple):
    i: int
    k: int

    @property
    def ht(self) -> int:
        return self.k

    def __add__(self, other):  # type: ignore[override]
        return MultiDegree(self.i + other[0], self.k + other[1])

    def __sub__(self, other):
        return MultiDegree(self.i - other[0], self.k - other[1])

    def scale(self, c: int) -> "MultiDegree":
        return MultiDegree(c * self.i, c * self.k)

    def __str__(self):
        return f"[{self.i},{self.k}]"


ZERO = MultiDegree(0, 0)


def as_degree(R) -> MultiDegree:
    if isinstance(R, MultiDegree):
        return R
    i, k = R
    return MultiDegree(int(i), int(k))


@dataclass(frozen=True)
class ConeContext:
    """The parameter d >= 3 of the cone over the rational normal curve."""

    d: int

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 3:
            raise ValueError(f"d must be an integer >= 3, got {self.d!r}")

    @property
    def m(self) -> int:
        """Embedding dimension of the associated fat point."""
        return self.d - 1

    def ray_values(self, R) -> tuple[int, int]:
        i, k = R
        return i, self.d * k - i


def in_lambda(ctx: ConeContext, R) -> bool:
    u, v = ctx.ray_values(R)
    return u >= 0 and v >= 0


def in_lambda_plus(ctx: ConeContext, R) -> bool:
    return tuple(R) != (0, 0) and in_lambda(ctx, R)


def in_interior_lambda(ctx: ConeContext, R) -> bool:
    u, v = ctx.ray_values(R)
    return u > 0 and v > 0


def divisors_of_degree(R) -> list[tuple[int, MultiDegree]]:
    """All (k, R/k) with k >= 1 and k*(R/k) = R, by increasing k."""
    i, h = R
    if i == 0 and h == 0:
        raise ValueError("the zero degree has infinitely many divisors")
    g = gcd(i, h)
    return [(k, MultiDegree(i // k, h // k)) for k in range(1, g + 1) if g % k == 0]


def moebius(n: int) -> int:
    if n <= 0:
        raise ValueError(f"moebius is defined for n >= 1, got {n}")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def enumerate_K(ctx: ConeContext, R) -> list[MultiDegree]:
    """Nonzero r in Lambda with R - r strictly positive on sigma minus 0.

    Ordered by (height, first coordinate).
    """
    R1, R2 = R
    d = ctx.d
    out = []
    for b in range(0, R2 + 1):
        for a in range(0, min(d * b, R1 - 1) + 1):
            if a == 0 and b == 0:
                continue
            if R1 - a > 0 and d * (R2 - b) - (R1 - a) > 0:
                out.append(MultiDegree(a, b))
    return out


def lambda_slice(ctx: ConeContext, k: int) -> list[MultiDegree]:
    """Degrees of Lambda at height k, by first coordinate."""
    return [MultiDegree(i, k) for i in range(0, ctx.d * k + 1)]


def lambda_plus_up_to(ctx: ConeContext, max_height: int) -> list[MultiDegree]:
    return [R for k in range(1, max_height + 1) for R in lambda_slice(ctx, k)]
