"""Brute-force Harrison-type cohomology by explicit cochain complexes over Q.

Cochains are functions on finite sets of tuples.  A cochain is shuffle
invariant when it vanishes on every sh(t) = sum_p sh_{p,n-p}(t); the invariant
subspace is realised by an explicit null-space basis and cohomology is
dim C^n - rank(d_n) - rank(d_{n-1}) with d restricted to that basis.

Three complexes are built here:

* the reduced Harrison complex of the fat point A = C + V with values in A
  (and its Hochschild companion, without the shuffle condition),
* the toric complex C(K_R) with the inhomogeneous differential, whose
  cohomology HA(K_R) gives T^n(-R) of the cone over the rational normal curve,
* its homogeneous part V(-r), the reduced Harrison complex of C[Lambda] in
  degree -r.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, product
from typing import Callable, Hashable, Sequence

from cotangent.lattice import (
    ConeContext,
    MultiDegree,
    as_degree,
    enumerate_K,
    in_lambda,
    in_lambda_plus,
)
from cotangent.linalg import (
    RationalMatrix,
    apply_columns,
    nullspace,
    rank_of_vectors,
    transpose,
)

# ------------------------------------------------------------------ shuffles


def _sign(perm: Sequence[int]) -> int:
    inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def shuffles(p: int, q: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All (p,q)-shuffles with their signs.

    A shuffle is a 0-based tuple sigma with sigma[0] < ... < sigma[p-1] and
    sigma[p] < ... < sigma[p+q-1]; entry i of a tuple moves to slot sigma[i].
    """
    n = p + q
    out = []
    for first in combinations(range(n), p):
        rest = [j for j in range(n) if j not in first]
        perm = tuple(first) + tuple(rest)
        out.append((perm, _sign(perm)))
    return tuple(out)


def shuffle_sum(t: tuple) -> dict:
    """sh(t) = sum_{p=1}^{n-1} sh_{p,n-p}(t) as {tuple: integer coefficient}."""
    n = len(t)
    out: dict = defaultdict(int)
    for p in range(1, n):
        for perm, sgn in shuffles(p, n - p):
            moved = [None] * n
            for i, j in enumerate(perm):
                moved[j] = t[i]
            out[tuple(moved)] += sgn
    return {k: v for k, v in out.items() if v}


def _distinct_permutations(content: tuple) -> list[tuple]:
    if not content:
        return [()]
    out = []
    for x in sorted(set(content)):
        rest = list(content)
        rest.remove(x)
        out.extend((x,) + tail for tail in _distinct_permutations(tuple(rest)))
    return out


@lru_cache(maxsize=None)
def _block_rank(multiplicities: tuple[int, ...]) -> tuple[int, int]:
    # words with letter j repeated multiplicities[j] times; relabelling letters
    # is an isomorphism, so the rank depends on the multiplicity pattern only
    content = tuple(j for j, k in enumerate(multiplicities) for _ in range(k))
    words = _distinct_permutations(content)
    return len(words), rank_of_vectors(shuffle_sum(w) for w in words)


def _contents(m: int, n: int):
    """Multiplicity vectors (k_0..k_{m-1}) with sum n."""
    if m == 1:
        yield (n,)
        return
    for k in range(n + 1):
        for rest in _contents(m - 1, n - k):
            yield (k,) + rest


def _weight_filter(weights, R):
    if R is None:
        return lambda mult: True
    R = as_degree(R)
    weights = [as_degree(w) for w in weights]

    def keep(mult):
        i = sum(k * w.i for k, w in zip(mult, weights))
        h = sum(k * w.k for k, w in zip(mult, weights))
        return (i, h) == tuple(R)

    return keep


def default_weights(m: int) -> list[MultiDegree]:
    """Generators z_1..z_m of degrees [1,1]..[m,1]."""
    return [MultiDegree(v, 1) for v in range(1, m + 1)]


def _shuffle_blocks(m, n, weights, R):
    if R is not None and weights is None:
        weights = default_weights(m)
    keep = _weight_filter(weights, R)
    for mult in _contents(m, n):
        if keep(mult):
            yield _block_rank(tuple(sorted(mult, reverse=True)))


def shuffle_operator_rank(m: int, n: int, weights=None, R=None) -> int:
    """Rank of sh on V^(x)n, dim V = m, optionally on the weight-R subspace."""
    return sum(r for _, r in _shuffle_blocks(m, n, weights, R))


def shuffle_harrison_dim(m: int, n: int, weights=None, R=None) -> int:
    """dim Harr^n(C+V/C, C)(-R) = dim of the (weight) subspace minus the rank of sh."""
    return sum(size - r for size, r in _shuffle_blocks(m, n, weights, R))


# ------------------------------------------------------- generic complexes


Key = Hashable


@dataclass
class ShuffleComplex:
    """Cochains on ``levels[n]`` (lists of keys), cut down by shuffle relations.

    ``tuple_of(key)`` gives the argument tuple a key evaluates on and
    ``retuple(key, t)`` rebuilds a key with the tuple replaced; the shuffle
    relation of a key permutes its tuple only.  ``rows(n)`` returns the
    differential C^n -> C^{n+1} as {target key: {source key: coeff}}.
    """

    levels: dict
    rows: Callable[[int], dict]
    tuple_of: Callable[[Key], tuple] = lambda key: key
    retuple: Callable[[Key, tuple], Key] = lambda key, t: t
    shuffle_invariant: bool = True
    _cache: dict = field(default_factory=dict, repr=False)

    def keys(self, n: int) -> list:
        return self.levels.get(n, [])

    def relations(self, n: int) -> list[dict]:
        """One relation sh(t) per orbit representative, as {key: coeff}."""
        if not self.shuffle_invariant:
            return []
        seen = set()
        out = []
        keyset = set(self.keys(n))
        for key in self.keys(n):
            t = self.tuple_of(key)
            rel = {self.retuple(key, u): c for u, c in shuffle_sum(t).items()}
            frozen = frozenset(rel.items())
            if not rel or frozen in seen:
                continue
            seen.add(frozen)
            missing = [k for k in rel if k not in keyset]
            assert not missing, f"shuffle of {key} leaves the admissible set: {missing[0]}"
            out.append(rel)
        return out

    def _orbits(self, n: int) -> dict:
        groups: dict = defaultdict(list)
        for key in self.keys(n):
            t = self.tuple_of(key)
            groups[self.retuple(key, tuple(sorted(t)))].append(key)
        return groups

    def basis(self, n: int) -> list[dict]:
        """Basis of the shuffle-invariant cochains at level n."""
        if ("basis", n) in self._cache:
            return self._cache[("basis", n)]
        if not self.shuffle_invariant:
            out = [{key: 1} for key in self.keys(n)]
        else:
            out = []
            for _, keys in sorted(self._orbits(n).items(), key=lambda kv: repr(kv[0])):
                t0 = self.tuple_of(keys[0])
                rels = [
                    {self.retuple(k, u): c for u, c in shuffle_sum(self.tuple_of(k)).items()}
                    for k in keys
                ] if len(t0) > 1 else []
                out.extend(nullspace(rels, keys))
        self._cache[("basis", n)] = out
        return out

    def dim(self, n: int) -> int:
        return len(self.basis(n))

    def columns(self, n: int) -> dict:
        if ("cols", n) not in self._cache:
            self._cache[("cols", n)] = transpose(self.rows(n))
        return self._cache[("cols", n)]

    def image(self, n: int) -> list[dict]:
        """d_n applied to the invariant basis of level n."""
        if ("image", n) not in self._cache:
            cols = self.columns(n)
            self._cache[("image", n)] = [apply_columns(cols, b) for b in self.basis(n)]
        return self._cache[("image", n)]

    def rank_d(self, n: int) -> int:
        if n < min(self.levels, default=0) or not self.keys(n):
            return 0
        if ("rank", n) not in self._cache:
            self._cache[("rank", n)] = rank_of_vectors(self.image(n))
        return self._cache[("rank", n)]

    def cohomology(self, n: int) -> int:
        return self.dim(n) - self.rank_d(n) - self.rank_d(n - 1)

    def differential_matrix(self, n: int) -> RationalMatrix:
        """Full differential C^n -> C^{n+1} (before restriction), rows = level n+1."""
        src = {k: j for j, k in enumerate(self.keys(n))}
        tgt = {k: j for j, k in enumerate(self.keys(n + 1))}
        entries = {}
        for t, row in self.rows(n).items():
            for s, c in row.items():
                entries[(tgt[t], src[s])] = c
        return RationalMatrix(len(tgt), len(src), entries)

    def relation_matrix(self, n: int) -> RationalMatrix:
        idx = {k: j for j, k in enumerate(self.keys(n))}
        rels = self.relations(n)
        return RationalMatrix(len(rels), len(idx), {(r, idx[k]): c for r, rel in enumerate(rels) for k, c in rel.items()})

    def d_squared_vanishes(self, n: int) -> bool:
        """d_{n+1} o d_n = 0 on all cochains of level n (invariant or not)."""
        first = self.columns(n)
        second = self.columns(n + 1)
        for key in self.keys(n):
            if apply_columns(second, apply_columns(first, {key: 1})):
                return False
        return True

    def preserves_invariants(self, n: int) -> bool:
        """d_n maps invariant cochains into invariant cochains of level n+1."""
        if not self.shuffle_invariant:
            return True
        rels = self.relations(n + 1)
        for vec in self.image(n):
            for rel in rels:
                if sum(c * vec.get(k, 0) for k, c in rel.items()) != 0:
                    return False
        return True

    def invariants_are_annihilated(self, n: int) -> bool:
        """Every basis vector vanishes on every relation (sanity of the null space)."""
        rels = self.relations(n)
        return all(
            sum(c * b.get(k, 0) for k, c in rel.items()) == 0 for b in self.basis(n) for rel in rels
        )


def _tuple_order(t):
    return tuple((x[1], x[0]) if isinstance(x, tuple) else x for x in t)


# ------------------------------------------------------------- fat point


def _fat_point_complex(m: int, n_max: int, shuffle_invariant: bool) -> ShuffleComplex:
    # keys (word, j): word in range(m)^n, j = 0 for the unit of A and v+1 for z_v
    levels = {
        n: [(w, j) for w in product(range(m), repeat=n) for j in range(m + 1)]
        for n in range(0, n_max + 2)
    }

    def rows(n):
        # (df)(a_0..a_n) = a_0 f(a_1..a_n) + (-1)^(n+1) a_n f(a_0..a_{n-1});
        # V^2 = 0, so only the unit component of f survives, landing in z_{a_0} / z_{a_n}
        out = {}
        for w in product(range(m), repeat=n + 1):
            for j in range(1, m + 1):
                row: dict = defaultdict(int)
                if w[0] + 1 == j:
                    row[(w[1:], 0)] += 1
                if w[-1] + 1 == j:
                    row[(w[:-1], 0)] += (-1) ** (n + 1)
                row = {k: c for k, c in row.items() if c}
                if row:
                    out[(w, j)] = row
        return out

    return ShuffleComplex(
        levels=levels,
        rows=rows,
        tuple_of=lambda key: key[0],
        retuple=lambda key, t: (t, key[1]),
        shuffle_invariant=shuffle_invariant,
    )


@lru_cache(maxsize=None)
def fat_point_module_complex(m: int, n_max: int) -> ShuffleComplex:
    """Reduced Harrison complex Hom_sh(V^(x)n, A) of A = C + V, levels 0..n_max+1."""
    return _fat_point_complex(m, n_max, True)


@lru_cache(maxsize=None)
def fat_point_hochschild_complex(m: int, n_max: int) -> ShuffleComplex:
    return _fat_point_complex(m, n_max, False)


def fat_point_harrison_A_dims(m: int, n_max: int) -> list[int]:
    """dim Harr^n(A/C, A) for n = 1..n_max, from the explicit complex.

    Checked against the quotient description dim = m c_n - c_{n-1} (with the
    convention c_0 = 0, since delta vanishes on the constants) where c_n is
    read off the shuffle rank, so both routes stay inside the oracle.
    """
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    cx = fat_point_module_complex(m, n_max)
    direct = [cx.cohomology(n) for n in range(1, n_max + 1)]
    c = [0] + [shuffle_harrison_dim(m, n) for n in range(1, n_max + 1)]
    quotient = [m * c[n] - c[n - 1] for n in range(1, n_max + 1)]
    if direct != quotient:
        raise AssertionError(f"Harr(A,A) routes disagree for m={m}: {direct} vs {quotient}")
    return direct


def fat_point_hochschild_A_dims(m: int, n_max: int) -> list[int]:
    """dim HH^n(A/C, A) for n = 1..n_max from the explicit complex."""
    cx = fat_point_hochschild_complex(m, n_max)
    return [cx.cohomology(n) for n in range(1, n_max + 1)]


# ------------------------------------------------------------ toric side


def _compose_levels(first: list, admissible: Callable[[MultiDegree], bool], n_max: int) -> dict:
    """Tuples over ``first`` whose running sums all pass ``admissible``."""
    levels = {1: [(x,) for x in first if admissible(x)]}
    sums = {t: t[0] for t in levels[1]}
    for n in range(2, n_max + 1):
        nxt = []
        for t in levels[n - 1]:
            s = sums[t]
            for x in first:
                u = s + x
                if admissible(u):
                    nt = t + (x,)
                    sums[nt] = u
                    nxt.append(nt)
        if not nxt:
            break
        levels[n] = sorted(nxt, key=_tuple_order)
    return levels


@dataclass
class ToricComplex:
    """C(K_R) with the inhomogeneous Hochschild differential."""

    ctx: ConeContext
    R: MultiDegree

    @cached_property
    def K(self) -> list[MultiDegree]:
        return enumerate_K(self.ctx, self.R)

    @cached_property
    def complex(self) -> ShuffleComplex:
        K = self.K
        Kset = set(K)
        # heights add, so C^n = 0 for n >= ht(R)
        levels = _compose_levels(K, Kset.__contains__, max(self.R.k - 1, 0)) if K else {}

        def rows(n):
            out = {}
            src = set(levels.get(n, []))
            for lam in levels.get(n + 1, []):
                row: dict = defaultdict(int)
                terms = [(lam[1:], 1)]
                for v in range(1, n + 1):
                    merged = lam[: v - 1] + (lam[v - 1] + lam[v],) + lam[v + 1:]
                    terms.append((merged, (-1) ** v))
                terms.append((lam[:-1], (-1) ** (n + 1)))
                for t, c in terms:
                    if not t:
                        continue  # C^0(K) = 0: the empty tuple sums to 0, not in K
                    assert t in src, f"face {t} of {lam} is not admissible"
                    row[t] += c
                row = {k: c for k, c in row.items() if c}
                if row:
                    out[lam] = row
            return out

        return ShuffleComplex(levels=levels, rows=rows)

    @property
    def top(self) -> int:
        return max(self.complex.levels, default=0)

    def HA(self, n: int) -> int:
        if n < 1 or n not in self.complex.levels:
            return 0
        return self.complex.cohomology(n)

    def span_dim(self) -> int:
        return rank_of_vectors({0: r.i, 1: r.k} for r in self.K)

    def sanity(self) -> dict:
        """d o d = 0 and preservation of the invariant subspace at every level."""
        cx = self.complex
        levels = sorted(cx.levels)
        return {
            "d_squared": all(cx.d_squared_vanishes(n) for n in levels),
            "preserves": all(cx.preserves_invariants(n) for n in levels),
            "annihilated": all(cx.invariants_are_annihilated(n) for n in levels),
        }


@lru_cache(maxsize=None)
def toric_complex(ctx: ConeContext, R) -> ToricComplex:
    return ToricComplex(ctx, as_degree(R))


def toric_T_dim(ctx: ConeContext, R, n: int) -> int:
    """dim T^n(-R) of the cone: HA^{n-1}(K_R) for n >= 3, HA^1 - dim span K_R for n = 2."""
    if n <= 1:
        raise ValueError("toric_T_dim needs n >= 2; T^0 and T^1 come from the closed tables")
    tc = toric_complex(ctx, as_degree(R))
    if n == 2:
        return tc.HA(1) - tc.span_dim()
    return tc.HA(n - 1)


@dataclass
class ToricComplexSlice:
    ctx: ConeContext
    R: MultiDegree
    n: int
    basis: list
    shuffle_relations: RationalMatrix
    invariant_basis: list
    differential: RationalMatrix

    def to_json_obj(self) -> dict:
        return {
            "d": self.ctx.d,
            "R": list(self.R),
            "n": self.n,
            "basis": [[list(x) for x in t] for t in self.basis],
            "shuffle_relations": self.shuffle_relations.to_json_obj(),
            "differential": self.differential.to_json_obj(),
            "invariant_dim": len(self.invariant_basis),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))


def build_toric_complex(ctx: ConeContext, R, n: int) -> ToricComplexSlice:
    """Level n of C(K_R): admissible tuples, relations, invariant basis, d_n."""
    R = as_degree(R)
    cx = toric_complex(ctx, R).complex
    return ToricComplexSlice(
        ctx=ctx,
        R=R,
        n=n,
        basis=list(cx.keys(n)),
        shuffle_relations=cx.relation_matrix(n),
        invariant_basis=cx.basis(n),
        differential=cx.differential_matrix(n),
    )


# ------------------------------------------------- homogeneous splitting


@dataclass
class HomogeneousComplex:
    """V(-r): shuffle-invariant functions on tuples in Lambda_+ summing to r, with d'."""

    ctx: ConeContext
    r: MultiDegree

    @cached_property
    def complex(self) -> ShuffleComplex:
        ctx, r = self.ctx, self.r
        parts = [
            MultiDegree(a, b)
            for b in range(1, r.k + 1)
            for a in range(0, ctx.d * b + 1)
            if in_lambda(ctx, r - MultiDegree(a, b))
        ]

        def admissible(s):
            return in_lambda(ctx, r - s)

        raw = _compose_levels(parts, admissible, r.k) if in_lambda_plus(ctx, r) else {}
        levels = {n: [t for t in ts if sum(t, MultiDegree(0, 0)) == r] for n, ts in raw.items()}
        levels = {n: ts for n, ts in levels.items() if ts}

        def rows(n):
            out = {}
            src = set(levels.get(n, []))
            for lam in levels.get(n + 1, []):
                row: dict = defaultdict(int)
                for v in range(1, n + 1):
                    merged = lam[: v - 1] + (lam[v - 1] + lam[v],) + lam[v + 1:]
                    assert merged in src
                    row[merged] += (-1) ** v
                row = {k: c for k, c in row.items() if c}
                if row:
                    out[lam] = row
            return out

        return ShuffleComplex(levels=levels, rows=rows)

    def cohomology(self, n: int) -> int:
        if n not in self.complex.levels:
            return 0
        return self.complex.cohomology(n)

    def sanity(self) -> dict:
        cx = self.complex
        levels = sorted(cx.levels)
        return {
            "d_squared": all(cx.d_squared_vanishes(n) for n in levels),
            "preserves": all(cx.preserves_invariants(n) for n in levels),
            "annihilated": all(cx.invariants_are_annihilated(n) for n in levels),
        }


@lru_cache(maxsize=None)
def homogeneous_complex(ctx: ConeContext, r) -> HomogeneousComplex:
    return HomogeneousComplex(ctx, as_degree(r))


def homogeneous_split_dims(ctx: ConeContext, r, n: int) -> int:
    """dim H^n(V(-r)) = dim Harr^n(A_d/C, C)(-r)."""
    return homogeneous_complex(ctx, as_degree(r)).cohomology(n)
