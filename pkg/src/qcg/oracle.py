"""Brute-force reference computations.

Nothing here uses paths, crystals or fermionic sums: classical characters
come from Freudenthal's recursion, tensor products from multiplying weight
tables, and the affine graded branching from Freudenthal's recursion for
the integrable highest-weight modules of C2^(1).
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    POSITIVE_ROOTS,
    RHO,
    ROOTS,
    ZERO,
    Weight,
    inner,
    to_dominant,
    weyl_dim,
    weyl_orbit,
)

CharacterTable = dict  # Weight -> int

DUAL_COXETER = 3
RANK = 2
MAX_AFFINE_DEPTH = 6


def _norm(w: Weight) -> Fraction:
    return inner(w, w)


@lru_cache(maxsize=None)
def dominant_character(lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of V(lam), by Freudenthal."""
    if not lam.dominant:
        raise ValueError(f"{lam} is not dominant")
    # dominant mu <= lam: mu = lam - k1 alpha1 - k2 alpha2
    candidates = []
    for k1 in range(lam.level + 1):
        for k2 in range(lam.m1 // 2 + lam.m2 + 1):
            mu = Weight(lam.m1 - 2 * k1 + 2 * k2, lam.m2 + k1 - 2 * k2)
            if mu.dominant:
                candidates.append((k1 + k2, mu))
    candidates.sort()
    top = _norm(lam + RHO)
    mult: dict[Weight, int] = {}

    def lookup(w: Weight) -> int:
        return mult.get(to_dominant(w)[0], 0)

    for height, mu in candidates:
        if height == 0:
            mult[mu] = 1
            continue
        rhs = Fraction(0)
        for alpha in POSITIVE_ROOTS:
            j = 1
            while True:
                nu = mu + alpha * j
                m = lookup(nu)
                if m == 0 and _norm(nu) > _norm(lam):
                    break
                rhs += inner(nu, alpha) * m
                j += 1
        value = 2 * rhs / (top - _norm(mu + RHO))
        assert value.denominator == 1 and value >= 0, (lam, mu, value)
        if value:
            mult[mu] = int(value)
    return mult


def irrep_character(lam: Weight) -> CharacterTable:
    table = {}
    for mu, m in dominant_character(lam).items():
        for w in weyl_orbit(mu):
            table[w] = m
    assert sum(table.values()) == weyl_dim(lam)
    return table


def multiply(x: CharacterTable, y: CharacterTable) -> CharacterTable:
    out: Counter = Counter()
    for w1, m1 in x.items():
        for w2, m2 in y.items():
            out[w1 + w2] += m1 * m2
    return dict(out)


def _rho_height(w: Weight) -> Fraction:
    return inner(w, RHO)


def decompose(table: CharacterTable) -> dict[Weight, int]:
    """Split a Weyl-invariant character into irreducibles by peeling off the
    highest dominant weight. Only dominant entries of ``table`` are read."""
    rest = Counter({w: m for w, m in table.items() if w.dominant and m})
    out: dict[Weight, int] = {}
    while rest:
        top = max(rest, key=_rho_height)
        k = rest[top]
        if k < 0:
            raise ValueError(f"character is not a genuine module: {top} has multiplicity {k}")
        out[top] = k
        for mu, m in dominant_character(top).items():
            rest[mu] -= k * m
            if rest[mu] == 0:
                del rest[mu]
    return dict(sorted(out.items()))


@lru_cache(maxsize=None)
def tensor_decomposition(n: int, m: int) -> dict[Weight, int]:
    """Irreducible content of ``4^{(x)n} (x) 5^{(x)m}``."""
    table = {ZERO: 1}
    four = irrep_character(Weight(1, 0))
    five = irrep_character(Weight(0, 1))
    for _ in range(n):
        table = multiply(table, four)
    for _ in range(m):
        table = multiply(table, five)
    return decompose(table)


def tensor_multiplicity(lam: Weight, n: int, m: int) -> int:
    if not lam.dominant:
        raise ValueError(f"{lam} is not dominant")
    return tensor_decomposition(n, m).get(lam, 0)


# ------------------------------------------------------------------ affine

def affine_dominant_multiplicities(target: Weight, level: int, depth: int) -> list[dict[Weight, int]]:
    """Dominant weight multiplicities of the level-``level`` integrable module with
    ground space V(target), one table per depth 0..depth.

    A weight ``nu + level*Lambda_0 - d*delta`` is stored as ``tables[d][nu]``.
    Positive roots of C2^(1): finite positive roots, ``beta + n delta`` for every
    finite root beta and n >= 1, and ``n delta`` with multiplicity 2.
    """
    if not target.dominant or target.level > level:
        raise ValueError(f"{target} is not a dominant weight of level <= {level}")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth > MAX_AFFINE_DEPTH:
        raise ValueError(f"depth {depth} exceeds the oracle limit {MAX_AFFINE_DEPTH}")
    k = level
    shifted = k + DUAL_COXETER
    top = _norm(target + RHO)
    tables: list[dict[Weight, int]] = []

    def mult(nu: Weight, d: int) -> int:
        if d < 0:
            return 0
        return tables[d].get(to_dominant(nu)[0], 0)

    for d in range(depth + 1):
        bound = _norm(target) + 2 * k * d
        current: dict[Weight, int] = {}
        tables.append(current)
        for nu in _dominant_candidates(target, bound):
            if d == 0 and nu == target:
                current[nu] = 1
                continue
            c = top - _norm(nu + RHO) + 2 * shifted * d
            if c <= 0:
                continue
            rhs = Fraction(0)
            # finite positive roots, same depth
            for beta in POSITIVE_ROOTS:
                j = 1
                while True:
                    x = nu + beta * j
                    if _norm(x) > bound and inner(x, beta) > 0:
                        break
                    rhs += inner(x, beta) * mult(x, d)
                    j += 1
            for n in range(1, d + 1):
                for j in range(1, d // n + 1):
                    # real roots beta + n delta
                    for beta in ROOTS:
                        x = nu + beta * j
                        rhs += (inner(x, beta) + k * n) * mult(x, d - j * n)
                    # imaginary root n delta, multiplicity RANK
                    rhs += RANK * k * n * mult(nu, d - j * n)
            value = 2 * rhs / c
            if value.denominator != 1 or value < 0:
                raise ArithmeticError(f"non-integral multiplicity {value} at {nu}, depth {d}")
            if value:
                current[nu] = int(value)
    return tables


def _dominant_candidates(target: Weight, bound: Fraction) -> list[Weight]:
    """Dominant weights in target + root lattice with norm <= bound, highest first."""
    out = []
    lev = 0
    while _norm(Weight(lev, 0)) <= bound:
        for m2 in range(lev + 1):
            nu = Weight(lev - m2, m2)
            if (nu.m1 - target.m1) % 2 == 0 and _norm(nu) <= bound:
                out.append(nu)
        lev += 1
    out.sort(key=_rho_height, reverse=True)
    return out


def affine_graded_branching(target: Weight, level: int, depth: int) -> dict[int, dict[Weight, int]]:
    """Per-depth decomposition of the integrable module into C2 irreducibles."""
    tables = affine_dominant_multiplicities(target, level, depth)
    out = {d: decompose(t) for d, t in enumerate(tables)}
    if out[0] != {target: 1}:
        raise ArithmeticError(f"ground space came out as {out[0]}")
    return out
