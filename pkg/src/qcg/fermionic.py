"""Fermionic (Bethe-ansatz) q-multiplicities M_{lambda,mu}(q) for C2."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from .algebra import LaurentPoly, Weight, pairing, root_coordinates

# squared lengths of the simple roots and their mutual product
_NORM = {1: 1, 2: 2}
_INNER = {(1, 1): 1, (2, 2): 2, (1, 2): -1, (2, 1): -1}


def phi(a: int, i: int, b: int, j: int) -> int:
    num = 2 * _INNER[a, b] * min(i * _NORM[a], j * _NORM[b])
    den = _NORM[a] * _NORM[b]
    assert num % den == 0
    return num // den


@dataclass(frozen=True)
class Configuration:
    """Mode numbers ``m[(a, i)]``; zero entries are dropped."""

    m: tuple[tuple[tuple[int, int], int], ...] = field(default=())

    @classmethod
    def from_mapping(cls, data: Mapping[tuple[int, int], int]) -> Configuration:
        return cls(tuple(sorted((k, v) for k, v in data.items() if v)))

    @classmethod
    def from_partitions(cls, p1: tuple[int, ...], p2: tuple[int, ...]) -> Configuration:
        counts: dict[tuple[int, int], int] = {}
        for a, parts in ((1, p1), (2, p2)):
            for part in parts:
                counts[a, part] = counts.get((a, part), 0) + 1
        return cls.from_mapping(counts)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return dict(self.m).get(key, 0)

    def items(self):
        return self.m

    def total(self, a: int) -> int:
        return sum(i * v for (b, i), v in self.m if b == a)


def vacancy(a: int, i: int, cfg: Configuration, mu: Weight) -> int:
    return pairing(a, mu) - sum(phi(a, i, b, j) * v for (b, j), v in cfg.items())


def charge(cfg: Configuration) -> int:
    twice = sum(phi(a, i, b, j) * v * w for (a, i), v in cfg.items() for (b, j), w in cfg.items())
    if twice % 2:
        raise ArithmeticError(f"half-integral charge for {cfg}")
    return twice // 2


@lru_cache(maxsize=None)
def _gaussian(n: int, k: int) -> LaurentPoly:
    if k < 0 or k > n:
        return LaurentPoly.zero()
    if k == 0 or k == n:
        return LaurentPoly.one()
    return _gaussian(n - 1, k - 1) + _gaussian(n - 1, k).shift(k)


def q_binomial(P: int, m: int) -> LaurentPoly:
    """Gaussian binomial ``[P+m choose m]_q``; zero when ``P < 0 < m``."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return LaurentPoly.one()
    if P < 0:
        return LaurentPoly.zero()
    return _gaussian(P + m, m)


@lru_cache(maxsize=None)
def partitions(k: int) -> tuple[tuple[int, ...], ...]:
    """Partitions of k as nonincreasing tuples, in lexicographic order."""
    def gen(rest: int, largest: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, largest), 0, -1):
            for tail in gen(rest - part, part):
                yield (part,) + tail
    return tuple(sorted(gen(k, k)))


def root_offsets(lam: Weight, mu: Weight) -> tuple[int, int] | None:
    """``(k1, k2)`` with ``mu - lam = k1 alpha1 + k2 alpha2``, or None if not
    a nonnegative integral combination."""
    k1, k2 = root_coordinates(mu - lam)
    if k1.denominator != 1 or k2.denominator != 1 or k1 < 0 or k2 < 0:
        return None
    return int(k1), int(k2)


def enumerate_configs(lam: Weight, mu: Weight) -> list[Configuration]:
    offsets = root_offsets(lam, mu)
    if offsets is None:
        return []
    k1, k2 = offsets
    return [Configuration.from_partitions(p1, p2)
            for p1 in partitions(k1) for p2 in partitions(k2)]


def term(cfg: Configuration, mu: Weight) -> LaurentPoly:
    """Contribution ``q^c(m) prod [P+m choose m]`` of one configuration."""
    result = LaurentPoly.monomial(charge(cfg))
    for (a, i), v in cfg.items():
        P = vacancy(a, i, cfg, mu)
        if P < 0:
            return LaurentPoly.zero()
        result = result * q_binomial(P, v)
    return result


@lru_cache(maxsize=None)
def fermionic_M(lam: Weight, mu: Weight) -> LaurentPoly:
    if not (lam.dominant and mu.dominant):
        raise ValueError("fermionic_M needs dominant weights")
    total = LaurentPoly.zero()
    for cfg in enumerate_configs(lam, mu):
        total = total + term(cfg, mu)
    return total


def classical_M(lam: Weight, mu: Weight) -> int:
    return fermionic_M(lam, mu)(1)


def fermionic_table(n: int, m: int) -> dict[Weight, LaurentPoly]:
    """All nonzero ``M_{lam, n L1 + m L2}(q)``, keyed by lam."""
    mu = Weight(n, m)
    out = {}
    for lev in range(mu.level + 1):
        for m2 in range(lev + 1):
            lam = Weight(lev - m2, m2)
            poly = fermionic_M(lam, mu)
            if poly:
                out[lam] = poly
    return out
