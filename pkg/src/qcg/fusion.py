"""Fusion paths and the crystal q-Clebsch-Gordan rules.

A level is either a positive integer or ``UNRESTRICTED`` (``math.inf``).
Paths start at the zero weight and append one letter per tensor factor;
the energy of a path is the energy of its word.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .algebra import ZERO, LaurentPoly, Weight, pairing, weyl_dim
from .crystal import B4, B5, WEIGHT, index
from .fermionic import fermionic_M

UNRESTRICTED = math.inf

QCGTable = dict  # Weight -> LaurentPoly, zero entries omitted


def parse_level(text) -> float | int:
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        level = text
    elif str(text).strip().lower() in ("inf", "infinity", "unrestricted"):
        level = UNRESTRICTED
    else:
        level = int(text)
    if level != UNRESTRICTED and (level != int(level) or level < 1):
        raise ValueError(f"level must be a positive integer or 'inf', got {text!r}")
    return level


def fusion_step(mu: Weight, p: str, level=UNRESTRICTED) -> Optional[Weight]:
    lam = mu + WEIGHT[p]
    if not lam.dominant or lam.level > level:
        return None
    if p == "c" and pairing(1, mu) < 1:
        return None
    return lam


@dataclass(frozen=True)
class Path:
    word: str
    nodes: tuple[Weight, ...]
    energy: int

    @property
    def end(self) -> Weight:
        return self.nodes[-1]

    def __str__(self) -> str:
        return f"{self.word or 'φ'} {self.energy}"


def canonical_order(n: int, m: int) -> str:
    """Type sequence with every 5-step ahead of every 4-step."""
    return "5" * m + "4" * n


def _walk(order: str, level, end: Optional[Weight], max_energy: Optional[int]):
    """Depth-first search over admissible words; yields (word, nodes, energy)."""
    alphabets = [B4 if t == "4" else B5 for t in order]
    total = len(order)
    word: list[str] = []
    nodes = [ZERO]

    def rec(depth: int, e: int):
        if depth == total:
            if end is None or nodes[-1] == end:
                yield "".join(word), tuple(nodes), e
            return
        # every letter changes the level by at most one
        if end is not None and abs(nodes[-1].level - end.level) > total - depth:
            return
        for p in alphabets[depth]:
            nxt = fusion_step(nodes[-1], p, level)
            if nxt is None:
                continue
            word.append(p)
            ind = index("".join(word), depth + 1)
            if max_energy is None or e + ind <= max_energy:
                nodes.append(nxt)
                yield from rec(depth + 1, e + ind)
                nodes.pop()
            word.pop()

    yield from rec(0, 0)


def enumerate_paths(n: int, m: int, level=UNRESTRICTED, end: Optional[Weight] = None,
                    order: Optional[str] = None, max_energy: Optional[int] = None) -> list[Path]:
    """All fusion paths with ``n`` 4-steps and ``m`` 5-steps.

    Sorted by (endpoint, energy, word). ``max_energy`` prunes paths whose
    energy exceeds it; the index of each letter is nonnegative and depends
    only on the prefix, so pruning prefixes is exact.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    order = _check_order(n, m, order)
    paths = [Path(w, nodes, e) for w, nodes, e in _walk(order, level, end, max_energy)]
    paths.sort(key=lambda p: (p.end, p.energy, p.word))
    return paths


def _check_order(n: int, m: int, order: Optional[str]) -> str:
    if order is None:
        return canonical_order(n, m)
    order = "".join(str(t) for t in order)
    if sorted(order) != sorted(canonical_order(n, m)):
        raise ValueError(f"ordering {order!r} does not have content 4^{n} 5^{m}")
    return order


def q_cg(n: int, m: int, level=UNRESTRICTED, order: Optional[str] = None,
         max_degree: Optional[int] = None) -> QCGTable:
    """``{endpoint: sum over paths of q^energy}``, optionally truncated."""
    sums: dict[Weight, dict[int, int]] = {}
    for _, nodes, e in _walk(_check_order(n, m, order), level, None, max_degree):
        poly = sums.setdefault(nodes[-1], {})
        poly[e] = poly.get(e, 0) + 1
    return {lam: LaurentPoly(c) for lam, c in sorted(sums.items())}


def dimension_sum(table: QCGTable) -> int:
    return sum(poly(1) * weyl_dim(lam) for lam, poly in table.items())


# ------------------------------------------------------------------ checks

@dataclass
class OrderInvarianceReport:
    n: int
    m: int
    level: float | int
    tables: dict[str, QCGTable]

    @property
    def equal(self) -> bool:
        values = list(self.tables.values())
        return all(t == values[0] for t in values[1:])


def check_order_invariance(n: int, m: int, level=UNRESTRICTED,
                           orderings: Optional[Iterable[str]] = None) -> OrderInvarianceReport:
    if orderings is None:
        orderings = [canonical_order(n, m)]
    tables = {}
    for order in orderings:
        order = _check_order(n, m, order)
        tables[order] = q_cg(n, m, level, order=order)
    return OrderInvarianceReport(n, m, level, tables)


@dataclass
class Conjecture1Case:
    n: int
    m: int
    lam: Weight
    crystal: LaurentPoly
    fermionic: LaurentPoly
    status: str  # "equal", "reversed", "shifted" or "different"

    @property
    def nontrivial(self) -> bool:
        return bool(self.crystal) or bool(self.fermionic)


@dataclass
class Conjecture1Report:
    max_particles: int
    cases: list[Conjecture1Case] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        statuses = {c.status for c in self.cases}
        if statuses <= {"equal"}:
            return "equal"
        if "different" in statuses:
            return "different"
        return "equal up to " + "/".join(sorted(statuses - {"equal"}))

    @property
    def holds(self) -> bool:
        return self.verdict == "equal"

    def failures(self) -> list[Conjecture1Case]:
        return [c for c in self.cases if c.status != "equal"]


def _compare(x: LaurentPoly, y: LaurentPoly) -> str:
    if x == y:
        return "equal"
    if x and y:
        # q -> 1/q followed by the unique power shift that aligns valuations
        rx = x.reversed()
        if rx.shift(y.valuation - rx.valuation) == y:
            return "reversed"
        if x.shift(y.valuation - x.valuation) == y:
            return "shifted"
    return "different"


def conjecture1_check(max_particles: int) -> Conjecture1Report:
    """Compare unrestricted path polynomials with fermionic M for n+m <= max_particles."""
    if max_particles < 1:
        raise ValueError("max_particles must be at least 1")
    report = Conjecture1Report(max_particles)
    for total in range(max_particles + 1):
        for m in range(total + 1):
            n = total - m
            crystal = q_cg(n, m)
            mu = Weight(n, m)
            for lev in range(mu.level + 1):
                for m2 in range(lev + 1):
                    lam = Weight(lev - m2, m2)
                    x = crystal.get(lam, LaurentPoly.zero())
                    y = fermionic_M(lam, mu)
                    report.cases.append(Conjecture1Case(n, m, lam, x, y, _compare(x, y)))
    return report

