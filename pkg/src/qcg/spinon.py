"""Spinon character sums and graded decompositions."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .algebra import LaurentPoly, Weight, label, series_inverse_pochhammer, weyl_dim
from .fusion import UNRESTRICTED, q_cg

log = logging.getLogger(__name__)


@dataclass
class GradedDecomposition:
    """``levels[d][lam]`` is the multiplicity of V(lam) at depth d, for d <= cutoff."""

    cutoff: int
    levels: dict[int, dict[Weight, int]] = field(default_factory=dict)

    def __post_init__(self):
        self.levels = {d: {w: k for w, k in sorted(self.levels.get(d, {}).items()) if k}
                       for d in range(self.cutoff + 1)}

    def __getitem__(self, d: int) -> dict[Weight, int]:
        return self.levels[d]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedDecomposition):
            return NotImplemented
        return self.cutoff == other.cutoff and self.levels == other.levels

    def dimension(self, d: int) -> int:
        return sum(k * weyl_dim(w) for w, k in self.levels[d].items())

    def truncate(self, cutoff: int) -> GradedDecomposition:
        return GradedDecomposition(cutoff, {d: self.levels[d] for d in range(cutoff + 1)})

    def lines(self) -> list[str]:
        out = []
        for d in range(self.cutoff + 1):
            items = sorted(self.levels[d].items(), key=lambda kv: (weyl_dim(kv[0]), kv[0]))
            body = " + ".join(f"{label(w)}×{k}" for w, k in items) or "0"
            out.append(f"{d}: {body}")
        return out

    def to_json(self) -> dict:
        return {"cutoff": self.cutoff,
                "depths": {str(d): [{"weight": [w.m1, w.m2], "label": label(w), "multiplicity": k}
                                    for w, k in self.levels[d].items()]
                           for d in range(self.cutoff + 1)}}

    @classmethod
    def from_json(cls, data: dict) -> GradedDecomposition:
        levels = {int(d): {Weight(*e["weight"]): e["multiplicity"] for e in entries}
                  for d, entries in data["depths"].items()}
        return cls(data["cutoff"], levels)


def compare_decompositions(x: GradedDecomposition, y: GradedDecomposition) -> dict[int, dict[Weight, tuple[int, int]]]:
    """Per-depth differences ``{d: {lam: (mult in x, mult in y)}}``; empty when equal."""
    if x.cutoff != y.cutoff:
        raise ValueError(f"depth cutoffs differ: {x.cutoff} vs {y.cutoff}")
    diff = {}
    for d in range(x.cutoff + 1):
        a, b = x[d], y[d]
        entries = {w: (a.get(w, 0), b.get(w, 0)) for w in set(a) | set(b) if a.get(w, 0) != b.get(w, 0)}
        if entries:
            diff[d] = dict(sorted(entries.items()))
    return diff


def restricted_coefficient(n: int, m: int, target: Weight, level, max_degree=None) -> LaurentPoly:
    if not target.dominant or target.level > level:
        raise ValueError(f"{target} is not dominant of level <= {level}")
    return q_cg(n, m, level, max_degree=max_degree).get(target, LaurentPoly.zero())


class ShellCutoffError(RuntimeError):
    pass


@dataclass
class SpinonTerm:
    n: int
    m: int
    prefactor: LaurentPoly  # restricted coefficient, truncated


def spinon_terms(target: Weight, level, depth: int) -> list[SpinonTerm]:
    """The (n, m) contents whose restricted coefficient has a term of degree <= depth.

    Particle shells n+m = s are scanned upward from the level of the target
    (each step changes the level by at most one); the scan stops after two
    consecutive empty shells, and one further shell is checked to be empty too.
    """
    terms = []
    empty_run = 0
    s = target.level
    while True:
        shell = []
        for m in range(s + 1):
            poly = restricted_coefficient(s - m, m, target, level, max_degree=depth)
            if poly:
                shell.append(SpinonTerm(s - m, m, poly))
        if empty_run == 2:
            if shell:
                raise ShellCutoffError(
                    f"shell {s} contributes below degree {depth} after two empty shells: "
                    + ", ".join(f"4^{t.n} 5^{t.m}: {t.prefactor}" for t in shell))
            return terms
        terms.extend(shell)
        empty_run = 0 if shell else empty_run + 1
        s += 1


def spinon_character(target: Weight, level, depth: int) -> GradedDecomposition:
    """Truncation to q^depth of ``sum P(q)/((q)_n (q)_m) [4^n (x) 5^m]``."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if level == UNRESTRICTED:
        raise ValueError("spinon characters need a finite level")
    totals: dict[int, dict[Weight, int]] = {d: {} for d in range(depth + 1)}
    for t in spinon_terms(target, level, depth):
        series = t.prefactor.mul_truncated(series_inverse_pochhammer(t.n, depth), depth)
        series = series.mul_truncated(series_inverse_pochhammer(t.m, depth), depth)
        room = depth - series.valuation
        log.debug("content 4^%d 5^%d: prefactor %s", t.n, t.m, t.prefactor)
        for lam, poly in q_cg(t.n, t.m, UNRESTRICTED, max_degree=room).items():
            for e, c in poly.mul_truncated(series, depth).items():
                totals[e][lam] = totals[e].get(lam, 0) + c
    return GradedDecomposition(depth, totals)
