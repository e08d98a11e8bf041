"""Weights of C2 and exact integer polynomials in q.

Weights are stored in the fundamental-weight basis ``m1*L1 + m2*L2``.
The bilinear form is normalised so the long roots have squared length 2;
in orthogonal coordinates ``L1 = e1``, ``L2 = e1 + e2`` with
``(e_i, e_j) = delta_ij / 2``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping


@dataclass(frozen=True, order=True)
class Weight:
    m1: int
    m2: int

    def __add__(self, other: Weight) -> Weight:
        return Weight(self.m1 + other.m1, self.m2 + other.m2)

    def __sub__(self, other: Weight) -> Weight:
        return Weight(self.m1 - other.m1, self.m2 - other.m2)

    def __neg__(self) -> Weight:
        return Weight(-self.m1, -self.m2)

    def __mul__(self, k: int) -> Weight:
        return Weight(k * self.m1, k * self.m2)

    __rmul__ = __mul__

    @property
    def dominant(self) -> bool:
        return self.m1 >= 0 and self.m2 >= 0

    @property
    def level(self) -> int:
        return self.m1 + self.m2

    def __str__(self) -> str:
        return f"{self.m1},{self.m2}"

    @classmethod
    def parse(cls, text: str) -> Weight:
        """Parse ``"m1,m2"``."""
        parts = text.replace(" ", "").split(",")
        if len(parts) != 2:
            raise ValueError(f"weight must look like 'm1,m2', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))


ZERO = Weight(0, 0)
L1 = Weight(1, 0)
L2 = Weight(0, 1)
ALPHA1 = Weight(2, -1)  # short
ALPHA2 = Weight(-2, 2)  # long
SIMPLE_ROOTS = (ALPHA1, ALPHA2)
POSITIVE_ROOTS = (ALPHA1, ALPHA2, ALPHA1 + ALPHA2, 2 * ALPHA1 + ALPHA2)
ROOTS = POSITIVE_ROOTS + tuple(-a for a in POSITIVE_ROOTS)
RHO = Weight(1, 1)


def pairing(a: int, w: Weight) -> int:
    """Coroot pairing ``(alpha_a^vee, w)``, i.e. the a-th Dynkin label."""
    if a == 1:
        return w.m1
    if a == 2:
        return w.m2
    raise ValueError(f"simple root index must be 1 or 2, got {a!r}")


def inner(x: Weight, y: Weight) -> Fraction:
    # (L1,L1) = 1/2, (L1,L2) = 1/2, (L2,L2) = 1
    twice = x.m1 * y.m1 + x.m1 * y.m2 + x.m2 * y.m1 + 2 * x.m2 * y.m2
    return Fraction(twice, 2)


def reflect(a: int, w: Weight) -> Weight:
    return w - SIMPLE_ROOTS[a - 1] * pairing(a, w)


def to_dominant(w: Weight) -> tuple[Weight, int]:
    """Return the dominant Weyl conjugate of ``w`` and the parity of the reflections used."""
    sign = 1
    while not w.dominant:
        a = 1 if w.m1 < 0 else 2
        w = reflect(a, w)
        sign = -sign
    return w, sign


def weyl_orbit(w: Weight) -> set[Weight]:
    orbit = {w}
    frontier = [w]
    while frontier:
        x = frontier.pop()
        for a in (1, 2):
            y = reflect(a, x)
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def weyl_group() -> list[tuple[Weight, Weight]]:
    """The eight Weyl group elements, each given by the images of L1 and L2."""
    identity = (L1, L2)
    elements = {identity}
    frontier = [identity]
    while frontier:
        g1, g2 = frontier.pop()
        for a in (1, 2):
            h = (reflect(a, g1), reflect(a, g2))
            if h not in elements:
                elements.add(h)
                frontier.append(h)
    return sorted(elements)


def act(g: tuple[Weight, Weight], w: Weight) -> Weight:
    return g[0] * w.m1 + g[1] * w.m2


def root_coordinates(w: Weight) -> tuple[Fraction, Fraction]:
    """Coefficients ``(k1, k2)`` with ``w = k1*alpha1 + k2*alpha2``."""
    return Fraction(w.m1 + w.m2), Fraction(w.m1 + 2 * w.m2, 2)


def weyl_dim(w: Weight) -> int:
    if not w.dominant:
        raise ValueError(f"weyl_dim needs a dominant weight, got {w}")
    m1, m2 = w.m1, w.m2
    num = (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) * (m1 + 2 * m2 + 3)
    assert num % 6 == 0
    return num // 6


def dominant_weights(max_level: int) -> Iterator[Weight]:
    for lev in range(max_level + 1):
        for m2 in range(lev + 1):
            yield Weight(lev - m2, m2)


# ---------------------------------------------------------------- labels

# Dimension labels of the low-lying irreducibles, keyed by weight.
_CHART = {
    (0, 0): "1",
    (1, 0): "4", (0, 1): "5",
    (2, 0): "10", (1, 1): "16", (0, 2): "14",
    (3, 0): "20", (2, 1): "35", (1, 2): "40", (0, 3): "30",
    (4, 0): "35a", (3, 1): "64", (2, 2): "81", (1, 3): "80", (0, 4): "55",
    (5, 0): "56", (4, 1): "105", (3, 2): "140", (2, 3): "154", (1, 4): "140a", (0, 5): "91",
}
CHART_LEVEL = 5
_CHART_BY_LABEL = {label: Weight(*w) for w, label in _CHART.items()}


def weights_of_dimension(dim: int) -> list[Weight]:
    """All dominant weights whose irreducible has dimension ``dim``."""
    found = []
    lev = 0
    # L*L1 has the smallest dimension at each level
    while weyl_dim(Weight(lev, 0)) <= dim:
        found.extend(w for w in dominant_weights_at(lev) if weyl_dim(w) == dim)
        lev += 1
    return found


def dominant_weights_at(lev: int) -> list[Weight]:
    return [Weight(lev - m2, m2) for m2 in range(lev + 1)]


@dataclass(frozen=True)
class IrrepLabel:
    weight: Weight
    dimension: int
    suffix: str = ""

    def __str__(self) -> str:
        return f"{self.dimension}{self.suffix}"


def irrep_label(w: Weight) -> IrrepLabel:
    dim = weyl_dim(w)
    chart = _CHART.get((w.m1, w.m2))
    if chart is not None:
        return IrrepLabel(w, dim, chart[len(str(dim)):])
    if len(weights_of_dimension(dim)) > 1:
        return IrrepLabel(w, dim, f"[{w.m1},{w.m2}]")
    return IrrepLabel(w, dim)


def label(w: Weight) -> str:
    return str(irrep_label(w))


def weight_from_label(text: str) -> Weight:
    text = text.strip()
    if text in _CHART_BY_LABEL:
        return _CHART_BY_LABEL[text]
    m = re.fullmatch(r"(\d+)\[(-?\d+),(-?\d+)\]", text)
    if m:
        w = Weight(int(m.group(2)), int(m.group(3)))
        if weyl_dim(w) != int(m.group(1)):
            raise ValueError(f"label {text!r} has the wrong dimension")
        return w
    if text.isdigit():
        candidates = weights_of_dimension(int(text))
        if len(candidates) == 1:
            return candidates[0]
        raise ValueError(f"label {text!r} is ambiguous or unknown: {candidates}")
    raise ValueError(f"cannot parse irrep label {text!r}")


# ------------------------------------------------------------ polynomials

_TERM = re.compile(r"([+-])(\d*)\*?(?:(q)(?:\^(-?\d+))?)?")

class LaurentPoly:
    """Exact Laurent polynomial in q with integer coefficients."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"coefficients must be int, got {type(v).__name__}")
            c[int(e)] = c.get(int(e), 0) + v
        self._c = {e: v for e, v in sorted(c.items()) if v}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return self._c.items()

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def __add__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: v * other for e, v in self._c.items()})
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        result = LaurentPoly.one()
        for _ in range(n):
            result = result * self
        return result

    def truncate(self, degree: int) -> LaurentPoly:
        return LaurentPoly({e: v for e, v in self._c.items() if e <= degree})

    def mul_truncated(self, other: LaurentPoly, degree: int) -> LaurentPoly:
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            if e1 > degree:
                break
            for e2, v2 in other._c.items():
                if e1 + e2 > degree:
                    break
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out)

    def shift(self, k: int) -> LaurentPoly:
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def reversed(self) -> LaurentPoly:
        """Substitute q -> 1/q."""
        return LaurentPoly({-e: v for e, v in self._c.items()})

    @property
    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    @property
    def valuation(self) -> int | None:
        return min(self._c) if self._c else None

    def __call__(self, q):
        if q == 1:
            return sum(self._c.values())
        return sum(v * q**e for e, v in self._c.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = []
        for e, v in self._c.items():
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            else:
                mono = f"q^{e}"
            mag = abs(v)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if not out:
                out.append(("-" if v < 0 else "") + body)
            else:
                out.append(("- " if v < 0 else "+ ") + body)
        return " ".join(out)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``; accepts e.g. ``"q^2 + 2q^3 - 1"``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        out: dict[int, int] = {}
        pos = 0
        for m in _TERM.finditer(s):
            if m.start() != pos or not (m.group(2) or m.group(3)):
                break
            coeff = int(m.group(2)) if m.group(2) else 1
            e = (int(m.group(4)) if m.group(4) else 1) if m.group(3) else 0
            out[e] = out.get(e, 0) + (coeff if m.group(1) == "+" else -coeff)
            pos = m.end()
        if pos != len(s):
            raise ValueError(f"cannot parse polynomial {text!r}")
        return cls(out)

    def to_json(self) -> dict[str, int]:
        return {str(e): v for e, v in self._c.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> LaurentPoly:
        return cls({int(e): v for e, v in data.items()})


@lru_cache(maxsize=None)
def q_pochhammer(n: int) -> LaurentPoly:
    """``(q)_n = (1-q)(1-q^2)...(1-q^n)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = LaurentPoly.one()
    for j in range(1, n + 1):
        result = result * LaurentPoly({0: 1, j: -1})
    return result


@lru_cache(maxsize=None)
def series_inverse_pochhammer(n: int, degree: int) -> LaurentPoly:
    """``1/(q)_n`` as a power series, truncated at ``q^degree``."""
    if n < 0 or degree < 0:
        raise ValueError("n and degree must be nonnegative")
    # partitions of d into parts of size <= n
    counts = [1] + [0] * degree
    for part in range(1, n + 1):
        for d in range(part, degree + 1):
            counts[d] += counts[d - part]
    return LaurentPoly({d: c for d, c in enumerate(counts)})
