"""Crystals of the 4- and 5-dimensional C2 modules, the combinatorial R and
the energy statistic on words.

A word is a plain string over ``1234abcde``; the digits form the crystal of
the 4-dimensional module and the letters that of the 5-dimensional one.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .algebra import ZERO, Weight

B4 = "1234"
B5 = "abcde"
LETTERS = B4 + B5

WEIGHT = {
    "1": Weight(1, 0), "2": Weight(-1, 1), "3": Weight(1, -1), "4": Weight(-1, 0),
    "a": Weight(0, 1), "b": Weight(2, -1), "c": Weight(0, 0), "d": Weight(-2, 1), "e": Weight(0, -1),
}

# single-letter lowering arrows, by color
_F = {
    1: {"1": "2", "3": "4", "b": "c", "c": "d"},
    2: {"2": "3", "a": "b", "d": "e"},
}
_E = {i: {y: x for x, y in arrows.items()} for i, arrows in _F.items()}


def letter_type(x: str) -> int:
    if x in B4:
        return 4
    if x in B5:
        return 5
    raise ValueError(f"unknown letter {x!r}")


def type_sequence(word: str) -> tuple[int, ...]:
    return tuple(letter_type(x) for x in word)


def word_weight(word: str) -> Weight:
    total = ZERO
    for x in word:
        total = total + WEIGHT[x]
    return total


def phi(i: int, x: str) -> int:
    n = 0
    while x in _F[i]:
        x = _F[i][x]
        n += 1
    return n


def epsilon(i: int, x: str) -> int:
    n = 0
    while x in _E[i]:
        x = _E[i][x]
        n += 1
    return n


def _reduced_signature(i: int, word: str) -> tuple[list[int], list[int]]:
    """Positions of the uncancelled ``-`` and ``+`` signs.

    Each letter contributes ``-`` epsilon times followed by ``+`` phi times;
    adjacent ``+-`` pairs cancel.
    """
    minus: list[int] = []
    plus: list[int] = []
    for pos, x in enumerate(word):
        for _ in range(epsilon(i, x)):
            if plus:
                plus.pop()
            else:
                minus.append(pos)
        plus.extend([pos] * phi(i, x))
    return minus, plus


def _check(i: int, word: str) -> None:
    if i not in (1, 2):
        raise ValueError(f"crystal operator index must be 1 or 2, got {i!r}")
    if not word:
        raise ValueError("crystal operators need a nonempty word")
    for x in word:
        letter_type(x)


def kashiwara_f(i: int, word: str) -> Optional[str]:
    """Lowering operator f_i; None when it vanishes."""
    _check(i, word)
    _, plus = _reduced_signature(i, word)
    if not plus:
        return None
    pos = plus[0]
    return word[:pos] + _F[i][word[pos]] + word[pos + 1:]


def kashiwara_e(i: int, word: str) -> Optional[str]:
    """Raising operator e_i; None when it vanishes."""
    _check(i, word)
    minus, _ = _reduced_signature(i, word)
    if not minus:
        return None
    pos = minus[-1]
    return word[:pos] + _E[i][word[pos]] + word[pos + 1:]


def crystal_graph(words: Iterable[str]) -> set[tuple[str, int, str]]:
    """Edges ``(source, color, target)`` of f_1, f_2 on the given words."""
    edges = set()
    for w in words:
        for i in (1, 2):
            t = kashiwara_f(i, w)
            if t is not None:
                edges.add((w, i, t))
    return edges


# ------------------------------------------------------- combinatorial R

# (5-letter, 4-letter) -> (4-letter, 5-letter)
_R54 = {
    "a1": "1a", "b1": "1b", "c1": "2b", "d1": "2c", "e1": "3c",
    "a2": "2a", "b2": "3a", "c2": "4a", "d2": "2d", "e2": "3d",
    "a3": "1c", "b3": "3b", "c3": "4b", "d3": "4c", "e3": "3e",
    "a4": "1d", "b4": "1e", "c4": "2e", "d4": "4d", "e4": "4e",
}
_R45 = {v: k for k, v in _R54.items()}
assert len(_R45) == 20


def iso(x: str, y: str) -> tuple[str, str]:
    """Image of the adjacent pair ``xy`` under the crystal isomorphism
    ``B (x) B' -> B' (x) B``; the identity when both letters have the same type."""
    tx, ty = letter_type(x), letter_type(y)
    if tx == ty:
        return x, y
    image = _R54[x + y] if tx == 5 else _R45[x + y]
    return image[0], image[1]


# ------------------------------------------------------------ energy H

_H_LISTS = {
    # 4 (x) 4
    0: "11 21 22 31 32 33 41 42 43 44 "
       # 5 (x) 5
       "aa ba bb ca cb da db dc dd ea eb ec ed ee "
       # 5 (x) 4
       "a1 a2 b1 b2 b3 c1 c2 c3 d1 d2 d3 d4 e1 e2 e3 e4 "
       # 4 (x) 5
       "1a 1b 2a 2b 2c 2d 3a 3b 3c 3d 3e 4a 4b 4c 4d 4e",
    1: "12 13 23 24 34 14 "
       "ab ac ad bc bd be cc cd ce de "
       "a3 a4 b4 c4 "
       "1c 1d 1e 2e",
    2: "ae",
}
_H = {pair: value for value, pairs in _H_LISTS.items() for pair in pairs.split()}
assert len(_H) == 81


def energy_H(x: str, y: str) -> int:
    return _H[x + y]


def index_trace(word: str, pos: int) -> list[tuple[str, str, int]]:
    """The exchanges that carry the letter at 1-based ``pos`` to the front.

    Returns one ``(left, tracked, H)`` triple per step.
    """
    if not 1 <= pos <= len(word):
        raise ValueError(f"position {pos} out of range for word {word!r}")
    letters = list(word)
    t = pos - 1
    steps = []
    while t > 0:
        x, y = letters[t - 1], letters[t]
        h = energy_H(x, y)
        steps.append((x, y, h))
        letters[t - 1], letters[t] = iso(x, y)
        t -= 1
    return steps


def index(word: str, pos: int) -> int:
    """Energy accumulated while moving the letter at 1-based ``pos`` to the front."""
    return sum(h for _, _, h in index_trace(word, pos))


def energy(word: str) -> int:
    return sum(index(word, p) for p in range(1, len(word) + 1))


# ------------------------------------------------------------- reordering

def _as_types(target) -> tuple[int, ...]:
    if isinstance(target, str):
        return tuple(int(ch) for ch in target)
    return tuple(int(t) for t in target)


def reorder(word: str, target) -> str:
    """Rewrite ``word`` to the type sequence ``target`` using adjacent R moves.

    Scans left to right; wherever the type differs from the target, the
    nearest letter of the wanted type is bubbled leftward into place.
    """
    goal = _as_types(target)
    letters = list(word)
    types = list(type_sequence(word))
    if sorted(types) != sorted(goal) or set(goal) - {4, 5}:
        raise ValueError(f"target {goal} is not a rearrangement of {tuple(types)}")
    for i, want in enumerate(goal):
        if types[i] == want:
            continue
        j = types.index(want, i)
        for k in range(j, i, -1):
            letters[k - 1], letters[k] = iso(letters[k - 1], letters[k])
            types[k - 1], types[k] = types[k], types[k - 1]
    return "".join(letters)


def reorder_from_right(word: str, target) -> str:
    """Same map as ``reorder`` but with a right-to-left bubble schedule."""
    goal = _as_types(target)
    letters = list(word)
    types = list(type_sequence(word))
    if sorted(types) != sorted(goal) or set(goal) - {4, 5}:
        raise ValueError(f"target {goal} is not a rearrangement of {tuple(types)}")
    for i in range(len(goal) - 1, -1, -1):
        want = goal[i]
        if types[i] == want:
            continue
        j = max(k for k in range(i) if types[k] == want)
        for k in range(j, i):
            letters[k], letters[k + 1] = iso(letters[k], letters[k + 1])
            types[k], types[k + 1] = types[k + 1], types[k]
    return "".join(letters)
