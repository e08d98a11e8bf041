"""Reference tables shipped with the package and the regression checks that use them.

The directory can be overridden with the ``QCG_GOLDEN_DIR`` environment variable.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .algebra import ZERO, LaurentPoly, Weight, label, weight_from_label
from .crystal import word_weight
from .fusion import enumerate_paths, parse_level, q_cg
from .oracle import affine_graded_branching
from .spinon import GradedDecomposition, compare_decompositions, spinon_character

PATHS_FILE = "restricted_paths.tsv"
UNRESTRICTED_FILE = "qcg_unrestricted.tsv"
LEVEL1_FILE = "qcg_level1.tsv"
BASIC_MODULE_FILE = "basic_module.tsv"


def golden_dir() -> Path:
    override = os.environ.get("QCG_GOLDEN_DIR")
    if override:
        return Path(override)
    return Path(str(resources.files("qcg") / "data"))


def _rows(name: str, directory: Path | None = None) -> list[list[str]]:
    path = (directory or golden_dir()) / name
    rows = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        rows.append(line.split("\t"))
    return rows


def parse_content(text: str) -> tuple[int, int]:
    """``"4^3 5^2"`` -> (3, 2); ``"1"`` is the empty product."""
    n = m = 0
    text = text.strip()
    if text == "1":
        return 0, 0
    for factor in text.split():
        mt = re.fullmatch(r"([45])(?:\^(\d+))?", factor)
        if not mt:
            raise ValueError(f"bad particle content {text!r}")
        power = int(mt.group(2) or 1)
        if mt.group(1) == "4":
            n += power
        else:
            m += power
    return n, m


def format_content(n: int, m: int) -> str:
    parts = []
    for base, power in (("4", n), ("5", m)):
        if power:
            parts.append(base if power == 1 else f"{base}^{power}")
    return " ".join(parts) or "1"


def load_paths(directory: Path | None = None) -> dict[tuple[int, int, Weight], set[tuple[str, int]]]:
    """``{(n, m, end): {(word, energy), ...}}``."""
    out: dict[tuple[int, int, Weight], set[tuple[str, int]]] = {}
    for content, word, energy in _rows(PATHS_FILE, directory):
        n, m = parse_content(content)
        word = "" if word == "φ" else word
        end = word_weight(word) if word else ZERO
        out.setdefault((n, m, end), set()).add((word, int(energy)))
    return out


def load_tables(name: str, directory: Path | None = None) -> dict[tuple[int, int, float], dict[Weight, LaurentPoly]]:
    out: dict[tuple[int, int, float], dict[Weight, LaurentPoly]] = {}
    for key, lab, poly in _rows(name, directory):
        n, m, level = key.split()
        table = out.setdefault((int(n), int(m), parse_level(level)), {})
        table[weight_from_label(lab)] = LaurentPoly.parse(poly)
    return out


def load_basic_module(directory: Path | None = None) -> GradedDecomposition:
    levels: dict[int, dict[Weight, int]] = {}
    for depth, lab, mult in _rows(BASIC_MODULE_FILE, directory):
        levels.setdefault(int(depth), {})[weight_from_label(lab)] = int(mult)
    return GradedDecomposition(max(levels), levels)


@dataclass
class CheckResult:
    name: str
    verified: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_paths(directory: Path | None = None, max_particles: int = 6) -> CheckResult:
    """Every level-1 path set with at most ``max_particles`` steps ending at a
    level-1 ground state must equal the reference set (absent means empty)."""
    result = CheckResult("restricted paths")
    golden = load_paths(directory)
    ends = (ZERO, Weight(1, 0), Weight(0, 1))
    for total in range(max_particles + 1):
        for m in range(total + 1):
            n = total - m
            for end in ends:
                got = {(p.word, p.energy) for p in enumerate_paths(n, m, 1, end)}
                want = golden.get((n, m, end), set())
                tag = f"{format_content(n, m)} -> {label(end)}"
                if got != want:
                    result.failures.append(
                        f"{tag}: missing {sorted(want - got)}, unexpected {sorted(got - want)}")
                elif want:
                    result.verified.append(f"{tag}: " + ", ".join(f"{w or 'φ'}_{e}" for w, e in sorted(want)))
    extra = [key for key in golden if key[0] + key[1] > max_particles or key[2] not in ends]
    for key in sorted(extra):
        result.failures.append(f"reference entry outside the checked range: {key}")
    return result


def check_tables(name: str, directory: Path | None = None, title: str | None = None) -> CheckResult:
    result = CheckResult(title or name)
    for (n, m, level), want in sorted(load_tables(name, directory).items()):
        got = q_cg(n, m, level)
        tag = f"[{format_content(n, m)}] level {level}"
        if got != want:
            keys = sorted(set(got) | set(want))
            diffs = [f"{label(w)}: got {got.get(w, LaurentPoly())}, expected {want.get(w, LaurentPoly())}"
                     for w in keys if got.get(w) != want.get(w)]
            result.failures.append(f"{tag}: " + "; ".join(diffs))
        else:
            result.verified.append(tag + " = " + " + ".join(f"({p}) {label(w)}" for w, p in got.items()))
    return result


def check_unrestricted(directory: Path | None = None) -> CheckResult:
    return check_tables(UNRESTRICTED_FILE, directory, "unrestricted tables")


def check_level1(directory: Path | None = None) -> CheckResult:
    return check_tables(LEVEL1_FILE, directory, "level-1 tables")


def check_basic_module(directory: Path | None = None) -> CheckResult:
    result = CheckResult("basic module")
    want = load_basic_module(directory)
    sources = {
        "spinon sum": spinon_character(ZERO, 1, want.cutoff),
        "affine oracle": GradedDecomposition(want.cutoff, affine_graded_branching(ZERO, 1, want.cutoff)),
    }
    for name, got in sources.items():
        diff = compare_decompositions(got, want)
        if diff:
            result.failures.append(f"{name}: {diff}")
        else:
            result.verified.extend(f"{name} depth {line}" for line in got.lines())
    return result
