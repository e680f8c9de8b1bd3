"""
Generate larger .topo scripts for parser and engine stress-testing.

Outputs (relative to repo root):
  tests/testdata/generated/nested_depth.topo
  tests/testdata/generated/random_openness.topo
  tests/testdata/generated/family_sweep.topo

Usage:
  poetry run python scripts/generate_example_scripts.py
"""

from __future__ import annotations

import os
import random
import sys
from fractions import Fraction
from pathlib import Path


def _repo_root() -> Path:
    return Path(__file__).resolve().parents[1]


def _import_deccan_topo():
    # Allow running from a fresh repo checkout without installation.
    repo_root = _repo_root()
    sys.path.insert(0, str(repo_root / "src"))
    import deccan_topo  # type: ignore

    return deccan_topo


def _write_script(path: Path, text: str) -> float:
    # Every generated script must parse.
    _import_deccan_topo().parse(text)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")
    return path.stat().st_size / 1024.0


def _nested_depth_script(depth: int = 90) -> str:
    """One set nested just under the parser's depth limit, under each topology."""
    body = "(" * depth + "(0, 1) | {sqrt(2)}" + ")" * depth
    lines = [f"open? {body} in {t}" for t in ("usual", "usualC", "michael", "michaelC")]
    return "\n".join(lines) + "\n"


def _random_rational() -> Fraction:
    return Fraction(random.randint(-40, 40), random.randint(1, 8))


def _random_set(depth: int) -> str:
    if depth == 0 or random.random() < 0.3:
        kind = random.randrange(5)
        if kind == 0:
            lo, hi = sorted((_random_rational(), _random_rational()))
            return f"({lo}, {hi})"
        if kind == 1:
            return "{" + str(_random_rational()) + "}"
        if kind == 2:
            d = random.choice((2, 3, 5, 7))
            return "{" + f"{_random_rational()} + sqrt({d})" + "}"
        if kind == 3:
            return random.choice(("QQ", "II", "RR", "empty"))
        return f"paperU(a={Fraction(1, random.randint(1, 4))})"
    op = random.randrange(3)
    if op == 0:
        return f"({_random_set(depth - 1)} | {_random_set(depth - 1)})"
    if op == 1:
        return f"({_random_set(depth - 1)} & {_random_set(depth - 1)})"
    return f"~{_random_set(depth - 1)}"


def _random_openness_script(count: int = 400) -> str:
    topologies = ("usual", "usualC", "michael", "michaelC")
    lines = ["# Random set expressions; verdicts may be unknown but never errors."]
    for _ in range(count):
        lines.append(f"open? {_random_set(3)} in {random.choice(topologies)} terms 20")
    return "\n".join(lines) + "\n"


def _family_sweep_script() -> str:
    """U at several total lengths: membership, measure and openness."""
    lines = []
    for den in (1, 2, 4, 8, 16):
        a = Fraction(1, den)
        lines.append(f"let U{den} = paperU(a={a})")
        lines.append(f"measure U{den} terms 64")
        lines.append(f"measure ~U{den} & (0, 2) terms 64")
        lines.append(f"open? ~U{den} in michaelC terms 64")
        lines.append(f"member? sqrt(2) in U{den} terms 64")
    return "\n".join(lines) + "\n"


def main() -> int:
    # Deterministic output unless overridden.
    seed = os.getenv("TOPO_SCRIPT_SEED", "1337")
    random.seed(seed)

    root = _repo_root()
    out_dir = root / "tests" / "testdata" / "generated"

    outputs = [
        (out_dir / "nested_depth.topo", _nested_depth_script()),
        (out_dir / "random_openness.topo", _random_openness_script()),
        (out_dir / "family_sweep.topo", _family_sweep_script()),
    ]

    for path, text in outputs:
        size_kb = _write_script(path, text)
        print(f"Wrote {path.as_posix()} ({size_kb:.2f} KB)")

    return 0


if __name__ == "__main__":
    raise SystemExit(main())
