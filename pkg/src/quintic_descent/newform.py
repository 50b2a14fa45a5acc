"""Level bookkeeping for the n = 7 endgame.

B^7 + 2^(4a+2) 5^(4k+1) = w^2 is rewritten as B^7 + C (2^s1 5^s2)^7 = w^2
with C = 2^r1 5^r2, 0 <= r_i < 7, and the Bennett-Skinner recipe assigns
the level N_7 from v_2(C) and rad(C).  Whether a level carries weight-2
newforms is looked up in a bundled table, never computed.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field, replace
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Optional

from .arith import factorize, radical, valuation

ENDGAME_LEVELS = frozenset({1, 2, 5, 10})


@dataclass(frozen=True)
class LevelComputation:
    alpha: int
    k: int
    r1: int
    s1: int
    r2: int
    s2: int
    level: Optional[int] = None
    hypotheses: tuple[tuple[str, str], ...] = field(default=(), compare=False)

    @property
    def C(self) -> int:
        return 2**self.r1 * 5**self.r2

    @property
    def v2C(self) -> int:
        return self.r1

    def exact(self) -> bool:
        lhs = 2 ** (4 * self.alpha + 2) * 5 ** (4 * self.k + 1)
        return lhs == self.C * (2**self.s1 * 5**self.s2) ** 7

    def as_dict(self) -> dict:
        return {"alpha": self.alpha, "k": self.k, "C": self.C, "r1": self.r1, "r2": self.r2,
                "s1": self.s1, "s2": self.s2, "v2C": self.v2C, "level": self.level}


def rewrite_seventh(alpha: int, k: int) -> LevelComputation:
    if alpha < 1 or k < 0:
        raise ValueError("need alpha >= 1 and k >= 0")
    s1, r1 = divmod(4 * alpha + 2, 7)
    s2, r2 = divmod(4 * k + 1, 7)
    return LevelComputation(alpha, k, r1, s1, r2, s2)


def bs_level(C: int) -> int:
    if C < 1:
        raise ValueError("C must be positive")
    bad = {q: e for q, e in factorize(C).items() if e >= 7}
    if bad:
        raise ValueError(f"v_q(C) >= 7 for q in {sorted(bad)}")
    v2 = valuation(2, C)
    if v2 == 0:
        return 2 * radical(C)
    if v2 == 6:
        return radical(C) // 2
    return radical(C)


def _checklist(lc: LevelComputation) -> tuple[tuple[str, str], ...]:
    return (
        ("xy ≠ ±1", "discharged: B₂ ≢ ±1 by NOT5U_N7_MOD3 + NOT5U_N7_MOD8"),
        ("x, Cy, z nonzero and pairwise coprime", "assumed: gcd(B₂, w₂) = 1 from the descent"),
        ("z ≡ 1 (mod 4)", "discharged: w₂ = u² − 5v² with u odd, v even"),
        ("v₂(Cy⁷) ≥ 6", f"discharged: 4α + 2 = {4 * lc.alpha + 2} ≥ 6"),
        ("v_q(C) < 7 for all q", f"discharged: r1 = {lc.r1}, r2 = {lc.r2}"),
    )


def level_computation(alpha: int, k: int) -> LevelComputation:
    lc = rewrite_seventh(alpha, k)
    return replace(lc, level=bs_level(lc.C), hypotheses=_checklist(lc))


def n7_level_set(alpha_max: int, k_max: int) -> set[int]:
    if alpha_max < 1 or k_max < 0:
        raise ValueError("need alpha_max >= 1 and k_max >= 0")
    return {level_computation(a, k).level
            for a in range(1, alpha_max + 1) for k in range(0, k_max + 1)}


@dataclass(frozen=True)
class TableRow:
    level: int
    has_newforms: bool
    new_dim: int
    provenance: str


class OutsideTableError(LookupError):
    pass


def parse_table(text: str) -> dict[int, TableRow]:
    body = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    rows = {}
    for rec in csv.DictReader(io.StringIO("\n".join(body))):
        row = TableRow(int(rec["level"]), rec["has_newforms"].strip() == "true",
                       int(rec["new_dim"]), rec["provenance"])
        if row.has_newforms != (row.new_dim > 0):
            raise ValueError(f"inconsistent row for level {row.level}")
        rows[row.level] = row
    return rows


@lru_cache(maxsize=4)
def load_table(path: Optional[str] = None) -> dict[int, TableRow]:
    if path is None:
        text = resources.files("quintic_descent").joinpath("data/newform_levels.csv").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return parse_table(text)


def has_newforms(level: int, table_path: Optional[str] = None) -> bool:
    if level < 1:
        raise ValueError("level must be >= 1")
    table = load_table(table_path)
    if level not in table:
        raise OutsideTableError(f"level {level} is outside the newform table (levels {min(table)}..{max(table)})")
    return table[level].has_newforms
