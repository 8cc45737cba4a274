"""Lie algebra dimensions and the long-shadow classification table."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .svoa import long_shadow_dim1

_EXCEPTIONAL = {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}


@dataclass(frozen=True)
class LieLabel:
    """One factor ``X_{rank,level}^multiplicity`` of a reductive Lie algebra label."""

    family: str
    rank: int
    level: int = 1
    multiplicity: int = 1

    def __post_init__(self):
        f, r = self.family, self.rank
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 3,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
            "U": r == 1,
        }.get(f, False)
        if not ok or self.level < 1 or self.multiplicity < 1:
            raise ValueError(f"invalid Lie label {self}")

    def __str__(self):
        name = "U1" if self.family == "U" else f"{self.family}{self.rank}"
        if self.level != 1:
            name += f",{self.level}"
        if self.multiplicity != 1:
            name += f"^{self.multiplicity}"
        return name

    @property
    def simply_laced_level_one(self) -> bool:
        return self.family in "ADEU" and self.level == 1


_LABEL = re.compile(r"(U1|[A-G])(\d*)(?:,(\d+))?(?:\^(\d+))?")


def parse_label(text: str) -> LieLabel:
    """Parse ``E8``, ``E7,2``, ``D4,2^2`` or ``U1^23``."""
    m = _LABEL.fullmatch(text.strip())
    if not m:
        raise ValueError(f"cannot parse Lie label {text!r}")
    fam, rank, level, mult = m.groups()
    if fam == "U1":
        if rank:
            raise ValueError(f"cannot parse Lie label {text!r}")
        return LieLabel("U", 1, int(level or 1), int(mult or 1))
    if not rank:
        raise ValueError(f"missing rank in {text!r}")
    return LieLabel(fam, int(rank), int(level or 1), int(mult or 1))


def dim_simple(label: LieLabel) -> int:
    """``multiplicity * dim``; the level never changes the dimension."""
    f, n = label.family, label.rank
    if f == "A":
        d = n * (n + 2)
    elif f in "BC":
        d = n * (2 * n + 1)
    elif f == "D":
        d = n * (2 * n - 1)
    elif f == "U":
        d = 1
    else:
        d = _EXCEPTIONAL[(f, n)]
    return label.multiplicity * d


@dataclass(frozen=True)
class TableEntry:
    c: Fraction
    dim_v1: int
    labels: tuple[LieLabel, ...]

    @property
    def lattice_candidate(self) -> bool:
        """Integral rank with only simply laced level-one factors (or none)."""
        return self.c.denominator == 1 and all(lab.simply_laced_level_one for lab in self.labels)

    @property
    def label_text(self) -> str:
        return " ".join(map(str, self.labels)) or "0"


_RAW_TABLE = [
    ("8", 248, "E8"),
    ("12", 276, "D12"),
    ("14", 266, "E7^2"),
    ("15", 255, "A15"),
    ("31/2", 248, "E8,2"),
    ("16", 240, "D8^2"),
    ("17", 221, "A11 E6"),
    ("35/2", 210, "C10"),
    ("18", 198, "D6^3"),
    ("37/2", 185, "E7,2 F4"),
    ("19", 171, "A7^2 D5"),
    ("39/2", 156, "D8,2 B4"),
    ("20", 140, "D4^5"),
    ("41/2", 123, "A9,2 A4"),
    ("21", 105, "A3^7"),
    ("43/2", 86, "D4,2^2 C2^3"),
    ("22", 66, "A1^22"),
    ("45/2", 45, "A1,2^15"),
    ("23", 23, "U1^23"),
    ("47/2", 0, ""),
]

TABLE: tuple[TableEntry, ...] = tuple(
    TableEntry(Fraction(c), dim, tuple(parse_label(t) for t in labels.split())) for c, dim, labels in _RAW_TABLE
)


@dataclass(frozen=True)
class TableCheck:
    entry: TableEntry
    expected: Fraction
    lie_sum: int

    @property
    def passed(self) -> bool:
        return self.expected == self.entry.dim_v1 == self.lie_sum

    def to_json(self) -> dict:
        c = self.entry.c
        return {
            "c": [c.numerator, c.denominator],
            "expected": int(self.expected) if self.expected.denominator == 1 else str(self.expected),
            "lie_sum": self.lie_sum,
            "labels": self.entry.label_text,
            "lattice_candidate": self.entry.lattice_candidate,
            "pass": self.passed,
        }


def verify_table(table=TABLE) -> list[TableCheck]:
    """Re-derive ``dim V_1`` from the rank and from the Lie labels for every row."""
    return [TableCheck(e, long_shadow_dim1(e.c), sum(dim_simple(lab) for lab in e.labels)) for e in table]
