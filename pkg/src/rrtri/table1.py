"""Known integer triangles with R/r = N for N <= 999, and the M = 89 example."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from rrtri.triangle import DegenerateTripleError, ratio

# (N, f, g, h); the N = 2 row is the equilateral triangle, which is excluded
# from the curve family because E_2 is singular.
TABLE1: tuple[tuple[int, int, int, int], ...] = (
    (2, 1, 1, 1),
    (26, 11, 39, 49),
    (74, 259, 475, 729),
    (218, 115, 5239, 5341),
    (250, 97, 10051, 10125),
    (314, 177487799, 55017780825, 55036428301),
    (386, 1449346321141, 2477091825117, 3921344505997),
    (394, 12017, 2356695, 2365193),
    (458, 395, 100989, 101251),
    (586, 3809, 18411, 22201),
    (602, 833, 14703, 15523),
    (634, 10553413, 1234267713, 1243789375),
    (674, 535, 170471, 170859),
    (746, 47867463, 6738962807, 6782043733),
    (778, 1224233861981, 91266858701995, 92430153628659),
    (866, 3025, 5629, 8649),
)

NEAR_EQUILATERAL_89 = (10188073747943, 10937217961673, 11065215566304)
NEAR_EQUILATERAL_89_ANGLES = (55.16, 61.78, 63.06)


@dataclass(frozen=True)
class RowCheck:
    n: int
    sides: tuple[int, int, int]
    passed: bool
    note: str = ""

    @property
    def residue_mod_8(self) -> int:
        return self.n % 8


def check_row(n: int, f: int, g: int, h: int) -> RowCheck:
    try:
        ok = ratio(f, g, h) == n
    except DegenerateTripleError:
        ok = False
    note = "equilateral; E_2 is singular" if n == 2 else ""
    return RowCheck(n, (f, g, h), ok, note)


def load_rows(path: str | Path) -> list[tuple[int, int, int, int]]:
    """Rows ``N f g h`` separated by whitespace or commas; ``#`` starts a comment."""
    rows = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].replace(",", " ").strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"expected 'N f g h', got {line!r}")
        if parts[0].lower() == "n":
            continue  # header
        rows.append(tuple(int(x) for x in parts))
    return rows
