"""Embedded reference tables and the harness that recomputes them.

Each table lives in ``data/table_<ID>.txt`` as UTF-8 ``row|col|value``
records. Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

from ..analysis import Status, detectors_of, verdict
from ..errors import ParseError, UnknownTable, UnsupportedDimension
from ..mcs import enumerate_mcs, mcs_containing, render_ids
from ..pauli import GbsSet, Gpm, diff_set, render_gpms

TABLE_IDS = ("I", "II", "III", "IV", "V", "VI")

# tables listing MCS(m,n) for every GPM, keyed by table id
MCS_TABLE_DIMENSIONS = {"I": 4, "III": 5, "IV": 6, "V": 8}
CATALOG_TABLES = {4: "II", 6: "VI"}
FULL_SET_TOKEN = "S_MC"
EMPTY_TOKEN = "∅"


@dataclass(frozen=True)
class TableSpec:
    table_id: str
    cells: dict[tuple[str, str], str]


@dataclass(frozen=True)
class RepresentativeCatalog:
    d: int
    entries: list[tuple[str, GbsSet]]
    provenance: str

    def __getitem__(self, name: str) -> GbsSet:
        for key, s in self.entries:
            if key == name:
                return s
        raise KeyError(name)

    def names(self) -> list[str]:
        return [name for name, _ in self.entries]


@dataclass(frozen=True)
class Erratum:
    table_id: str
    row: str
    col: str
    value: str
    reason: str


@dataclass
class CellMismatch:
    row: str
    col: str
    expected: str
    actual: str
    erratum: Erratum | None = None


@dataclass
class TableDiff:
    table_id: str
    cells: int
    mismatches: list[CellMismatch] = field(default_factory=list)

    corrected: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        matched = self.cells - len(self.mismatches)
        text = f"Table {self.table_id}: {matched}/{self.cells} cells match"
        if self.corrected:
            text += f" ({self.corrected} via errata)"
        return text


def _check_id(table_id: str) -> str:
    if table_id not in TABLE_IDS:
        raise UnknownTable(f"unknown table: {table_id}")
    return table_id


def load_table(table_id: str) -> TableSpec:
    _check_id(table_id)
    text = resources.files(__name__).joinpath("data", f"table_{table_id}.txt").read_text("utf-8")
    cells: dict[tuple[str, str], str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("|")
        if len(parts) != 3:
            raise ParseError(f"table {table_id} line {lineno}: expected row|col|value")
        row, col, value = (p.strip() for p in parts)
        if (row, col) in cells:
            raise ParseError(f"table {table_id} line {lineno}: duplicate cell ({row}, {col})")
        cells[(row, col)] = value
    return TableSpec(table_id, cells)


def load_errata() -> dict[tuple[str, str, str], Erratum]:
    text = resources.files(__name__).joinpath("data", "errata.txt").read_text("utf-8")
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 5:
            raise ParseError(f"errata line {lineno}: expected table|row|col|value|reason")
        e = Erratum(*parts)
        out[(e.table_id, e.row, e.col)] = e
    return out


def parse_gpm_list(text: str, d: int) -> list[Gpm]:
    if text == EMPTY_TOKEN:
        return []
    out = []
    for token in text.split():
        m, n = token.split(",")
        out.append(Gpm(int(m) % d, int(n) % d))
    return out


def representatives(d: int) -> RepresentativeCatalog:
    """LU-class representatives of 4-GBS sets, as listed in the reference tables."""
    if d not in CATALOG_TABLES:
        raise UnsupportedDimension(f"no representative catalog for d={d}")
    table_id = CATALOG_TABLES[d]
    spec = load_table(table_id)
    entries = [
        (row, GbsSet(d, parse_gpm_list(value, d)))
        for (row, col), value in spec.cells.items()
        if col == "set"
    ]
    return RepresentativeCatalog(d, entries, table_id)


def _normalize_ids(value: str, d: int) -> str:
    if value == FULL_SET_TOKEN:
        return render_ids(enumerate_mcs(d))
    return " ".join(sorted(value.split(), key=_id_key)) if value != EMPTY_TOKEN else EMPTY_TOKEN


def _id_key(label: str) -> tuple[int, int]:
    i, j = label[1:].split(",")
    return int(i), int(j)


def _normalize_gpms(value: str, d: int) -> str:
    return render_gpms(parse_gpm_list(value, d))


def _recompute_cell(table_id: str, row: str, col: str, sets: dict[str, GbsSet]) -> str:
    if table_id in MCS_TABLE_DIMENSIONS:
        d = MCS_TABLE_DIMENSIONS[table_id]
        return render_ids(mcs_containing(Gpm(int(row), int(col)), d))
    s = sets[row]
    if col == "delta":
        return render_gpms(diff_set(s))
    if col == "detector":
        return render_ids(detectors_of(s))
    if col == "yn":
        return "Y" if verdict(s).status is Status.DISTINGUISHABLE else "N"
    raise ParseError(f"table {table_id}: unknown column {col!r}")


def _normalize_expected(table_id: str, col: str, value: str, d: int) -> str:
    if table_id in MCS_TABLE_DIMENSIONS or col == "detector":
        return _normalize_ids(value, d)
    if col == "delta":
        return _normalize_gpms(value, d)
    return value


def reproduce_table(table_id: str, seed: int = 0, apply_errata: bool = False) -> TableDiff:
    """Recompute every cell of a reference table and diff it against the
    embedded transcription.

    With ``apply_errata`` the documented corrections replace the printed
    values; otherwise mismatches on those cells are annotated with the
    erratum but still reported. ``seed`` is accepted for report symmetry;
    all tables are exact.
    """
    spec = load_table(table_id)
    errata = {k[1:]: e for k, e in load_errata().items() if k[0] == table_id}
    if table_id in MCS_TABLE_DIMENSIONS:
        d = MCS_TABLE_DIMENSIONS[table_id]
        sets: dict[str, GbsSet] = {}
    else:
        d = 4 if table_id == "II" else 6
        sets = dict(representatives(d).entries)
    diff = TableDiff(table_id, 0)
    for (row, col), value in spec.cells.items():
        if col == "set":
            continue
        diff.cells += 1
        erratum = errata.get((row, col))
        if apply_errata and erratum is not None:
            value = erratum.value
            diff.corrected += 1
        expected = _normalize_expected(table_id, col, value, d)
        actual = _recompute_cell(table_id, row, col, sets)
        if expected != actual:
            diff.mismatches.append(CellMismatch(row, col, expected, actual, erratum))
    return diff
