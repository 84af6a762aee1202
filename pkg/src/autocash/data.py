"""Tabular classification datasets: loading, typing, imputation, splitting.

A column is numeric iff every non-missing cell parses as a finite plain
decimal literal (no exponent or locale forms); anything else makes it
categorical. The target column is always categorical. Missing cells are
the configured missing token (default ``"?"``) or the empty string and are
stored as ``None`` until imputation fills them.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DataError

Cell = float | str | None

NUMERIC = "numeric"
CATEGORICAL = "categorical"

_NUMERIC_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$")


@dataclass(frozen=True)
class Attribute:
    name: str
    kind: str  # NUMERIC or CATEGORICAL


@dataclass(frozen=True)
class Dataset:
    """Immutable typed table with a designated categorical target column."""

    name: str
    attributes: tuple[Attribute, ...]
    rows: tuple[tuple[Cell, ...], ...]
    target_index: int

    def __post_init__(self):
        if not 0 <= self.target_index < len(self.attributes):
            raise DataError(f"target index {self.target_index} out of range")
        if self.attributes[self.target_index].kind != CATEGORICAL:
            raise DataError("target attribute must be categorical")
        width = len(self.attributes)
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise DataError(f"row {i} has {len(row)} cells, expected {width}")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    def column(self, index: int) -> tuple[Cell, ...]:
        return tuple(row[index] for row in self.rows)

    def target_values(self) -> tuple[str, ...]:
        return self.column(self.target_index)  # type: ignore[return-value]

    def target_classes(self) -> tuple[str, ...]:
        """Distinct non-missing target tokens, sorted."""
        return tuple(sorted({v for v in self.target_values() if v is not None}))

    def predictor_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n_attributes) if i != self.target_index)

    def has_missing(self) -> bool:
        return any(cell is None for row in self.rows for cell in row)


def parse_numeric(token: str) -> float | None:
    """Return the float value of a plain decimal literal, else None."""
    if _NUMERIC_RE.match(token.strip()):
        value = float(token)
        if np.isfinite(value):
            return value
    return None


def load_csv(
    path: str | Path,
    target: str | int,
    *,
    delimiter: str = ",",
    missing_token: str = "?",
    name: str | None = None,
) -> Dataset:
    """Load a header-first CSV and type its columns.

    ``target`` is a column name, or a column index when no header matches.
    """
    path = Path(path)
    if not path.is_file():
        raise DataError(f"no such file: {path}")
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh, delimiter=delimiter)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"{path}: empty file") from None
        raw_rows = list(reader)

    if not raw_rows:
        raise DataError(f"{path}: zero data rows")
    for i, row in enumerate(raw_rows):
        if len(row) != len(header):
            raise DataError(
                f"{path}: row {i + 2} has {len(row)} cells, expected {len(header)}"
            )

    target_index = _resolve_target(header, target, path)

    def is_missing(token: str) -> bool:
        return token == missing_token or token.strip() == ""

    attributes = []
    columns: list[list[Cell]] = []
    for j, col_name in enumerate(header):
        tokens = [row[j] for row in raw_rows]
        present = [t for t in tokens if not is_missing(t)]
        if j == target_index:
            if not present:
                raise DataError(f"{path}: target column {col_name!r} entirely missing")
            kind = CATEGORICAL
            cells: list[Cell] = [None if is_missing(t) else t for t in tokens]
        else:
            parsed = [parse_numeric(t) for t in present]
            if present and all(v is not None for v in parsed):
                kind = NUMERIC
                cells = [None if is_missing(t) else parse_numeric(t) for t in tokens]
            else:
                kind = CATEGORICAL
                cells = [None if is_missing(t) else t for t in tokens]
        attributes.append(Attribute(col_name, kind))
        columns.append(cells)

    rows = tuple(
        tuple(columns[j][i] for j in range(len(header))) for i in range(len(raw_rows))
    )
    return Dataset(
        name=name or path.stem,
        attributes=tuple(attributes),
        rows=rows,
        target_index=target_index,
    )


def _resolve_target(header: list[str], target: str | int, path: Path) -> int:
    if isinstance(target, int):
        index = target
    elif target in header:
        index = header.index(target)
    else:
        try:
            index = int(target)
        except ValueError:
            raise DataError(f"{path}: target column {target!r} not found") from None
    if not 0 <= index < len(header):
        raise DataError(f"{path}: target column index {index} out of range")
    return index


def write_csv(
    d: Dataset,
    path: str | Path,
    *,
    delimiter: str = ",",
    missing_token: str = "?",
) -> None:
    """Write a dataset back to CSV; numeric cells use round-trip repr."""
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter=delimiter)
        writer.writerow([a.name for a in d.attributes])
        for row in d.rows:
            writer.writerow(
                [
                    missing_token if cell is None else (repr(cell) if isinstance(cell, float) else cell)
                    for cell in row
                ]
            )


def impute_missing(d: Dataset, seed: int) -> Dataset:
    """Replace each missing cell with a seeded uniform draw from the
    non-missing values of the same column."""
    if not d.has_missing():
        return d
    rng = np.random.default_rng(seed)
    columns = [list(d.column(j)) for j in range(d.n_attributes)]
    for j, cells in enumerate(columns):
        holes = [i for i, c in enumerate(cells) if c is None]
        if not holes:
            continue
        donors = [c for c in cells if c is not None]
        if not donors:
            raise DataError(
                f"{d.name}: column {d.attributes[j].name!r} entirely missing"
            )
        for i in holes:
            cells[i] = donors[int(rng.integers(len(donors)))]
    rows = tuple(
        tuple(columns[j][i] for j in range(d.n_attributes)) for i in range(d.n_rows)
    )
    return Dataset(d.name, d.attributes, rows, d.target_index)


def split_stratified(
    d: Dataset, train_fraction: float, seed: int
) -> tuple[Dataset, Dataset]:
    """Stratified partition into (train, test).

    Each class contributes round(train_fraction * count) rows to the train
    part (at least 1; a single-row class goes to train entirely).
    """
    if not 0.0 < train_fraction < 1.0:
        raise DataError(f"train fraction {train_fraction} outside (0, 1)")
    if d.n_rows < 2:
        raise DataError(f"{d.name}: need at least 2 rows to split")

    by_class: dict[str, list[int]] = {}
    for i, label in enumerate(d.target_values()):
        by_class.setdefault(str(label), []).append(i)

    rng = np.random.default_rng(seed)
    train_idx: list[int] = []
    test_idx: list[int] = []
    for label in sorted(by_class):
        indices = by_class[label]
        order = rng.permutation(len(indices))
        n = len(indices)
        if n == 1:
            n_train = 1
        else:
            n_train = int(np.floor(train_fraction * n + 0.5))
            n_train = min(max(n_train, 1), n)
        for pos, k in enumerate(order):
            (train_idx if pos < n_train else test_idx).append(indices[int(k)])

    train_idx.sort()
    test_idx.sort()
    return (
        _subset(d, train_idx, f"{d.name}/train"),
        _subset(d, test_idx, f"{d.name}/test"),
    )


def _subset(d: Dataset, indices: list[int], name: str) -> Dataset:
    return Dataset(name, d.attributes, tuple(d.rows[i] for i in indices), d.target_index)
