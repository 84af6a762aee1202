from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from autocash.data import Attribute, Dataset

DATA_DIR = Path(__file__).parent / "data"


def make_dataset(name, columns, target, kinds=None, rows_missing=()):
    """Build a Dataset from named columns.

    columns: list of (name, cells); kinds inferred (floats -> numeric)
    unless given explicitly as a dict name -> kind.
    """
    attrs = []
    for col_name, cells in columns:
        if kinds and col_name in kinds:
            kind = kinds[col_name]
        else:
            present = [c for c in cells if c is not None]
            kind = "numeric" if all(isinstance(c, (int, float)) for c in present) else "categorical"
        if col_name == target:
            kind = "categorical"
        attrs.append(Attribute(col_name, kind))
    names = [c[0] for c in columns]
    n = len(columns[0][1])
    rows = tuple(
        tuple(
            float(columns[j][1][i])
            if attrs[j].kind == "numeric" and columns[j][1][i] is not None
            else (str(columns[j][1][i]) if columns[j][1][i] is not None else None)
            for j in range(len(columns))
        )
        for i in range(n)
    )
    return Dataset(name, tuple(attrs), rows, names.index(target))


def cluster_dataset(name, n_per_class=20, n_features=3, n_classes=2, spread=0.3, seed=0, sep=4.0):
    """Well-separated Gaussian blobs; nearest-neighbor friendly."""
    rng = np.random.default_rng(seed)
    cols = [[] for _ in range(n_features)]
    labels = []
    for c in range(n_classes):
        center = rng.uniform(-1, 1, n_features) + c * sep
        for _ in range(n_per_class):
            point = center + rng.normal(0, spread, n_features)
            for j in range(n_features):
                cols[j].append(round(float(point[j]), 6))
            labels.append(f"c{c}")
    columns = [(f"x{j}", cols[j]) for j in range(n_features)] + [("label", labels)]
    return make_dataset(name, columns, target="label")


@pytest.fixture
def iris_like():
    from autocash.data import load_csv

    return load_csv(DATA_DIR / "iris_like.csv", target="species")
