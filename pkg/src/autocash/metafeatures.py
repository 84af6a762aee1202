"""The 23-entry meta-feature catalogue characterizing a dataset.

Indices 0-3 describe the target attribute, 4-8 global attribute/row
counts, 9-16 the non-target categorical attributes with the fewest and
most distinct values, and 17-22 summaries of per-numeric-attribute means
and population variances. Datasets lacking categorical (resp. numeric)
predictors get 0 sentinels for the affected entries.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .data import CATEGORICAL, NUMERIC, Dataset
from .errors import DataError

N_META_FEATURES = 23
MAX_SELECTED = 8

MF_NAMES = (
    "target_class_count",
    "target_class_entropy",
    "target_max_class_fraction",
    "target_min_class_fraction",
    "numeric_attr_count",
    "categorical_attr_count",
    "numeric_attr_fraction",
    "attr_count",
    "row_count",
    "min_cardinality_cat_class_count",
    "min_cardinality_cat_entropy",
    "min_cardinality_cat_max_fraction",
    "min_cardinality_cat_min_fraction",
    "max_cardinality_cat_class_count",
    "max_cardinality_cat_entropy",
    "max_cardinality_cat_max_fraction",
    "max_cardinality_cat_min_fraction",
    "min_numeric_mean",
    "max_numeric_mean",
    "min_numeric_variance",
    "max_numeric_variance",
    "variance_of_numeric_means",
    "variance_of_numeric_variances",
)

# Scale family of each entry: 1 entropy, 2 proportion, 3 average, 4 variance, 5 count.
MF_TYPES = (5, 1, 2, 2, 5, 5, 2, 5, 5, 5, 1, 2, 2, 5, 1, 2, 2, 3, 3, 4, 4, 4, 4)

assert len(MF_NAMES) == N_META_FEATURES and len(MF_TYPES) == N_META_FEATURES


@dataclass(frozen=True)
class MetaFeatureVector:
    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) != N_META_FEATURES:
            raise ValueError(f"expected {N_META_FEATURES} values, got {len(self.values)}")

    def __getitem__(self, index: int) -> float:
        return self.values[index]


@dataclass(frozen=True)
class MetaFeatureList:
    """Strictly increasing meta-feature indices, at most MAX_SELECTED of them."""

    indices: tuple[int, ...]

    def __post_init__(self):
        if not self.indices:
            raise ValueError("empty meta-feature list")
        if len(self.indices) > MAX_SELECTED:
            raise ValueError(f"at most {MAX_SELECTED} meta-features may be selected")
        if any(not 0 <= i < N_META_FEATURES for i in self.indices):
            raise ValueError(f"indices out of range: {self.indices}")
        if any(a >= b for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError(f"indices must be strictly increasing: {self.indices}")

    def __len__(self) -> int:
        return len(self.indices)


def entropy(proportions: list[float] | np.ndarray) -> float:
    """Base-2 Shannon entropy of a probability vector; 0*log(0) counts as 0."""
    p = np.asarray(proportions, dtype=float)
    if p.size == 0 or np.any(p < 0):
        raise ValueError("proportions must be non-negative")
    if abs(float(p.sum()) - 1.0) > 1e-9:
        raise ValueError(f"proportions sum to {p.sum()}, expected 1")
    nonzero = p[p > 0]
    return float(-(nonzero * np.log2(nonzero)).sum())


def _class_stats(tokens: tuple[str, ...]) -> tuple[float, float, float, float]:
    """(class count, entropy, max proportion, min proportion) of a token column."""
    counts = Counter(tokens)
    total = len(tokens)
    proportions = np.array([c / total for c in counts.values()])
    return (
        float(len(counts)),
        entropy(proportions),
        float(proportions.max()),
        float(proportions.min()),
    )


def compute_all(d: Dataset) -> MetaFeatureVector:
    """Compute all 23 meta-features of an imputed dataset."""
    if d.has_missing():
        raise DataError(f"{d.name}: impute missing cells before computing meta-features")

    v = [0.0] * N_META_FEATURES
    v[0], v[1], v[2], v[3] = _class_stats(d.target_values())

    numeric_idx = [
        j for j in d.predictor_indices() if d.attributes[j].kind == NUMERIC
    ]
    cat_idx = [
        j for j in d.predictor_indices() if d.attributes[j].kind == CATEGORICAL
    ]
    v[4] = float(len(numeric_idx))
    v[5] = float(len(cat_idx))
    v[7] = float(len(numeric_idx) + len(cat_idx))
    v[6] = v[4] / v[7] if v[7] else 0.0
    v[8] = float(d.n_rows)

    if cat_idx:
        cardinality = {j: len(set(d.column(j))) for j in cat_idx}
        fewest = min(cat_idx, key=lambda j: (cardinality[j], j))
        most = max(cat_idx, key=lambda j: (cardinality[j], -j))
        v[9], v[10], v[11], v[12] = _class_stats(d.column(fewest))  # type: ignore[arg-type]
        v[13], v[14], v[15], v[16] = _class_stats(d.column(most))  # type: ignore[arg-type]

    if numeric_idx:
        means = np.array([np.mean(d.column(j)) for j in numeric_idx], dtype=float)
        variances = np.array([np.var(d.column(j)) for j in numeric_idx], dtype=float)
        v[17] = float(means.min())
        v[18] = float(means.max())
        v[19] = float(variances.min())
        v[20] = float(variances.max())
        v[21] = float(np.var(means))
        v[22] = float(np.var(variances))

    return MetaFeatureVector(tuple(v))


def project(v: MetaFeatureVector, m: "MetaFeatureList | tuple[int, ...] | list[int]") -> np.ndarray:
    """Select the listed entries of a full vector, preserving index order.

    Accepts a MetaFeatureList or any strictly increasing index sequence
    (so projecting onto all 23 entries is the identity).
    """
    indices = m.indices if isinstance(m, MetaFeatureList) else tuple(m)
    if any(not 0 <= i < N_META_FEATURES for i in indices):
        raise ValueError(f"indices out of range: {indices}")
    if any(a >= b for a, b in zip(indices, indices[1:])):
        raise ValueError(f"indices must be strictly increasing: {indices}")
    return np.array([v.values[i] for i in indices], dtype=float)
