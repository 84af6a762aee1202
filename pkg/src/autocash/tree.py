"""CART-style decision trees over mixed numeric/categorical features.

Numeric features split at midpoints between consecutive distinct sorted
values (x <= t goes left); categorical features split by equality against
one value (x == v goes left). Splits minimize Gini impurity; scans run in
feature order with strict improvement, so ties resolve to the earliest
candidate and trees are deterministic given the rng. Nodes are plain
dicts, which keeps trees JSON-serializable.
"""

from __future__ import annotations

import numpy as np

NUM = "num"
CAT = "cat"

# Feature: (kind, values) with a float array for NUM and an object array for CAT.
Feature = tuple[str, np.ndarray]
Node = dict


def fit_tree(
    features: list[Feature],
    y: np.ndarray,
    n_classes: int,
    *,
    max_depth: int,
    min_split: int = 2,
    rng: np.random.Generator | None = None,
    feature_subsample: int | None = None,
) -> Node:
    """Grow one tree; leaf distributions cover all n_classes."""
    y = np.asarray(y, dtype=np.intp)
    return _build(features, y, n_classes, 0, max_depth, min_split, rng, feature_subsample)


def _leaf(counts: np.ndarray) -> Node:
    total = counts.sum()
    dist = counts / total if total else np.full(len(counts), 1.0 / len(counts))
    return {"kind": "leaf", "dist": dist.tolist()}


def _build(features, y, n_classes, depth, max_depth, min_split, rng, feature_subsample) -> Node:
    counts = np.bincount(y, minlength=n_classes).astype(float)
    n = len(y)
    if depth >= max_depth or n < min_split or counts.max() == n:
        return _leaf(counts)

    if feature_subsample is not None and feature_subsample < len(features):
        candidates = sorted(rng.choice(len(features), size=feature_subsample, replace=False).tolist())
    else:
        candidates = range(len(features))

    # Zero-gain splits are allowed (XOR-style data has no first-level gain);
    # recursion still terminates because both split sides are nonempty.
    best_score = -np.inf
    best = None  # (feature index, kind, threshold-or-value, left mask)

    for j in candidates:
        kind, values = features[j]
        if kind == NUM:
            found = _best_numeric_split(values, y, n_classes, best_score)
        else:
            found = _best_categorical_split(values, y, n_classes, best_score)
        if found is not None:
            score, cut, mask = found
            best_score = score
            best = (j, kind, cut, mask)

    if best is None:
        return _leaf(counts)

    j, kind, cut, mask = best
    left_features = [(k, v[mask]) for k, v in features]
    right_features = [(k, v[~mask]) for k, v in features]
    left = _build(left_features, y[mask], n_classes, depth + 1, max_depth, min_split, rng, feature_subsample)
    right = _build(right_features, y[~mask], n_classes, depth + 1, max_depth, min_split, rng, feature_subsample)
    if kind == NUM:
        return {"kind": NUM, "feature": int(j), "threshold": float(cut), "left": left, "right": right}
    return {"kind": CAT, "feature": int(j), "value": cut, "left": left, "right": right}


def _class_matrix(y: np.ndarray, n_classes: int) -> np.ndarray:
    onehot = np.zeros((len(y), n_classes))
    onehot[np.arange(len(y)), y] = 1.0
    return onehot


def _best_numeric_split(values, y, n_classes, score_to_beat):
    """Scan all midpoint thresholds; return (score, threshold, left mask)
    for the best split strictly beating score_to_beat, else None.

    Score is sum over sides of (squared class counts / side size); larger
    means lower weighted Gini impurity.
    """
    n = len(y)
    order = np.argsort(values, kind="stable")
    xs = values[order]
    boundaries = np.nonzero(xs[:-1] != xs[1:])[0]
    if len(boundaries) == 0:
        return None
    cum = _class_matrix(y[order], n_classes).cumsum(axis=0)
    total = cum[-1]
    left = cum[boundaries]
    right = total - left
    n_left = (boundaries + 1).astype(float)
    scores = (left**2).sum(axis=1) / n_left + (right**2).sum(axis=1) / (n - n_left)
    k = int(np.argmax(scores))
    if not scores[k] > score_to_beat:
        return None
    threshold = (xs[boundaries[k]] + xs[boundaries[k] + 1]) / 2.0
    return float(scores[k]), threshold, values <= threshold


def _best_categorical_split(values, y, n_classes, score_to_beat):
    """Scan equality partitions against each distinct value, in sorted order."""
    n = len(y)
    uniques = sorted(set(values.tolist()))
    if len(uniques) < 2:
        return None
    total = np.bincount(y, minlength=n_classes).astype(float)
    best = None
    for v in uniques:
        mask = values == v
        n_left = int(mask.sum())
        left = np.bincount(y[mask], minlength=n_classes).astype(float)
        right = total - left
        score = float((left**2).sum()) / n_left + float((right**2).sum()) / (n - n_left)
        if score > score_to_beat:
            score_to_beat = score
            best = (score, v, mask)
    return best


def predict_dist(node: Node, row) -> np.ndarray:
    """Class distribution at the leaf this row falls into."""
    while node["kind"] != "leaf":
        j = node["feature"]
        if node["kind"] == NUM:
            node = node["left"] if row[j] <= node["threshold"] else node["right"]
        else:
            node = node["left"] if row[j] == node["value"] else node["right"]
    return np.asarray(node["dist"])
