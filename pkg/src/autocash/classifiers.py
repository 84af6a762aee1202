"""Native classifier implementations backing the algorithm portfolio.

All models are deterministic given (data, config, seed), expose the
sorted target-token class order, and answer per-class probability
vectors summing to 1. Distance and gradient based models one-hot expand
categorical predictors internally; the tree models consume categorical
values natively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .data import CATEGORICAL, NUMERIC, Dataset
from .errors import EvaluationError
from .tree import CAT, NUM, Feature, Node, fit_tree, predict_dist


def _classes_and_targets(train: Dataset) -> tuple[tuple[str, ...], np.ndarray]:
    classes = train.target_classes()
    index = {c: i for i, c in enumerate(classes)}
    y = np.array([index[str(v)] for v in train.target_values()], dtype=np.intp)
    return classes, y


def _tree_features(d: Dataset, rows=None) -> list[Feature]:
    rows = d.rows if rows is None else rows
    feats: list[Feature] = []
    for j in d.predictor_indices():
        cells = [row[j] for row in rows]
        if d.attributes[j].kind == NUMERIC:
            feats.append((NUM, np.array(cells, dtype=float)))
        else:
            feats.append((CAT, np.array(cells, dtype=object)))
    return feats


def _predictor_row(row, predictor_indices) -> list:
    return [row[j] for j in predictor_indices]


class OneHotEncoder:
    """Numeric columns pass through; categorical columns expand to
    indicators over the categories seen at fit time (unseen -> all zero)."""

    def __init__(self, train: Dataset):
        self.attributes = train.attributes
        self.predictors = train.predictor_indices()
        self.categories: dict[int, list[str]] = {}
        for j in self.predictors:
            if train.attributes[j].kind == CATEGORICAL:
                self.categories[j] = sorted({str(row[j]) for row in train.rows})

    def transform(self, rows) -> np.ndarray:
        columns = []
        for j in self.predictors:
            if j in self.categories:
                cats = self.categories[j]
                col = np.zeros((len(rows), len(cats)))
                lookup = {c: k for k, c in enumerate(cats)}
                for i, row in enumerate(rows):
                    k = lookup.get(str(row[j]))
                    if k is not None:
                        col[i, k] = 1.0
                columns.append(col)
            else:
                columns.append(np.array([[row[j]] for row in rows], dtype=float))
        if not columns:
            return np.zeros((len(rows), 0))
        return np.hstack(columns)


@dataclass
class FittedModel:
    alg_id: str
    classes: tuple[str, ...]
    attributes: tuple
    target_index: int

    def scores(self, rows) -> np.ndarray:
        raise NotImplementedError


@dataclass
class MajorityModel(FittedModel):
    priors: np.ndarray = field(default=None)  # type: ignore[assignment]

    def scores(self, rows) -> np.ndarray:
        return np.tile(self.priors, (len(rows), 1))


def fit_majority(train: Dataset, config: dict, seed: int) -> MajorityModel:
    classes, y = _classes_and_targets(train)
    priors = np.bincount(y, minlength=len(classes)) / len(y)
    return MajorityModel("majority-baseline", classes, train.attributes, train.target_index, priors)


@dataclass
class KnnModel(FittedModel):
    encoder: OneHotEncoder = None  # type: ignore[assignment]
    x: np.ndarray = None  # type: ignore[assignment]
    y: np.ndarray = None  # type: ignore[assignment]
    lo: np.ndarray = None  # type: ignore[assignment]
    span: np.ndarray = None  # type: ignore[assignment]
    k: int = 1
    weighting: str = "uniform"

    def _scale(self, x: np.ndarray) -> np.ndarray:
        return (x - self.lo) / self.span

    def scores(self, rows) -> np.ndarray:
        q = self._scale(self.encoder.transform(rows))
        dists = np.sqrt(((q[:, None, :] - self.x[None, :, :]) ** 2).sum(axis=2))
        probs = np.zeros((len(rows), len(self.classes)))
        for i in range(len(rows)):
            nn = np.argsort(dists[i], kind="stable")[: self.k]
            if self.weighting == "uniform":
                weights = np.ones(self.k)
            else:
                weights = 1.0 / (dists[i][nn] + 1e-12)
            for idx, w in zip(nn, weights):
                probs[i, self.y[idx]] += w
            probs[i] /= probs[i].sum()
        return probs


def fit_knn(train: Dataset, config: dict, seed: int) -> KnnModel:
    classes, y = _classes_and_targets(train)
    encoder = OneHotEncoder(train)
    x = encoder.transform(train.rows)
    lo = x.min(axis=0) if x.size else np.zeros(x.shape[1])
    hi = x.max(axis=0) if x.size else np.zeros(x.shape[1])
    span = np.where(hi > lo, hi - lo, 1.0)
    model = KnnModel("k-nearest-neighbors", classes, train.attributes, train.target_index)
    model.encoder, model.y, model.lo, model.span = encoder, y, lo, span
    model.x = (x - lo) / span
    model.k = min(int(config["k"]), train.n_rows)
    model.weighting = str(config["weighting"])
    return model


@dataclass
class TreeModel(FittedModel):
    root: Node = None  # type: ignore[assignment]

    def scores(self, rows) -> np.ndarray:
        out = np.zeros((len(rows), len(self.classes)))
        idx = [j for j in range(len(self.attributes)) if j != self.target_index]
        for i, row in enumerate(rows):
            out[i] = predict_dist(self.root, _predictor_row(row, idx))
        return out


def fit_decision_tree(train: Dataset, config: dict, seed: int) -> TreeModel:
    classes, y = _classes_and_targets(train)
    root = fit_tree(
        _tree_features(train),
        y,
        len(classes),
        max_depth=int(config["max_depth"]),
        min_split=int(config["min_split"]),
    )
    return TreeModel("decision-tree", classes, train.attributes, train.target_index, root)


@dataclass
class ForestModel(FittedModel):
    trees: list[Node] = field(default_factory=list)

    def scores(self, rows) -> np.ndarray:
        out = np.zeros((len(rows), len(self.classes)))
        idx = [j for j in range(len(self.attributes)) if j != self.target_index]
        for i, row in enumerate(rows):
            r = _predictor_row(row, idx)
            out[i] = np.mean([predict_dist(t, r) for t in self.trees], axis=0)
        return out


def fit_random_forest(train: Dataset, config: dict, seed: int) -> ForestModel:
    classes, y = _classes_and_targets(train)
    features = _tree_features(train)
    n = train.n_rows
    subsample = max(1, math.ceil(math.sqrt(len(features)))) if features else None
    trees = []
    for t in range(int(config["trees"])):
        rng = np.random.default_rng([seed, t])
        boot = rng.integers(0, n, size=n)
        boot_features = [(kind, vals[boot]) for kind, vals in features]
        trees.append(
            fit_tree(
                boot_features,
                y[boot],
                len(classes),
                max_depth=int(config["max_depth"]),
                min_split=2,
                rng=rng,
                feature_subsample=subsample,
            )
        )
    return ForestModel("random-forest", classes, train.attributes, train.target_index, trees)


@dataclass
class GaussianNbModel(FittedModel):
    encoder: OneHotEncoder = None  # type: ignore[assignment]
    priors: np.ndarray = None  # type: ignore[assignment]
    means: np.ndarray = None  # type: ignore[assignment]
    variances: np.ndarray = None  # type: ignore[assignment]

    def scores(self, rows) -> np.ndarray:
        x = self.encoder.transform(rows)
        log_joint = np.log(self.priors)[None, :] + np.stack(
            [
                -0.5 * (np.log(2 * np.pi * self.variances[c]) + (x - self.means[c]) ** 2 / self.variances[c]).sum(axis=1)
                for c in range(len(self.classes))
            ],
            axis=1,
        )
        log_joint -= log_joint.max(axis=1, keepdims=True)
        probs = np.exp(log_joint)
        return probs / probs.sum(axis=1, keepdims=True)


def fit_gaussian_nb(train: Dataset, config: dict, seed: int) -> GaussianNbModel:
    classes, y = _classes_and_targets(train)
    encoder = OneHotEncoder(train)
    x = encoder.transform(train.rows)
    n_classes = len(classes)
    means = np.zeros((n_classes, x.shape[1]))
    variances = np.zeros((n_classes, x.shape[1]))
    priors = np.zeros(n_classes)
    for c in range(n_classes):
        xc = x[y == c]
        priors[c] = len(xc) / len(y)
        means[c] = xc.mean(axis=0)
        variances[c] = xc.var(axis=0)
    global_max_var = float(x.var(axis=0).max()) if x.size else 0.0
    smoothing = 10.0 ** int(config["var_smoothing_exp"])
    variances += smoothing * global_max_var if global_max_var > 0 else smoothing
    model = GaussianNbModel("gaussian-naive-bayes", classes, train.attributes, train.target_index)
    model.encoder, model.priors, model.means, model.variances = encoder, priors, means, variances
    return model


@dataclass
class LogisticModel(FittedModel):
    encoder: OneHotEncoder = None  # type: ignore[assignment]
    mu: np.ndarray = None  # type: ignore[assignment]
    sigma: np.ndarray = None  # type: ignore[assignment]
    weights: np.ndarray = None  # type: ignore[assignment]  (n_classes, p)
    bias: np.ndarray = None  # type: ignore[assignment]

    def scores(self, rows) -> np.ndarray:
        x = (self.encoder.transform(rows) - self.mu) / self.sigma
        z = x @ self.weights.T + self.bias[None, :]
        s = 1.0 / (1.0 + np.exp(-np.clip(z, -500, 500)))
        totals = s.sum(axis=1, keepdims=True)
        safe = np.where(totals > 0, totals, 1.0)
        return np.where(totals > 0, s / safe, 1.0 / s.shape[1])


LOGISTIC_ITERATIONS = 500
LOGISTIC_STEP = 0.1


def fit_logistic(train: Dataset, config: dict, seed: int) -> LogisticModel:
    classes, y = _classes_and_targets(train)
    encoder = OneHotEncoder(train)
    x = encoder.transform(train.rows)
    mu = x.mean(axis=0) if x.size else np.zeros(x.shape[1])
    std = x.std(axis=0) if x.size else np.zeros(x.shape[1])
    sigma = np.where(std > 0, std, 1.0)
    x = (x - mu) / sigma
    n, p = x.shape
    lam = float(config["l2"])

    weights = np.zeros((len(classes), p))
    bias = np.zeros(len(classes))
    for c in range(len(classes)):
        target = (y == c).astype(float)
        w = np.zeros(p)
        b = 0.0
        for _ in range(LOGISTIC_ITERATIONS):
            z = x @ w + b
            prob = 1.0 / (1.0 + np.exp(-np.clip(z, -500, 500)))
            err = prob - target
            w -= LOGISTIC_STEP * (x.T @ err / n + lam * w / n)
            b -= LOGISTIC_STEP * float(err.mean())
        weights[c] = w
        bias[c] = b

    model = LogisticModel("logistic-regression", classes, train.attributes, train.target_index)
    model.encoder, model.mu, model.sigma, model.weights, model.bias = encoder, mu, sigma, weights, bias
    return model


FITTERS = {
    "majority-baseline": fit_majority,
    "k-nearest-neighbors": fit_knn,
    "decision-tree": fit_decision_tree,
    "random-forest": fit_random_forest,
    "gaussian-naive-bayes": fit_gaussian_nb,
    "logistic-regression": fit_logistic,
}
