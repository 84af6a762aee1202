"""Classifier scoring: accuracy, rank-based AUC, and their product.

The composite score multiplies accuracy by AUC so that a degenerate
classifier on an unbalanced dataset (high accuracy, uninformative
ranking) scores low. Multi-class outputs are first reduced to a binary
correct/wrong labelling; the "wrongness" score fed to the AUC is one
minus the predicted-class probability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import portfolio as _portfolio
from .data import Dataset, split_stratified
from .errors import DataError, EvaluationError
from .seeding import derive_seed

TRAIN_FRACTION = 0.8


@dataclass(frozen=True)
class EvaluationOutcome:
    accuracy: float
    auc: float
    f_score: float


def accuracy(truth: Sequence, predicted: Sequence) -> float:
    """Fraction of exact matches between two equal-length label lists."""
    if len(truth) != len(predicted):
        raise ValueError(f"length mismatch: {len(truth)} vs {len(predicted)}")
    if not truth:
        raise ValueError("empty input")
    return sum(t == p for t, p in zip(truth, predicted)) / len(truth)


def auc_binary(labels: Sequence[int], scores: Sequence[float]) -> float:
    """Rank-based AUC: probability a positive (label 1) outscores a
    negative, counting ties as half."""
    y = np.asarray(labels)
    s = np.asarray(scores, dtype=float)
    if y.shape != s.shape:
        raise ValueError(f"length mismatch: {y.shape} vs {s.shape}")
    n_pos = int((y == 1).sum())
    n_neg = int((y == 0).sum())
    if n_pos == 0 or n_neg == 0:
        raise ValueError("AUC undefined: one class absent")
    ranks = _midranks(s)
    pos_rank_sum = float(ranks[y == 1].sum())
    return (pos_rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


def _midranks(scores: np.ndarray) -> np.ndarray:
    """1-based ranks with ties replaced by their group average."""
    order = np.argsort(scores, kind="stable")
    ranks = np.empty(len(scores), dtype=float)
    i = 0
    while i < len(scores):
        j = i
        while j + 1 < len(scores) and scores[order[j + 1]] == scores[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def binarize_multiclass(truth: Sequence, predicted: Sequence) -> list[int]:
    """0 where the prediction is correct, 1 where it is wrong."""
    if len(truth) != len(predicted):
        raise ValueError(f"length mismatch: {len(truth)} vs {len(predicted)}")
    return [0 if t == p else 1 for t, p in zip(truth, predicted)]


def f_score(acc: float, auc: float) -> float:
    """Composite score: accuracy times AUC."""
    if not 0.0 <= acc <= 1.0:
        raise ValueError(f"accuracy {acc} outside [0, 1]")
    if not 0.0 <= auc <= 1.0:
        raise ValueError(f"auc {auc} outside [0, 1]")
    return acc * auc


def evaluate(alg_id: str, config: dict, d: Dataset, seed: int) -> EvaluationOutcome:
    """Holdout evaluation of one configured algorithm on one dataset.

    Splits 80/20 stratified by the seed, fits on the train part, and
    scores the test part. Binary targets use the positive-class
    probability for the AUC; multi-class targets use the correct/wrong
    binarization with wrongness scores. A test fold with only one AUC
    class gets the uninformative value 0.5.
    """
    try:
        train, test = split_stratified(d, TRAIN_FRACTION, seed)
        if test.n_rows == 0:
            raise DataError(f"{d.name}: empty test part")
        model = _portfolio.fit(alg_id, config, train, seed=derive_seed(seed, "fit"))
        labels, probs = _portfolio.predict_with_scores(model, test.rows)
    except EvaluationError:
        raise
    except Exception as exc:
        raise EvaluationError(f"{alg_id}: evaluation failed: {exc}") from exc

    truth = [str(v) for v in test.target_values()]
    acc = accuracy(truth, labels)

    classes = d.target_classes()
    if len(classes) == 2:
        positive = classes[1]
        y = [1 if t == positive else 0 for t in truth]
        s = _class_scores(model.classes, probs, positive)
    else:
        y = binarize_multiclass(truth, labels)
        s = (1.0 - probs.max(axis=1)).tolist()

    try:
        auc = auc_binary(y, s)
    except ValueError:
        auc = 0.5
    return EvaluationOutcome(accuracy=acc, auc=auc, f_score=f_score(acc, auc))


def _class_scores(classes: tuple[str, ...], probs: np.ndarray, positive: str) -> list[float]:
    if positive in classes:
        return probs[:, classes.index(positive)].tolist()
    return [0.0] * probs.shape[0]
