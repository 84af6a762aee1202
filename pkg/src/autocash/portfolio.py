"""The candidate algorithm portfolio: specs, domains, fit/predict surface.

Each algorithm declares its tunable hyperparameter domains together with
a fixed-width binary encoding size used by the GA tuner. The portfolio
is pluggable: everything downstream consumes AlgorithmSpec values only.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from typing import Any, Mapping

import numpy as np

from .classifiers import FITTERS, FittedModel
from .data import NUMERIC, Dataset
from .errors import EvaluationError


@dataclass(frozen=True)
class IntRange:
    lo: int
    hi: int

    def contains(self, value) -> bool:
        return isinstance(value, (int, np.integer)) and self.lo <= value <= self.hi

    def all_values(self) -> list[int]:
        return list(range(self.lo, self.hi + 1))

    def to_json(self) -> dict:
        return {"kind": "int", "lo": self.lo, "hi": self.hi}


@dataclass(frozen=True)
class Categorical:
    values: tuple[str, ...]

    def contains(self, value) -> bool:
        return value in self.values

    def all_values(self) -> list[str]:
        return list(self.values)

    def to_json(self) -> dict:
        return {"kind": "categorical", "values": list(self.values)}


@dataclass(frozen=True)
class Log2Grid:
    """Powers of two with integer exponents in [lo_exp, hi_exp]."""

    lo_exp: int
    hi_exp: int

    def contains(self, value) -> bool:
        if not isinstance(value, (int, float, np.floating)) or value <= 0:
            return False
        exp = np.log2(float(value))
        return abs(exp - round(exp)) < 1e-12 and self.lo_exp <= round(exp) <= self.hi_exp

    def all_values(self) -> list[float]:
        return [2.0**e for e in range(self.lo_exp, self.hi_exp + 1)]

    def to_json(self) -> dict:
        return {"kind": "log2", "lo_exp": self.lo_exp, "hi_exp": self.hi_exp}


Domain = IntRange | Categorical | Log2Grid


@dataclass(frozen=True)
class HyperparamSpec:
    name: str
    domain: Domain
    bits: int
    tunable: bool = True

    def __post_init__(self):
        if self.bits < 1:
            raise ValueError(f"{self.name}: bits must be >= 1")
        if isinstance(self.domain, Categorical) and 2**self.bits < len(self.domain.values):
            raise ValueError(f"{self.name}: {self.bits} bits cannot cover the value set")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "domain": self.domain.to_json(),
            "bits": self.bits,
            "tunable": self.tunable,
        }


@dataclass(frozen=True)
class AlgorithmSpec:
    id: str
    hyperparameters: tuple[HyperparamSpec, ...]
    default_config: Mapping[str, Any]

    def __post_init__(self):
        for hp in self.hyperparameters:
            if hp.name not in self.default_config:
                raise ValueError(f"{self.id}: no default for {hp.name}")
            if not hp.domain.contains(self.default_config[hp.name]):
                raise ValueError(f"{self.id}: default {hp.name} outside its domain")

    def hyperparameter(self, name: str) -> HyperparamSpec:
        for hp in self.hyperparameters:
            if hp.name == name:
                return hp
        raise KeyError(f"{self.id}: unknown hyperparameter {name!r}")

    def with_tunable(self, flags: Mapping[str, bool]) -> "AlgorithmSpec":
        hps = tuple(replace(hp, tunable=flags.get(hp.name, hp.tunable)) for hp in self.hyperparameters)
        return replace(self, hyperparameters=hps)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "hyperparameters": [hp.to_json() for hp in self.hyperparameters],
            "default_config": dict(self.default_config),
        }


def list_algorithms() -> list[AlgorithmSpec]:
    """The fixed six-algorithm portfolio, in tie-break order."""
    return [
        AlgorithmSpec("majority-baseline", (), {}),
        AlgorithmSpec(
            "k-nearest-neighbors",
            (
                HyperparamSpec("k", IntRange(1, 32), 5),
                HyperparamSpec("weighting", Categorical(("uniform", "inverse-distance")), 1),
            ),
            {"k": 5, "weighting": "uniform"},
        ),
        AlgorithmSpec(
            "decision-tree",
            (
                HyperparamSpec("max_depth", IntRange(1, 32), 5),
                HyperparamSpec("min_split", IntRange(2, 32), 5),
            ),
            {"max_depth": 10, "min_split": 2},
        ),
        AlgorithmSpec(
            "random-forest",
            (
                HyperparamSpec("trees", IntRange(10, 200), 8),
                HyperparamSpec("max_depth", IntRange(1, 32), 5),
            ),
            {"trees": 50, "max_depth": 10},
        ),
        AlgorithmSpec(
            "gaussian-naive-bayes",
            (HyperparamSpec("var_smoothing_exp", IntRange(-12, -3), 4),),
            {"var_smoothing_exp": -9},
        ),
        AlgorithmSpec(
            "logistic-regression",
            (HyperparamSpec("l2", Log2Grid(-10, 4), 4),),
            {"l2": 1.0},
        ),
    ]


def algorithm_ids() -> list[str]:
    return [spec.id for spec in list_algorithms()]


def get_algorithm(alg_id: str) -> AlgorithmSpec:
    for spec in list_algorithms():
        if spec.id == alg_id:
            return spec
    raise EvaluationError(f"unknown algorithm {alg_id!r}")


def full_config(spec: AlgorithmSpec, config: Mapping[str, Any] | None) -> dict:
    """Validate a (possibly partial) config and fill gaps with defaults."""
    merged = dict(spec.default_config)
    for name, value in (config or {}).items():
        hp = spec.hyperparameter(name)
        if not hp.domain.contains(value):
            raise EvaluationError(f"{spec.id}: {name}={value!r} outside its domain")
        merged[name] = value
    return merged


def fit(alg_id: str, config: Mapping[str, Any] | None, train: Dataset, seed: int = 0) -> FittedModel:
    """Train one portfolio algorithm; deterministic per (inputs, seed)."""
    spec = get_algorithm(alg_id)
    if train.n_rows == 0:
        raise EvaluationError(f"{alg_id}: empty training data")
    cfg = full_config(spec, config)
    try:
        return FITTERS[alg_id](train, cfg, seed)
    except EvaluationError:
        raise
    except Exception as exc:
        raise EvaluationError(f"{alg_id}: training failed: {exc}") from exc


def predict_with_scores(model: FittedModel, rows) -> tuple[list[str], np.ndarray]:
    """Predicted labels and per-class probability vectors for full-width
    rows matching the training schema (the target cell is ignored)."""
    _check_schema(model, rows)
    probs = model.scores(rows)
    labels = [model.classes[int(i)] for i in np.argmax(probs, axis=1)]
    return labels, probs


def _check_schema(model: FittedModel, rows) -> None:
    width = len(model.attributes)
    for i, row in enumerate(rows):
        if len(row) != width:
            raise EvaluationError(f"row {i} has {len(row)} cells, expected {width}")
        for j, attr in enumerate(model.attributes):
            if j == model.target_index:
                continue
            cell = row[j]
            if cell is None:
                raise EvaluationError(f"row {i} has a missing cell in {attr.name!r}")
            if attr.kind == NUMERIC and not isinstance(cell, (int, float, np.floating)):
                raise EvaluationError(f"row {i}: {attr.name!r} expects a numeric cell")


def portfolio_fingerprint(specs: list[AlgorithmSpec] | None = None) -> str:
    """Stable hash of ids, domains, defaults, and tunable flags."""
    specs = list_algorithms() if specs is None else specs
    canonical = json.dumps([s.to_json() for s in specs], sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
