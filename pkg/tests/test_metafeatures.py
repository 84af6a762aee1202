from __future__ import annotations

import math

import numpy as np
import pytest

from autocash.data import Attribute, Dataset
from autocash.errors import DataError
from autocash.metafeatures import (
    MF_NAMES,
    MF_TYPES,
    N_META_FEATURES,
    MetaFeatureList,
    MetaFeatureVector,
    compute_all,
    entropy,
    project,
)

from conftest import make_dataset


class TestEntropy:
    def test_uniform_two_classes(self):
        assert entropy([0.5, 0.5]) == 1.0

    def test_single_class(self):
        assert entropy([1.0]) == 0.0

    def test_uniform_four_classes(self):
        assert entropy([0.25] * 4) == 2.0

    def test_zero_proportions_ignored(self):
        assert entropy([0.5, 0.5, 0.0]) == 1.0

    def test_bad_sum_rejected(self):
        with pytest.raises(ValueError, match="sum"):
            entropy([0.5, 0.4])

    def test_negative_rejected(self):
        with pytest.raises(ValueError, match="non-negative"):
            entropy([1.5, -0.5])


def spreadsheet_oracle(d: Dataset) -> list[float]:
    """Independent recomputation of all 23 entries column by column."""
    from collections import Counter

    def stats(cells):
        counts = Counter(cells)
        props = [c / len(cells) for c in counts.values()]
        ent = -sum(p * math.log2(p) for p in props if p > 0)
        return [float(len(counts)), ent, max(props), min(props)]

    out = [0.0] * 23
    target = [r[d.target_index] for r in d.rows]
    out[0:4] = stats(target)
    numeric = [j for j in range(len(d.attributes))
               if j != d.target_index and d.attributes[j].kind == "numeric"]
    cats = [j for j in range(len(d.attributes))
            if j != d.target_index and d.attributes[j].kind == "categorical"]
    out[4] = float(len(numeric))
    out[5] = float(len(cats))
    out[7] = float(len(numeric) + len(cats))
    out[6] = out[4] / out[7] if out[7] else 0.0
    out[8] = float(len(d.rows))
    if cats:
        by_card = sorted(cats, key=lambda j: (len({r[j] for r in d.rows}), j))
        out[9:13] = stats([r[by_card[0]] for r in d.rows])
        most = sorted(cats, key=lambda j: (-len({r[j] for r in d.rows}), j))[0]
        out[13:17] = stats([r[most] for r in d.rows])
    if numeric:
        means = [sum(r[j] for r in d.rows) / len(d.rows) for j in numeric]
        variances = [
            sum((r[j] - m) ** 2 for r in d.rows) / len(d.rows)
            for j, m in zip(numeric, means)
        ]
        out[17], out[18] = min(means), max(means)
        out[19], out[20] = min(variances), max(variances)
        mm = sum(means) / len(means)
        out[21] = sum((m - mm) ** 2 for m in means) / len(means)
        mv = sum(variances) / len(variances)
        out[22] = sum((v - mv) ** 2 for v in variances) / len(variances)
    return out


class TestComputeAll:
    def test_iris_like_head_values(self, iris_like):
        v = compute_all(iris_like)
        assert v[0] == 3.0
        assert v[1] == pytest.approx(math.log2(3), abs=1e-12)
        assert v[2] == pytest.approx(1 / 3)
        assert v[3] == pytest.approx(1 / 3)
        assert v[4] == 4.0 and v[5] == 0.0 and v[6] == 1.0 and v[7] == 4.0
        assert v[8] == 150.0

    def test_iris_like_matches_spreadsheet_oracle(self, iris_like):
        got = compute_all(iris_like).values
        expected = spreadsheet_oracle(iris_like)
        assert got == pytest.approx(expected, rel=1e-12, abs=1e-12)

    def test_mixed_dataset_matches_spreadsheet_oracle(self):
        d = make_dataset(
            "mixed",
            [
                ("n0", [1.0, 2.0, 3.0, 4.0, 100.0, -3.5]),
                ("c0", ["u", "u", "v", "v", "v", "w"]),
                ("n1", [0.5, 0.5, 0.5, 0.5, 0.5, 0.9]),
                ("c1", ["p", "q", "p", "q", "p", "q"]),
                ("y", ["a", "a", "a", "b", "b", "c"]),
            ],
            target="y",
        )
        got = compute_all(d).values
        assert got == pytest.approx(spreadsheet_oracle(d), rel=1e-12, abs=1e-12)

    def test_no_categorical_predictors_sentinels(self, iris_like):
        v = compute_all(iris_like)
        assert v.values[9:17] == (0.0,) * 8

    def test_no_numeric_predictors_sentinels(self):
        d = make_dataset(
            "cats", [("c0", ["u", "v", "u", "v"]), ("y", ["a", "b", "a", "b"])], target="y"
        )
        v = compute_all(d)
        assert v.values[17:23] == (0.0,) * 6
        assert v[6] == 0.0 and v[4] == 0.0 and v[5] == 1.0

    def test_single_numeric_attribute_zero_spread(self):
        d = make_dataset("one", [("n", [1.0, 5.0, 9.0]), ("y", ["a", "b", "a"])], target="y")
        v = compute_all(d)
        assert v[21] == 0.0 and v[22] == 0.0
        assert v[17] == v[18] == 5.0

    def test_requires_imputed(self):
        d = make_dataset("m", [("x", [1.0, None]), ("y", ["a", "b"])], target="y")
        with pytest.raises(DataError, match="impute"):
            compute_all(d)

    def test_row_permutation_invariance(self):
        d = make_dataset(
            "p",
            [("x", [3.0, 1.0, 2.0, 5.0]), ("c", ["u", "v", "u", "w"]), ("y", ["a", "b", "a", "b"])],
            target="y",
        )
        perm = Dataset(d.name, d.attributes, tuple(d.rows[i] for i in (2, 0, 3, 1)), d.target_index)
        assert compute_all(d).values == compute_all(perm).values

    def test_scaling_one_numeric_attribute(self):
        cols = [("a", [1.0, 2.0, 3.0, 8.0]), ("b", [4.0, 4.5, 5.0, 5.5]), ("y", ["u", "v", "u", "v"])]
        base = compute_all(make_dataset("s", cols, target="y"))
        scaled_cols = [("a", [3.0, 6.0, 9.0, 24.0])] + cols[1:]
        scaled = compute_all(make_dataset("s3", scaled_cols, target="y"))
        # variance of attribute a picks up a factor of 9; proportions and counts are untouched
        assert scaled[20] == pytest.approx(9 * base[20])
        for i, t in enumerate(MF_TYPES):
            if t in (2, 5):
                assert scaled[i] == base[i]

    def test_entropy_bound(self):
        for labels in (["a", "a", "b"], ["a", "b", "c"], ["a"] * 5 + ["b"]):
            d = make_dataset("e", [("x", [float(i) for i in range(len(labels))]), ("y", labels)], target="y")
            v = compute_all(d)
            assert v[1] <= math.log2(v[0]) + 1e-12
        uniform = make_dataset("u", [("x", [1.0, 2.0]), ("y", ["a", "b"])], target="y")
        v = compute_all(uniform)
        assert v[1] == pytest.approx(math.log2(v[0]))

    def test_invariant_orderings(self, iris_like):
        v = compute_all(iris_like)
        assert v[2] >= v[3] and v[18] >= v[17] and v[20] >= v[19]
        assert v[4] + v[5] == v[7]
        assert v[6] == pytest.approx(v[4] / v[7])

    def test_type_table(self):
        groups = {t: [i for i, x in enumerate(MF_TYPES) if x == t] for t in range(1, 6)}
        assert groups[1] == [1, 10, 14]
        assert groups[2] == [2, 3, 6, 11, 12, 15, 16]
        assert groups[3] == [17, 18]
        assert groups[4] == [19, 20, 21, 22]
        assert groups[5] == [0, 4, 5, 7, 8, 9, 13]
        assert len(MF_NAMES) == N_META_FEATURES


class TestProject:
    def test_selection_semantics(self):
        v = MetaFeatureVector(tuple(float(i * 10) for i in range(23)))
        out = project(v, MetaFeatureList((0, 2, 4)))
        assert out.tolist() == [0.0, 20.0, 40.0]

    def test_identity_on_all_indices(self):
        v = MetaFeatureVector(tuple(float(i) for i in range(23)))
        assert project(v, tuple(range(23))).tolist() == list(v.values)

    def test_reference_seven_element_selection(self):
        v = MetaFeatureVector(tuple(float(i) for i in range(23)))
        out = project(v, MetaFeatureList((0, 2, 4, 6, 7, 9, 13)))
        assert out.tolist() == [0.0, 2.0, 4.0, 6.0, 7.0, 9.0, 13.0]

    def test_out_of_range_rejected(self):
        v = MetaFeatureVector(tuple(float(i) for i in range(23)))
        with pytest.raises(ValueError):
            project(v, (0, 23))

    def test_list_invariants(self):
        with pytest.raises(ValueError):
            MetaFeatureList((3, 3))
        with pytest.raises(ValueError):
            MetaFeatureList((5, 2))
        with pytest.raises(ValueError):
            MetaFeatureList(tuple(range(9)))
        assert len(MetaFeatureList(tuple(range(8)))) == 8
