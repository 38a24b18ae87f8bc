from __future__ import annotations

import json

import numpy as np
import pytest

from polarvote import (
    DEFAULT_SCHEMA,
    AllZeroWeights,
    BadSpec,
    Bundle,
    EmptyBundle,
    EnsembleConfig,
    GoldDataset,
    KTooLarge,
    Method,
    ModelRun,
    PredictionMatrix,
    ShapeMismatch,
    WeightOutOfRange,
    evaluate,
    majority_vote,
    rank_models,
    run_ensemble,
    weighted_vote,
    write_ensemble_prediction,
)
from reference import ref_argmax, ref_majority, ref_weighted

SCHEMA = DEFAULT_SCHEMA


def run_of(model_id, rows, weight=0.5):
    return ModelRun(model_id, PredictionMatrix(np.asarray(rows, dtype=np.float64)), weight)


def random_runs(rng, m, n, c=3):
    runs = []
    for j in range(m):
        raw = rng.random((n, c)) + 1e-3
        rows = raw / raw.sum(axis=1, keepdims=True)
        runs.append(run_of(f"m{j:02d}", rows, float(rng.random())))
    return runs


def as_ref_majority(runs):
    return [(r.model_id, r.predictions.probs.tolist()) for r in runs]


def as_ref_weighted(runs):
    return [(r.model_id, r.predictions.probs.tolist(), r.weight) for r in runs]


def test_weighted_two_model_hand_fixture():
    m1 = run_of("m1", [[0.5, 0.3, 0.2]], 0.6)
    m2 = run_of("m2", [[0.2, 0.6, 0.2]], 0.4)
    pred = weighted_vote([m1, m2])
    assert pred.scores[0].tolist() == [0.38, 0.42, 0.20]
    assert pred.scores[0].tolist() == [
        0.6 * 0.5 + 0.4 * 0.2,
        0.6 * 0.3 + 0.4 * 0.6,
        0.6 * 0.2 + 0.4 * 0.2,
    ]
    assert pred.labels.tolist() == [1]


def test_majority_unanimity():
    runs = [run_of(f"m{j}", [[0.1, 0.1, 0.8]]) for j in range(3)]
    pred = majority_vote(runs)
    assert pred.labels.tolist() == [2]
    assert pred.scores[0].tolist() == [0.0, 0.0, 3.0]


def test_majority_vote_tie_broken_by_probability_mass():
    # Five votes (Neg, Neg, Pos, Neu, Pos); class-0 mass 1.7 vs class-2 mass 1.9,
    # so the 2-2 vote tie goes to Positive.
    rows = [
        ("m1", [0.6, 0.3, 0.1]),
        ("m2", [0.7, 0.1, 0.2]),
        ("m3", [0.1, 0.3, 0.6]),
        ("m4", [0.2, 0.5, 0.3]),
        ("m5", [0.1, 0.2, 0.7]),
    ]
    runs = [run_of(mid, [row]) for mid, row in rows]
    pred = majority_vote(runs)
    assert pred.labels.tolist() == [2]
    assert pred.scores[0].tolist() == [2.0, 1.0, 2.0]


def test_majority_tie_with_equal_mass_takes_lowest_index():
    a = run_of("a", [[0.5, 0.2, 0.3]])
    b = run_of("b", [[0.3, 0.2, 0.5]])
    assert majority_vote([a, b]).labels.tolist() == [0]


def test_row_level_argmax_tie_takes_lowest_label():
    assert majority_vote([run_of("m1", [[0.5, 0.5, 0.0]])]).labels.tolist() == [0]
    assert majority_vote([run_of("m1", [[0.0, 0.5, 0.5]])]).labels.tolist() == [1]


def test_single_model_is_identity_for_both_methods():
    rng = np.random.default_rng(3)
    (run,) = random_runs(rng, 1, 40)
    expected = run.predictions.probs.argmax(axis=1)
    assert majority_vote([run]).labels.tolist() == expected.tolist()
    assert weighted_vote([run]).labels.tolist() == expected.tolist()


def test_rank_models_stated_tie_rule():
    probs = PredictionMatrix(np.full((2, 3), 1 / 3))
    a = ModelRun("A", probs, 0.9)
    b = ModelRun("B", probs, 0.7)
    c = ModelRun("C", probs, 0.7)
    assert [r.model_id for r in rank_models([c, b, a], 2)] == ["A", "B"]
    assert [r.model_id for r in rank_models([c, b, a], None)] == ["A", "B", "C"]
    assert [r.model_id for r in rank_models([c, b, a], 3)] == ["A", "B", "C"]


def test_rank_models_rejects_bad_k():
    probs = PredictionMatrix(np.full((1, 3), 1 / 3))
    runs = [ModelRun("A", probs, 0.5)]
    with pytest.raises(KTooLarge):
        rank_models(runs, 2)
    with pytest.raises(KTooLarge):
        rank_models(runs, 0)
    with pytest.raises(EmptyBundle):
        rank_models([], 1)


def test_empty_run_list_rejected():
    with pytest.raises(EmptyBundle):
        majority_vote([])
    with pytest.raises(EmptyBundle):
        weighted_vote([])


def test_weight_override_validation():
    rng = np.random.default_rng(5)
    runs = random_runs(rng, 2, 5)
    with pytest.raises(ShapeMismatch):
        weighted_vote(runs, weights=[1.0])
    with pytest.raises(WeightOutOfRange):
        weighted_vote(runs, weights=[1.0, -0.5])
    with pytest.raises(AllZeroWeights):
        weighted_vote(runs, weights=[0.0, 0.0])
    # a zero among positive weights is allowed
    pred = weighted_vote(runs, weights=[0.0, 2.5])
    expected = runs[1].predictions.probs.argmax(axis=1)
    assert pred.labels.tolist() == expected.tolist()


def test_permutation_invariance():
    rng = np.random.default_rng(7)
    for _ in range(50):
        runs = random_runs(rng, int(rng.integers(2, 6)), int(rng.integers(1, 30)))
        perm = rng.permutation(len(runs))
        shuffled = [runs[i] for i in perm]
        base_m, perm_m = majority_vote(runs), majority_vote(shuffled)
        base_w, perm_w = weighted_vote(runs), weighted_vote(shuffled)
        assert base_m.labels.tolist() == perm_m.labels.tolist()
        assert base_w.labels.tolist() == perm_w.labels.tolist()
        # scores are summed in a canonical model-id order, so they match bit for bit
        assert base_w.scores.tolist() == perm_w.scores.tolist()
        # contributing_models reflects caller order by contract
        assert perm_w.contributing_models == tuple(r.model_id for r in shuffled)


def test_scale_invariance():
    rng = np.random.default_rng(9)
    for _ in range(50):
        runs = random_runs(rng, int(rng.integers(2, 6)), int(rng.integers(1, 30)))
        weights = [r.weight for r in runs]
        base = weighted_vote(runs).labels.tolist()
        for lam in (0.1, 1.0, 10.0):
            scaled = weighted_vote(runs, weights=[lam * w for w in weights])
            assert scaled.labels.tolist() == base


def test_duplicate_model_identity():
    rng = np.random.default_rng(13)
    for _ in range(50):
        (run,) = random_runs(rng, 1, int(rng.integers(1, 30)))
        copies = [run] * int(rng.integers(2, 6))
        expected = run.predictions.probs.argmax(axis=1).tolist()
        assert majority_vote(copies).labels.tolist() == expected
        assert weighted_vote(copies).labels.tolist() == expected


def test_weighted_equals_majority_on_one_hot_equal_weights():
    rng = np.random.default_rng(17)
    for _ in range(50):
        runs = random_runs(rng, int(rng.integers(1, 6)), int(rng.integers(1, 30)))
        one_hot = []
        for run in runs:
            votes = run.predictions.probs.argmax(axis=1)
            rows = np.zeros_like(run.predictions.probs)
            rows[np.arange(len(votes)), votes] = 1.0
            one_hot.append(run_of(run.model_id, rows, 0.5))
        maj = majority_vote(one_hot)
        soft = weighted_vote(one_hot, weights=[1.0] * len(one_hot))
        assert maj.labels.tolist() == soft.labels.tolist()


def test_adding_one_hot_vote_for_winner_keeps_winner():
    rng = np.random.default_rng(19)
    for _ in range(50):
        runs = random_runs(rng, int(rng.integers(1, 5)), int(rng.integers(1, 20)))
        before = majority_vote(runs).labels
        rows = np.zeros((len(before), 3))
        rows[np.arange(len(before)), before] = 1.0
        booster = run_of("zz-boost", rows)
        after = majority_vote(runs + [booster]).labels
        assert after.tolist() == before.tolist()


def test_matches_reference_on_random_bundles():
    rng = np.random.default_rng(21)
    for _ in range(50):
        runs = random_runs(rng, int(rng.integers(1, 6)), int(rng.integers(1, 40)))
        assert majority_vote(runs).labels.tolist() == ref_majority(as_ref_majority(runs))
        got = weighted_vote(runs)
        want_labels, want_scores = ref_weighted(as_ref_weighted(runs))
        assert got.labels.tolist() == want_labels
        assert got.scores.tolist() == want_scores


def make_bundle(rng, m=4, n=30):
    runs = random_runs(rng, m, n)
    gold = rng.integers(0, 3, size=n)
    ids = tuple(f"s{i}" for i in range(n))
    texts = tuple(f"text {i}" for i in range(n))
    dataset = GoldDataset(ids, texts, gold)
    return Bundle(dataset=dataset, runs=tuple(runs), schema=SCHEMA)


def test_run_ensemble_selects_top_k_and_scores():
    rng = np.random.default_rng(25)
    bundle = make_bundle(rng)
    config = EnsembleConfig(method=Method.WEIGHTED, top_k=2)
    prediction, report = run_ensemble(bundle, config)
    top2 = rank_models(bundle.runs, 2)
    direct = weighted_vote(top2)
    assert prediction.labels.tolist() == direct.labels.tolist()
    assert prediction.contributing_models == tuple(r.model_id for r in top2)
    again = evaluate(bundle.dataset.gold, prediction.labels, SCHEMA)
    assert report.accuracy == again.accuracy


def test_run_ensemble_majority_route():
    rng = np.random.default_rng(27)
    bundle = make_bundle(rng)
    prediction, _ = run_ensemble(bundle, EnsembleConfig(method=Method.MAJORITY))
    direct = majority_vote(rank_models(bundle.runs, None))
    assert prediction.labels.tolist() == direct.labels.tolist()


def test_write_ensemble_prediction_format(tmp_path):
    rng = np.random.default_rng(33)
    bundle = make_bundle(rng, m=3, n=5)
    config = EnsembleConfig(method=Method.WEIGHTED, top_k=None)
    prediction, _ = run_ensemble(bundle, config)
    out = tmp_path / "ens.jsonl"
    write_ensemble_prediction(prediction, config, bundle.dataset, SCHEMA, out)

    lines = out.read_text(encoding="utf-8").splitlines()
    header = json.loads(lines[0])
    assert header["method"] == "weighted"
    assert header["top_k"] == "all"
    assert header["tie_break"] == "mass-then-index"
    assert header["labels"] == list(SCHEMA.labels)
    assert header["contributing_models"] == list(prediction.contributing_models)
    records = [json.loads(line) for line in lines[1:]]
    assert [r["id"] for r in records] == list(bundle.dataset.ids)
    for record, row, label_id in zip(records, prediction.scores, prediction.labels):
        assert record["scores"] == row.tolist()
        assert record["label"] == SCHEMA.label_of(int(label_id))


def test_ensemble_config_validation():
    with pytest.raises(BadSpec):
        EnsembleConfig(method="majority")  # must be a Method member
    with pytest.raises(BadSpec):
        EnsembleConfig(method=Method.MAJORITY, top_k=0)
    with pytest.raises(BadSpec):
        EnsembleConfig(method=Method.MAJORITY, tie_break="coin-flip")
    assert EnsembleConfig(method=Method.MAJORITY).top_k_name == "all"
    assert EnsembleConfig(method=Method.MAJORITY, top_k=3).top_k_name == "3"


def test_reference_argmax_agrees_with_numpy():
    rng = np.random.default_rng(39)
    rows = rng.random((200, 3))
    for row in rows:
        assert ref_argmax(row.tolist()) == int(np.argmax(row))
