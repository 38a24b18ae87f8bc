"""Majority voting, accuracy-weighted soft voting, and top-k model selection.

Majority voting: each model casts one hard vote, the argmax of its
probability row (row-level ties go to the lowest label index); the most
frequent class wins. Weighted voting: class scores are the weight-multiplied
sums of the per-model probability rows and the argmax wins, so a single
model, any positive rescaling of the weights, or duplicated models cannot
change the outcome ordering.

Score ties are resolved by a fixed, model-order-independent policy
(``mass-then-index``): first the greatest total probability mass summed over
the contributing models for the tied labels, then the lowest label index.
Aggregation always iterates runs in model_id-sorted order, so float
summation – and therefore every output label – is invariant under
permutations of the input run list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import AllZeroWeights, BadSpec, EmptyBundle, KTooLarge, ShapeMismatch, WeightOutOfRange
from .ingest import Bundle, GoldDataset, ModelRun
from .metrics import EvalReport, evaluate
from .schema import LabelSchema

TIE_BREAK = "mass-then-index"


class Method(Enum):
    MAJORITY = "majority"
    WEIGHTED = "weighted"


@dataclass(frozen=True)
class EnsembleConfig:
    method: Method
    top_k: int | None = None  # None selects all available models
    tie_break: str = TIE_BREAK

    def __post_init__(self):
        if not isinstance(self.method, Method):
            raise BadSpec(f"method must be a Method, got {self.method!r}")
        if self.top_k is not None and (not isinstance(self.top_k, int) or self.top_k < 1):
            raise BadSpec(f"top_k must be a positive integer or None, got {self.top_k!r}")
        if self.tie_break != TIE_BREAK:
            raise BadSpec(f"unsupported tie_break policy: {self.tie_break!r}")

    @property
    def top_k_name(self) -> str:
        return "all" if self.top_k is None else str(self.top_k)


@dataclass(frozen=True)
class EnsemblePrediction:
    labels: np.ndarray  # shape (n,), int64
    scores: np.ndarray  # shape (n, c); the aggregate that produced each argmax
    contributing_models: tuple[str, ...]

    def __post_init__(self):
        labels = np.asarray(self.labels, dtype=np.int64)
        scores = np.asarray(self.scores, dtype=np.float64)
        labels.flags.writeable = False
        scores.flags.writeable = False
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "scores", scores)


def rank_models(runs: Sequence[ModelRun], k: int | None) -> list[ModelRun]:
    """The k highest-weight runs, descending by weight, ties by model_id."""
    runs = list(runs)
    if not runs:
        raise EmptyBundle("no model runs supplied")
    if k is None:
        k = len(runs)
    if k < 1 or k > len(runs):
        raise KTooLarge(k, len(runs))
    return sorted(runs, key=lambda run: (-run.weight, run.model_id))[:k]


def _stacked(runs: Sequence[ModelRun]) -> list[ModelRun]:
    if not runs:
        raise EmptyBundle("no model runs supplied")
    shape = runs[0].predictions.probs.shape
    for run in runs:
        if run.predictions.probs.shape != shape:
            raise ShapeMismatch(
                f"model {run.model_id!r} shape {run.predictions.probs.shape} != {shape}"
            )
    # Canonical summation order: output labels must not depend on run order.
    return sorted(runs, key=lambda run: run.model_id)


def _total_mass(ordered: Sequence[ModelRun]) -> np.ndarray:
    mass = np.zeros(ordered[0].predictions.probs.shape)
    for run in ordered:
        mass += run.predictions.probs
    return mass


def _resolve_labels(scores: np.ndarray, mass: np.ndarray) -> np.ndarray:
    """Argmax per row; exact ties fall to greatest mass, then lowest index."""
    top = scores.max(axis=1, keepdims=True)
    tied = scores == top
    tied_mass = np.where(tied, mass, -np.inf)
    winners = tied & (tied_mass == tied_mass.max(axis=1, keepdims=True))
    return winners.argmax(axis=1).astype(np.int64)


def majority_vote(runs: Sequence[ModelRun], tie_break: str = TIE_BREAK) -> EnsemblePrediction:
    """Hard voting: scores are vote counts, the most frequent class wins."""
    _check_tie_break(tie_break)
    ordered = _stacked(runs)
    n, c = ordered[0].predictions.probs.shape
    counts = np.zeros((n, c))
    for run in ordered:
        votes = run.predictions.probs.argmax(axis=1)  # argmax takes the lowest index on ties
        counts[np.arange(n), votes] += 1.0
    labels = _resolve_labels(counts, _total_mass(ordered))
    return EnsemblePrediction(labels, counts, tuple(run.model_id for run in runs))


def weighted_vote(
    runs: Sequence[ModelRun],
    tie_break: str = TIE_BREAK,
    weights: Sequence[float] | None = None,
) -> EnsemblePrediction:
    """Soft voting: scores are weight-multiplied sums of probability rows.

    ``weights`` overrides each run's declared weight (position-matched to
    ``runs``); override values need only be finite and nonnegative.
    """
    _check_tie_break(tie_break)
    if not runs:
        raise EmptyBundle("no model runs supplied")
    if weights is None:
        weights = [run.weight for run in runs]
    weights = [float(w) for w in weights]
    if len(weights) != len(runs):
        raise ShapeMismatch(f"{len(weights)} weights for {len(runs)} runs")
    for w in weights:
        if not np.isfinite(w) or w < 0:
            raise WeightOutOfRange(w)
    if sum(weights) == 0.0:
        raise AllZeroWeights("all ensemble weights are zero")

    by_id = sorted(zip(runs, weights), key=lambda pair: pair[0].model_id)
    ordered = _stacked(runs)
    scores = np.zeros(ordered[0].predictions.probs.shape)
    for run, w in by_id:
        scores += w * run.predictions.probs
    labels = _resolve_labels(scores, _total_mass(ordered))
    return EnsemblePrediction(labels, scores, tuple(run.model_id for run in runs))


def _check_tie_break(tie_break: str) -> None:
    if tie_break != TIE_BREAK:
        raise BadSpec(f"unsupported tie_break policy: {tie_break!r}")


def run_ensemble(bundle: Bundle, config: EnsembleConfig) -> tuple[EnsemblePrediction, EvalReport]:
    """Select top-k runs, apply the configured method, score against gold."""
    selected = rank_models(bundle.runs, config.top_k)
    if config.method is Method.MAJORITY:
        prediction = majority_vote(selected, config.tie_break)
    else:
        prediction = weighted_vote(selected, config.tie_break)
    report = evaluate(bundle.dataset.gold, prediction.labels, bundle.schema)
    return prediction, report


def write_ensemble_prediction(
    prediction: EnsemblePrediction,
    config: EnsembleConfig,
    dataset: GoldDataset,
    schema: LabelSchema,
    path: str | Path,
) -> None:
    """Write the prediction-file format with scores in place of probabilities."""
    header = {
        "model_id": f"ensemble-{config.method.value}-top{config.top_k_name}",
        "method": config.method.value,
        "top_k": config.top_k_name,
        "tie_break": config.tie_break,
        "labels": list(schema.labels),
        "contributing_models": list(prediction.contributing_models),
    }
    with Path(path).open("w", encoding="utf-8") as handle:
        handle.write(json.dumps(header) + "\n")
        for sample_id, row, label_id in zip(dataset.ids, prediction.scores, prediction.labels):
            record = {
                "id": sample_id,
                "scores": [float(s) for s in row],
                "label": schema.label_of(label_id),
            }
            handle.write(json.dumps(record) + "\n")
