"""Evaluation suite: confusion matrix, accuracy, P/R/F1 under three averages.

All scores derive from integer confusion counts. Precision, recall, and F1
are computed as tp/(tp+fp), tp/(tp+fn), and 2tp/(2tp+fp+fn); the F1 form is
algebraically 2PR/(P+R) but, taken over integers, it makes the single-label
multiclass identity micro P == micro R == micro F1 == accuracy hold exactly
in floating point (pooled counts collapse to trace/n). Any score with a zero
denominator is defined as 0.

Pure functions over immutable inputs; evaluating many models concurrently is
safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import EmptyInput, LabelOutOfRange, LengthMismatch
from .schema import LabelSchema


class PRF(NamedTuple):
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class ConfusionMatrix:
    """Entry (g, p) counts samples with gold class g predicted as class p."""

    counts: np.ndarray  # shape (c, c), int64

    def __post_init__(self):
        counts = np.asarray(self.counts, dtype=np.int64)
        if counts.ndim != 2 or counts.shape[0] != counts.shape[1]:
            raise LengthMismatch(f"confusion counts must be square, got shape {counts.shape}")
        if np.any(counts < 0):
            raise LabelOutOfRange("negative confusion count")
        counts.flags.writeable = False
        object.__setattr__(self, "counts", counts)

    @property
    def n(self) -> int:
        return int(self.counts.sum())

    @property
    def c(self) -> int:
        return self.counts.shape[0]


@dataclass(frozen=True)
class EvalReport:
    accuracy: float
    per_class: tuple[PRF, ...]
    micro: PRF
    macro: PRF
    weighted: PRF
    confusion: ConfusionMatrix

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(int(s) for s in self.confusion.counts.sum(axis=1))


def _as_label_array(values: Sequence[int], c: int, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64)
    if arr.ndim != 1:
        raise LengthMismatch(f"{name} must be 1-D")
    if arr.size and (arr.min() < 0 or arr.max() >= c):
        raise LabelOutOfRange(f"{name} contains a label outside [0, {c})")
    return arr


def confusion(gold: Sequence[int], pred: Sequence[int], c: int) -> ConfusionMatrix:
    """Tally the c x c gold-by-predicted count matrix."""
    gold_arr = _as_label_array(gold, c, "gold")
    pred_arr = _as_label_array(pred, c, "pred")
    if gold_arr.shape[0] != pred_arr.shape[0]:
        raise LengthMismatch(f"gold has {gold_arr.shape[0]} labels, pred has {pred_arr.shape[0]}")
    counts = np.bincount(gold_arr * c + pred_arr, minlength=c * c).reshape(c, c)
    return ConfusionMatrix(counts)


def _prf(tp: int, fp: int, fn: int) -> PRF:
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f1 = 2 * tp / (2 * tp + fp + fn) if 2 * tp + fp + fn else 0.0
    return PRF(precision, recall, f1)


def evaluate(gold: Sequence[int], pred: Sequence[int], schema: LabelSchema) -> EvalReport:
    """Score predictions against gold labels under all averaging schemes."""
    cm = confusion(gold, pred, schema.count)
    n = cm.n
    if n == 0:
        raise EmptyInput("cannot evaluate zero samples")

    tp = np.diag(cm.counts)
    support = cm.counts.sum(axis=1)  # gold count per class
    predicted = cm.counts.sum(axis=0)  # predicted count per class
    per_class = tuple(
        _prf(int(tp[k]), int(predicted[k] - tp[k]), int(support[k] - tp[k]))
        for k in range(schema.count)
    )

    trace = int(tp.sum())
    accuracy = trace / n
    # Pooled fp == pooled fn == n - trace, so micro P/R/F1 all reduce to trace/n.
    micro = _prf(trace, n - trace, n - trace)
    macro = PRF(*(sum(scores) / schema.count for scores in zip(*per_class)))
    weighted = PRF(
        *(sum(int(s) * v for s, v in zip(support, scores)) / n for scores in zip(*per_class))
    )
    return EvalReport(
        accuracy=accuracy,
        per_class=per_class,
        micro=micro,
        macro=macro,
        weighted=weighted,
        confusion=cm,
    )


@dataclass(frozen=True)
class LabelDistribution:
    counts: tuple[int, ...]
    fractions: tuple[float, ...]

    @property
    def n(self) -> int:
        return sum(self.counts)


def label_distribution(gold: Sequence[int], schema: LabelSchema) -> LabelDistribution:
    """Per-label counts and fractions; fractions are 0 for an empty input."""
    arr = _as_label_array(gold, schema.count, "gold")
    counts = np.bincount(arr, minlength=schema.count)
    n = int(counts.sum())
    fractions = tuple((int(k) / n) if n else 0.0 for k in counts)
    return LabelDistribution(tuple(int(k) for k in counts), fractions)
