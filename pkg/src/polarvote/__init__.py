"""Aggregate per-model class-probability predictions for text classification.

The package combines prediction files from independently trained classifiers
by majority voting or accuracy-weighted soft voting, optionally restricted to
the top-k models by declared weight, and scores the result with accuracy,
precision, recall, and F1 under micro, macro, and weighted averaging.
"""

from __future__ import annotations

from .ensemble import (
    TIE_BREAK,
    EnsembleConfig,
    EnsemblePrediction,
    Method,
    majority_vote,
    rank_models,
    run_ensemble,
    weighted_vote,
    write_ensemble_prediction,
)
from .errors import (
    AllZeroWeights,
    BadProbability,
    BadSpec,
    DuplicateId,
    DuplicateModelId,
    EmptyBundle,
    EmptyInput,
    ExtraSample,
    KTooLarge,
    LabelOutOfRange,
    LengthMismatch,
    MalformedRow,
    MissingSample,
    PolarvoteError,
    ShapeMismatch,
    UnknownLabel,
    WeightOutOfRange,
)
from .ingest import (
    ROW_SUM_TOLERANCE,
    Bundle,
    GoldDataset,
    ModelRun,
    PredictionMatrix,
    load_dataset,
    load_predictions,
    validate_bundle,
    write_dataset,
    write_predictions,
)
from .metrics import (
    PRF,
    ConfusionMatrix,
    EvalReport,
    LabelDistribution,
    confusion,
    evaluate,
    label_distribution,
)
from .schema import (
    DEFAULT_SCHEMA,
    LabelId,
    LabelSchema,
    load_schema,
    parse_label,
    parse_labels,
    write_schema,
)
from .simgen import ModelSpec, SimSpec, generate, write_fixtures

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "TIE_BREAK",
    "ROW_SUM_TOLERANCE",
    "DEFAULT_SCHEMA",
    "LabelId",
    "LabelSchema",
    "load_schema",
    "parse_label",
    "parse_labels",
    "write_schema",
    "GoldDataset",
    "PredictionMatrix",
    "ModelRun",
    "Bundle",
    "load_dataset",
    "write_dataset",
    "load_predictions",
    "write_predictions",
    "validate_bundle",
    "PRF",
    "ConfusionMatrix",
    "EvalReport",
    "LabelDistribution",
    "confusion",
    "evaluate",
    "label_distribution",
    "Method",
    "EnsembleConfig",
    "EnsemblePrediction",
    "rank_models",
    "majority_vote",
    "weighted_vote",
    "run_ensemble",
    "write_ensemble_prediction",
    "ModelSpec",
    "SimSpec",
    "generate",
    "write_fixtures",
    "PolarvoteError",
    "UnknownLabel",
    "MalformedRow",
    "DuplicateId",
    "MissingSample",
    "ExtraSample",
    "BadProbability",
    "WeightOutOfRange",
    "ShapeMismatch",
    "DuplicateModelId",
    "LengthMismatch",
    "LabelOutOfRange",
    "EmptyInput",
    "EmptyBundle",
    "KTooLarge",
    "AllZeroWeights",
    "BadSpec",
]
