"""Fine-tune transformer text classifiers and export ensemble-ready predictions."""

from .config import OPTIMIZERS, TrainConfig
from .data import DEFAULT_LABELS, Split, load_split
from .debug import build_debug_checkpoint
from .errors import (
    CheckpointUnavailable,
    ConfigError,
    DatasetError,
    RunnerError,
    TokenizationFailure,
)
from .runner import FittedClassifier, export_predictions, finetune

__version__ = "0.1.0"

__all__ = [
    "OPTIMIZERS",
    "TrainConfig",
    "DEFAULT_LABELS",
    "Split",
    "load_split",
    "build_debug_checkpoint",
    "CheckpointUnavailable",
    "ConfigError",
    "DatasetError",
    "RunnerError",
    "TokenizationFailure",
    "FittedClassifier",
    "export_predictions",
    "finetune",
    "__version__",
]
