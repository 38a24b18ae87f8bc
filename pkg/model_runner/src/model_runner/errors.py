"""Error taxonomy for the runner."""

from __future__ import annotations


class RunnerError(Exception):
    """Base class for every error this package raises on purpose."""


class ConfigError(RunnerError):
    """A training hyperparameter violates its invariant."""


class DatasetError(RunnerError):
    """A split file does not satisfy the dataset contract."""

    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        super().__init__(message)
        self.path = path
        self.line = line

    def __str__(self) -> str:
        prefix = ""
        if self.path is not None:
            prefix = f"{self.path}:{self.line}: " if self.line is not None else f"{self.path}: "
        return prefix + super().__str__()


class CheckpointUnavailable(RunnerError):
    """The named checkpoint could not be loaded."""


class TokenizationFailure(RunnerError):
    """The tokenizer rejected the split's texts."""
