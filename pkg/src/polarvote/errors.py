"""Error taxonomy shared across the toolkit.

Every validation failure raises one of these, so callers (and the CLI exit
code logic) can rely on a single root class. Errors raised while reading a
file carry the path and, where known, the 1-based line number.
"""

from __future__ import annotations


class PolarvoteError(Exception):
    """Root of the toolkit's error hierarchy."""

    def __init__(self, message: str, *, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        super().__init__(message)

    def __str__(self) -> str:
        msg = super().__str__()
        if self.path is not None and self.line is not None:
            return f"{self.path}:{self.line}: {msg}"
        if self.path is not None:
            return f"{self.path}: {msg}"
        return msg


class UnknownLabel(PolarvoteError):
    def __init__(self, name: str, **ctx):
        self.name = name
        super().__init__(f"unknown label: {name!r}", **ctx)


class MalformedRow(PolarvoteError):
    def __init__(self, line: int, detail: str, *, path: str | None = None):
        super().__init__(f"malformed row: {detail}", path=path, line=line)


class DuplicateId(PolarvoteError):
    def __init__(self, sample_id: str, **ctx):
        self.sample_id = sample_id
        super().__init__(f"duplicate sample id: {sample_id!r}", **ctx)


class MissingSample(PolarvoteError):
    def __init__(self, sample_id: str, **ctx):
        self.sample_id = sample_id
        super().__init__(f"no prediction for dataset sample id: {sample_id!r}", **ctx)


class ExtraSample(PolarvoteError):
    def __init__(self, sample_id: str, **ctx):
        self.sample_id = sample_id
        super().__init__(f"prediction for unknown sample id: {sample_id!r}", **ctx)


class BadProbability(PolarvoteError):
    def __init__(self, sample_id: str, detail: str, **ctx):
        self.sample_id = sample_id
        super().__init__(f"bad probability row for id {sample_id!r}: {detail}", **ctx)


class WeightOutOfRange(PolarvoteError):
    def __init__(self, weight: float, **ctx):
        self.weight = weight
        super().__init__(f"model weight must lie in [0, 1], got {weight!r}", **ctx)


class ShapeMismatch(PolarvoteError):
    pass


class DuplicateModelId(PolarvoteError):
    def __init__(self, model_id: str, **ctx):
        self.model_id = model_id
        super().__init__(f"duplicate model id: {model_id!r}", **ctx)


class LengthMismatch(PolarvoteError):
    pass


class LabelOutOfRange(PolarvoteError):
    pass


class EmptyInput(PolarvoteError):
    pass


class EmptyBundle(PolarvoteError):
    pass


class KTooLarge(PolarvoteError):
    def __init__(self, k: int, available: int):
        self.k = k
        self.available = available
        super().__init__(f"top-k of {k} exceeds the {available} available model(s)")


class AllZeroWeights(PolarvoteError):
    pass


class BadSpec(PolarvoteError):
    pass
