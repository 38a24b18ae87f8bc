"""Strict ingestion of gold datasets and per-model prediction files.

Dataset files are UTF-8 TSV with the exact header ``id<TAB>text<TAB>label``;
tabs inside the text column are not supported. Prediction files are UTF-8
line-delimited JSON: the first record is a header object
``{"model_id": ..., "weight": ..., "labels": [...]}`` and every following
record is ``{"id": ..., "probs": [...]}`` with probabilities in header label
order. Alignment against the dataset is strict: a missing or extra sample is
an error, never a silent skip, because dropped samples would corrupt metric
comparisons across models.

Loaded structures are immutable (frozen dataclasses over read-only arrays)
and safe to share across threads; distinct files may be loaded concurrently.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    BadProbability,
    DuplicateId,
    DuplicateModelId,
    EmptyBundle,
    ExtraSample,
    LabelOutOfRange,
    MalformedRow,
    MissingSample,
    ShapeMismatch,
    UnknownLabel,
    WeightOutOfRange,
)
from .schema import LabelSchema, parse_label

DATASET_HEADER = ("id", "text", "label")

# Row sums inside this band are auto-normalized (absorbs float round-trip
# noise); anything outside is a hard error rather than a silent rescale.
ROW_SUM_TOLERANCE = 1e-6


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


@dataclass(frozen=True)
class GoldDataset:
    """Sample ids, raw texts, and gold label ids, in file row order."""

    ids: tuple[str, ...]
    texts: tuple[str, ...]
    gold: np.ndarray  # shape (n,), int64

    def __post_init__(self):
        if not (len(self.ids) == len(self.texts) == self.gold.shape[0]):
            raise ShapeMismatch(
                f"ids/texts/gold lengths differ: {len(self.ids)}/{len(self.texts)}/{self.gold.shape[0]}"
            )
        if len(set(self.ids)) != len(self.ids):
            seen: set[str] = set()
            for sample_id in self.ids:
                if sample_id in seen:
                    raise DuplicateId(sample_id)
                seen.add(sample_id)
        object.__setattr__(self, "gold", _frozen(np.asarray(self.gold, dtype=np.int64)))

    @property
    def n(self) -> int:
        return len(self.ids)


@dataclass(frozen=True)
class PredictionMatrix:
    """Per-sample class-probability rows (n x c), row-normalized."""

    probs: np.ndarray

    def __post_init__(self):
        probs = np.asarray(self.probs, dtype=np.float64)
        if probs.ndim != 2:
            raise ShapeMismatch(f"prediction matrix must be 2-D, got shape {probs.shape}")
        if not np.all(np.isfinite(probs)):
            raise BadProbability("<matrix>", "non-finite entry")
        if np.any(probs < 0):
            raise BadProbability("<matrix>", "negative entry")
        if probs.shape[0] and np.any(np.abs(probs.sum(axis=1) - 1.0) > ROW_SUM_TOLERANCE):
            raise BadProbability("<matrix>", f"row sum outside 1 +/- {ROW_SUM_TOLERANCE}")
        object.__setattr__(self, "probs", _frozen(probs))

    @property
    def n(self) -> int:
        return self.probs.shape[0]

    @property
    def c(self) -> int:
        return self.probs.shape[1]


@dataclass(frozen=True)
class ModelRun:
    """One model's identity, aligned predictions, and selection weight.

    The weight is the model's accuracy on its training split, declared in the
    prediction-file header; it drives both top-k selection and soft voting.
    """

    model_id: str
    predictions: PredictionMatrix
    weight: float

    def __post_init__(self):
        if not self.model_id:
            raise ShapeMismatch("model_id must be non-empty")
        _check_weight(self.weight)
        object.__setattr__(self, "weight", float(self.weight))


@dataclass(frozen=True)
class Bundle:
    """A gold dataset plus validated, mutually consistent model runs."""

    dataset: GoldDataset
    runs: tuple[ModelRun, ...]
    schema: LabelSchema


def _check_weight(weight) -> float:
    if isinstance(weight, bool) or not isinstance(weight, (int, float)):
        raise WeightOutOfRange(weight)
    weight = float(weight)
    if not math.isfinite(weight) or not 0.0 <= weight <= 1.0:
        raise WeightOutOfRange(weight)
    return weight


def load_dataset(path: str | Path, schema: LabelSchema) -> GoldDataset:
    """Load and validate a gold TSV dataset, preserving row order."""
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines or tuple(lines[0].split("\t")) != DATASET_HEADER:
        raise MalformedRow(1, "expected header 'id<TAB>text<TAB>label'", path=str(path))

    ids: list[str] = []
    texts: list[str] = []
    gold: list[int] = []
    seen: set[str] = set()
    for line_no, line in enumerate(lines[1:], start=2):
        fields = line.split("\t")
        if len(fields) != 3:
            raise MalformedRow(
                line_no,
                f"expected 3 tab-separated fields, got {len(fields)} (tabs inside text are not supported)",
                path=str(path),
            )
        sample_id, text, label = fields
        if not sample_id:
            raise MalformedRow(line_no, "empty sample id", path=str(path))
        if sample_id in seen:
            raise DuplicateId(sample_id, path=str(path), line=line_no)
        seen.add(sample_id)
        try:
            label_id = parse_label(label, schema)
        except UnknownLabel as err:
            raise UnknownLabel(err.name, path=str(path), line=line_no) from None
        ids.append(sample_id)
        texts.append(text)
        gold.append(label_id)

    return GoldDataset(tuple(ids), tuple(texts), np.array(gold, dtype=np.int64))


def write_dataset(dataset: GoldDataset, schema: LabelSchema, path: str | Path) -> None:
    """Serialize a dataset back to TSV with canonical label names."""
    with Path(path).open("w", encoding="utf-8") as handle:
        handle.write("\t".join(DATASET_HEADER) + "\n")
        for sample_id, text, label_id in zip(dataset.ids, dataset.texts, dataset.gold):
            handle.write(f"{sample_id}\t{text}\t{schema.label_of(label_id)}\n")


def _parse_json_record(raw: str, line_no: int, path: str) -> dict:
    try:
        record = json.loads(raw)
    except json.JSONDecodeError as err:
        raise MalformedRow(line_no, f"invalid JSON: {err.msg}", path=path) from None
    if not isinstance(record, dict):
        raise MalformedRow(line_no, "record is not a JSON object", path=path)
    return record


def _header_permutation(header_labels, schema: LabelSchema, path: str) -> list[int]:
    """Map header label order onto schema order; any permutation is accepted."""
    if not isinstance(header_labels, list) or len(header_labels) != schema.count:
        raise ShapeMismatch(
            f"header labels must list all {schema.count} schema labels, got {header_labels!r}",
            path=path,
            line=1,
        )
    positions = []
    for name in header_labels:
        if not isinstance(name, str):
            raise MalformedRow(1, f"non-string label in header: {name!r}", path=path)
        try:
            positions.append(int(parse_label(name, schema)))
        except UnknownLabel as err:
            raise UnknownLabel(err.name, path=path, line=1) from None
    if len(set(positions)) != schema.count:
        raise ShapeMismatch("header labels repeat a schema label", path=path, line=1)
    return positions


def load_predictions(path: str | Path, dataset: GoldDataset, schema: LabelSchema) -> ModelRun:
    """Load one model's prediction file, aligned to ``dataset.ids``.

    Rows are reordered to dataset order, probability columns are re-mapped
    to schema order by label name, and every row is renormalized to sum to
    exactly 1 within 1e-12 (rows with sums outside 1 +/- 1e-6 are rejected).
    """
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines:
        raise MalformedRow(1, "missing header record", path=str(path))

    header = _parse_json_record(lines[0], 1, str(path))
    missing_keys = {"model_id", "weight", "labels"} - header.keys()
    if missing_keys:
        raise MalformedRow(1, f"header lacks keys: {sorted(missing_keys)}", path=str(path))
    model_id = header["model_id"]
    if not isinstance(model_id, str) or not model_id:
        raise MalformedRow(1, f"model_id must be a non-empty string, got {model_id!r}", path=str(path))
    weight = _check_weight(header["weight"])
    positions = _header_permutation(header["labels"], schema, str(path))

    c = schema.count
    rows: dict[str, list[float]] = {}
    for line_no, line in enumerate(lines[1:], start=2):
        if not line.strip():
            raise MalformedRow(line_no, "blank line", path=str(path))
        record = _parse_json_record(line, line_no, str(path))
        if "id" not in record or "probs" not in record:
            raise MalformedRow(line_no, "record lacks 'id' or 'probs'", path=str(path))
        sample_id = record["id"]
        if not isinstance(sample_id, str) or not sample_id:
            raise MalformedRow(line_no, f"id must be a non-empty string, got {sample_id!r}", path=str(path))
        probs = record["probs"]
        if not isinstance(probs, list) or len(probs) != c:
            raise MalformedRow(line_no, f"probs must be a list of {c} numbers", path=str(path))
        if sample_id in rows:
            raise DuplicateId(sample_id, path=str(path), line=line_no)
        row = [0.0] * c
        for value, schema_pos in zip(probs, positions):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise BadProbability(sample_id, f"non-numeric entry {value!r}", path=str(path), line=line_no)
            if not math.isfinite(value):
                raise BadProbability(sample_id, f"non-finite entry {value!r}", path=str(path), line=line_no)
            if value < 0:
                raise BadProbability(sample_id, f"negative entry {value!r}", path=str(path), line=line_no)
            row[schema_pos] = float(value)
        total = math.fsum(row)
        if abs(total - 1.0) > ROW_SUM_TOLERANCE:
            raise BadProbability(
                sample_id, f"row sum {total!r} outside 1 +/- {ROW_SUM_TOLERANCE}", path=str(path), line=line_no
            )
        rows[sample_id] = row

    known_ids = set(dataset.ids)
    for sample_id in rows:
        if sample_id not in known_ids:
            raise ExtraSample(sample_id, path=str(path))
    matrix = np.empty((dataset.n, c), dtype=np.float64)
    for i, sample_id in enumerate(dataset.ids):
        row = rows.get(sample_id)
        if row is None:
            raise MissingSample(sample_id, path=str(path))
        matrix[i] = row
    if matrix.shape[0]:
        matrix /= matrix.sum(axis=1, keepdims=True)

    return ModelRun(model_id=model_id, predictions=PredictionMatrix(matrix), weight=weight)


def write_predictions(
    run: ModelRun,
    dataset: GoldDataset,
    schema: LabelSchema,
    path: str | Path,
    extra_header: dict | None = None,
) -> None:
    """Serialize a model run to the line-delimited prediction format."""
    header = {"model_id": run.model_id, "weight": run.weight, "labels": list(schema.labels)}
    if extra_header:
        header.update(extra_header)
    with Path(path).open("w", encoding="utf-8") as handle:
        handle.write(json.dumps(header) + "\n")
        for sample_id, row in zip(dataset.ids, run.predictions.probs):
            handle.write(json.dumps({"id": sample_id, "probs": [float(p) for p in row]}) + "\n")


def validate_bundle(runs, dataset: GoldDataset, schema: LabelSchema) -> Bundle:
    """Check that all runs agree with the dataset and schema shapes."""
    runs = tuple(runs)
    if not runs:
        raise EmptyBundle("no model runs supplied")
    seen: set[str] = set()
    for run in runs:
        if run.model_id in seen:
            raise DuplicateModelId(run.model_id)
        seen.add(run.model_id)
        if run.predictions.n != dataset.n:
            raise ShapeMismatch(
                f"model {run.model_id!r} has {run.predictions.n} rows, dataset has {dataset.n}"
            )
        if run.predictions.c != schema.count:
            raise ShapeMismatch(
                f"model {run.model_id!r} has {run.predictions.c} classes, schema has {schema.count}"
            )
    if dataset.n and int(dataset.gold.max()) >= schema.count:
        raise LabelOutOfRange(f"gold label {int(dataset.gold.max())} outside schema of {schema.count}")
    return Bundle(dataset=dataset, runs=runs, schema=schema)
