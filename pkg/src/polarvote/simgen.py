"""Seeded synthetic gold labels and model predictions with known accuracy.

The error model is deliberately simple and explicit: each model predicts the
gold class with probability ``target_accuracy`` and otherwise a uniformly
random wrong class, independently across models and samples. Probability
rows put unnormalized weight ``1 + sharpness`` on the predicted class and 1
on every other class, so the row argmax always recovers the sampled class
for any sharpness >= 1.

Randomness comes from a single numpy PCG64 stream; the seed is recorded in
every emitted file header and identical specs produce byte-identical files.
Generation is single-threaded per spec (the draw stream is seed-ordered);
distinct specs may run concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import BadSpec, ShapeMismatch
from .ingest import GoldDataset, ModelRun, PredictionMatrix, write_dataset, write_predictions
from .schema import LabelSchema

GENERATOR_NAME = "pcg64"
PRIOR_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ModelSpec:
    target_accuracy: float
    sharpness: float = 9.0

    def __post_init__(self):
        if not (isinstance(self.target_accuracy, (int, float)) and 0.0 <= self.target_accuracy <= 1.0):
            raise BadSpec(f"target_accuracy must lie in [0, 1], got {self.target_accuracy!r}")
        if not (isinstance(self.sharpness, (int, float)) and self.sharpness >= 1.0):
            raise BadSpec(f"sharpness must be >= 1, got {self.sharpness!r}")


@dataclass(frozen=True)
class SimSpec:
    n: int
    class_priors: tuple[float, ...]
    model_specs: tuple[ModelSpec, ...]
    seed: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise BadSpec(f"n must be a positive integer, got {self.n!r}")
        priors = tuple(float(p) for p in self.class_priors)
        if len(priors) < 2:
            raise BadSpec("need at least 2 class priors")
        if any(not math.isfinite(p) or p < 0 for p in priors):
            raise BadSpec(f"class priors must be finite and nonnegative, got {priors}")
        if abs(math.fsum(priors) - 1.0) > PRIOR_SUM_TOLERANCE:
            raise BadSpec(f"class priors sum to {math.fsum(priors)!r}, expected 1")
        if not self.model_specs:
            raise BadSpec("need at least one model spec")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise BadSpec(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        object.__setattr__(self, "class_priors", priors)
        object.__setattr__(self, "model_specs", tuple(self.model_specs))

    @property
    def c(self) -> int:
        return len(self.class_priors)


def generate(spec: SimSpec) -> tuple[GoldDataset, list[ModelRun]]:
    """Draw gold labels and one ModelRun per model spec, fully seeded.

    Each run's weight is its realized empirical accuracy on the drawn gold
    labels (exactly 1.0 when target_accuracy is 1.0).
    """
    rng = np.random.default_rng(spec.seed)
    n, c = spec.n, spec.c
    priors = np.asarray(spec.class_priors)
    gold = rng.choice(c, size=n, p=priors / priors.sum())

    width = max(5, len(str(n - 1)))
    ids = tuple(f"s{i:0{width}d}" for i in range(n))
    texts = tuple(f"synthetic sample {i}" for i in range(n))
    dataset = GoldDataset(ids, texts, gold)

    runs = []
    for j, model in enumerate(spec.model_specs):
        correct = rng.random(n) < model.target_accuracy
        offsets = rng.integers(1, c, size=n)  # uniform over the c-1 wrong classes
        pred = np.where(correct, gold, (gold + offsets) % c)

        rows = np.ones((n, c))
        rows[np.arange(n), pred] = 1.0 + model.sharpness
        rows /= c + model.sharpness
        weight = float(np.mean(pred == gold))
        runs.append(ModelRun(f"model{j + 1:02d}", PredictionMatrix(rows), weight))
    return dataset, runs


def write_fixtures(spec: SimSpec, schema: LabelSchema, out_dir: str | Path) -> dict[str, Path]:
    """Generate and write a dataset TSV plus one prediction file per model."""
    if spec.c != schema.count:
        raise ShapeMismatch(f"spec has {spec.c} class priors, schema has {schema.count} labels")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    dataset, runs = generate(spec)

    paths: dict[str, Path] = {}
    dataset_path = out_dir / "dataset.tsv"
    write_dataset(dataset, schema, dataset_path)
    paths["dataset"] = dataset_path
    for run, model in zip(runs, spec.model_specs):
        pred_path = out_dir / f"{run.model_id}.jsonl"
        write_predictions(
            run,
            dataset,
            schema,
            pred_path,
            extra_header={
                "generator": GENERATOR_NAME,
                "seed": spec.seed,
                "target_accuracy": model.target_accuracy,
                "sharpness": model.sharpness,
            },
        )
        paths[run.model_id] = pred_path
    return paths
