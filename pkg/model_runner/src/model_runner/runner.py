"""Fine-tuning and prediction export.

The model is a pretrained encoder with a linear classification head on
top, trained with AdamW. Training accuracy is recorded on the fitted
classifier as its ensemble weight. Exported files use the line-delimited
prediction format consumed by the ensembling toolkit: a header object
naming the model, its weight, and the probability columns, then one
record per sample with the classifier's normalized class scores.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

import torch
import transformers
from transformers import AutoModelForSequenceClassification, AutoTokenizer

from .config import TrainConfig
from .data import DEFAULT_LABELS, Split
from .errors import CheckpointUnavailable, RunnerError, TokenizationFailure

transformers.logging.set_verbosity_error()
transformers.logging.disable_progress_bar()

RUNNER_FILE = "runner.json"


@dataclass
class FittedClassifier:
    model: torch.nn.Module
    tokenizer: object
    labels: tuple[str, ...]
    weight: float  # training accuracy
    checkpoint: str
    seed: int
    max_seq_len: int

    @property
    def model_id(self) -> str:
        # checkpoint plus seed, so exports stay traceable to their run
        return f"{Path(self.checkpoint).name}-seed{self.seed}"

    def save(self, out_dir: str | Path) -> str:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        self.model.save_pretrained(str(out))
        self.tokenizer.save_pretrained(str(out))
        meta = {
            "labels": list(self.labels),
            "weight": self.weight,
            "checkpoint": self.checkpoint,
            "seed": self.seed,
            "max_seq_len": self.max_seq_len,
        }
        (out / RUNNER_FILE).write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")
        return str(out)

    @classmethod
    def load(cls, model_dir: str | Path) -> "FittedClassifier":
        model_dir = Path(model_dir)
        meta_path = model_dir / RUNNER_FILE
        if not meta_path.exists():
            raise RunnerError(f"{model_dir} has no {RUNNER_FILE}; not a saved classifier")
        meta = json.loads(meta_path.read_text(encoding="utf-8"))
        model, tokenizer = _load_checkpoint(str(model_dir), num_labels=len(meta["labels"]))
        model.eval()
        return cls(
            model=model,
            tokenizer=tokenizer,
            labels=tuple(meta["labels"]),
            weight=float(meta["weight"]),
            checkpoint=str(meta["checkpoint"]),
            seed=int(meta["seed"]),
            max_seq_len=int(meta["max_seq_len"]),
        )


def _load_checkpoint(name: str, num_labels: int):
    try:
        tokenizer = AutoTokenizer.from_pretrained(name)
        model = AutoModelForSequenceClassification.from_pretrained(name, num_labels=num_labels)
    except (OSError, EnvironmentError, ValueError) as exc:
        raise CheckpointUnavailable(f"cannot load checkpoint {name!r}: {exc}") from exc
    return model, tokenizer


def _encode(tokenizer, texts: tuple[str, ...], max_seq_len: int) -> dict:
    # padding/truncation only; any text the tokenizer cannot handle is fatal
    try:
        return dict(
            tokenizer(
                list(texts),
                padding=True,
                truncation=True,
                max_length=max_seq_len,
                return_tensors="pt",
            )
        )
    except Exception as exc:
        raise TokenizationFailure(f"tokenization failed: {exc}") from exc


@torch.no_grad()
def _predict_probs(model, encoded: dict, batch_size: int) -> torch.Tensor:
    model.eval()
    n = encoded["input_ids"].shape[0]
    chunks = []
    for start in range(0, n, batch_size):
        batch = {k: v[start : start + batch_size] for k, v in encoded.items()}
        logits = model(**batch).logits
        chunks.append(torch.softmax(logits.double(), dim=-1))
    return torch.cat(chunks)


def _accuracy(model, encoded: dict, gold: torch.Tensor, batch_size: int) -> float:
    probs = _predict_probs(model, encoded, batch_size)
    return float((probs.argmax(dim=-1) == gold).double().mean())


def finetune(
    config: TrainConfig,
    train: Split,
    dev: Split,
    labels: tuple[str, ...] = DEFAULT_LABELS,
    verbose: bool = False,
) -> FittedClassifier:
    """Fine-tune the configured checkpoint on the train split.

    The dev split is scored after every epoch for monitoring only; the
    returned classifier's weight is its final accuracy on the train
    split itself.
    """
    torch.manual_seed(config.seed)
    model, tokenizer = _load_checkpoint(config.checkpoint, num_labels=len(labels))

    enc_train = _encode(tokenizer, train.texts, config.max_seq_len)
    enc_dev = _encode(tokenizer, dev.texts, config.max_seq_len)
    y_train = torch.tensor(train.labels, dtype=torch.long)
    y_dev = torch.tensor(dev.labels, dtype=torch.long)

    optimizer = torch.optim.AdamW(model.parameters(), lr=config.learning_rate)
    shuffle = torch.Generator().manual_seed(config.seed)
    n = len(train)
    for epoch in range(1, config.epochs + 1):
        model.train()
        perm = torch.randperm(n, generator=shuffle)
        total_loss = 0.0
        for start in range(0, n, config.batch_size):
            idx = perm[start : start + config.batch_size]
            batch = {k: v[idx] for k, v in enc_train.items()}
            optimizer.zero_grad()
            out = model(**batch, labels=y_train[idx])
            out.loss.backward()
            optimizer.step()
            total_loss += float(out.loss.detach()) * len(idx)
        if verbose:
            dev_acc = _accuracy(model, enc_dev, y_dev, config.batch_size)
            print(
                f"epoch {epoch}/{config.epochs}"
                f"  loss {total_loss / n:.4f}  dev_acc {dev_acc:.4f}"
            )

    weight = _accuracy(model, enc_train, y_train, config.batch_size)
    model.eval()
    return FittedClassifier(
        model=model,
        tokenizer=tokenizer,
        labels=tuple(labels),
        weight=weight,
        checkpoint=config.checkpoint,
        seed=config.seed,
        max_seq_len=config.max_seq_len,
    )


def export_predictions(
    classifier: FittedClassifier,
    split: Split,
    out_path: str | Path,
    batch_size: int = 32,
) -> str:
    """Write the classifier's probabilities for the split.

    The write is atomic: the file appears complete or not at all.
    """
    out_path = Path(out_path)
    encoded = _encode(classifier.tokenizer, split.texts, classifier.max_seq_len)
    probs = _predict_probs(classifier.model, encoded, batch_size)

    header = {
        "model_id": classifier.model_id,
        "weight": classifier.weight,
        "labels": list(classifier.labels),
    }
    lines = [json.dumps(header)]
    for sample_id, row in zip(split.ids, probs.tolist()):
        lines.append(json.dumps({"id": sample_id, "probs": row}))

    out_path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=str(out_path.parent), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write("\n".join(lines) + "\n")
        os.replace(tmp_name, out_path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return str(out_path)
