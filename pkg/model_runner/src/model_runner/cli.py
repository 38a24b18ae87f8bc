"""Command line: train a classifier, export its predictions."""

from __future__ import annotations

import argparse
import sys

from .config import TrainConfig
from .data import DEFAULT_LABELS, load_split
from .errors import RunnerError
from .runner import FittedClassifier, export_predictions, finetune


def _labels(value: str) -> tuple[str, ...]:
    names = tuple(part.strip() for part in value.split(","))
    if len(names) < 2 or any(not name for name in names):
        raise argparse.ArgumentTypeError("need at least two non-empty comma-separated labels")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="model-runner",
        description="fine-tune transformer classifiers and export predictions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="fine-tune a checkpoint and save the fitted classifier")
    p.add_argument("--checkpoint", required=True, help="checkpoint name or local path")
    p.add_argument("--train", required=True, metavar="TSV", dest="train_split")
    p.add_argument("--dev", required=True, metavar="TSV", dest="dev_split")
    p.add_argument("--out-dir", required=True, metavar="DIR", help="where to save the classifier")
    p.add_argument("--labels", type=_labels, default=DEFAULT_LABELS, metavar="L1,L2,...")
    p.add_argument("--learning-rate", type=float, default=2e-5)
    p.add_argument("--batch-size", type=int, default=32)
    p.add_argument("--epochs", type=int, default=32)
    p.add_argument("--max-seq-len", type=int, default=512)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("export", help="write a saved classifier's predictions for a split")
    p.add_argument("--model-dir", required=True, metavar="DIR", help="saved classifier directory")
    p.add_argument("--split", required=True, metavar="TSV")
    p.add_argument("--out", required=True, metavar="FILE", help="prediction file to write")
    p.set_defaults(func=cmd_export)

    return parser


def cmd_train(args: argparse.Namespace) -> int:
    config = TrainConfig(
        checkpoint=args.checkpoint,
        learning_rate=args.learning_rate,
        batch_size=args.batch_size,
        epochs=args.epochs,
        max_seq_len=args.max_seq_len,
        seed=args.seed,
    )
    train = load_split(args.train_split, args.labels)
    dev = load_split(args.dev_split, args.labels)
    fitted = finetune(config, train, dev, labels=args.labels, verbose=True)
    saved = fitted.save(args.out_dir)
    print(f"model_id: {fitted.model_id}")
    print(f"weight: {fitted.weight}")
    print(f"saved: {saved}")
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    fitted = FittedClassifier.load(args.model_dir)
    split = load_split(args.split, fitted.labels)
    written = export_predictions(fitted, split, args.out)
    print(f"wrote: {written} ({len(split)} records, model_id={fitted.model_id})")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RunnerError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
