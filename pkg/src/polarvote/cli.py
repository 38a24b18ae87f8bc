"""Command-line entry point.

Subcommands: validate, stats, evaluate, ensemble, simgen, report. Exit codes
are a stable scripting contract: 0 success, 1 validation failure, 2 usage
error. Every report embeds a run manifest (command line, input digests,
schema, config, tool version, timestamp); all randomness flows through an
explicit --seed and no command reads a system entropy source.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from . import __version__
from .ensemble import (
    EnsembleConfig,
    Method,
    rank_models,
    run_ensemble,
    write_ensemble_prediction,
)
from .errors import PolarvoteError
from .ingest import load_dataset, load_predictions, validate_bundle
from .metrics import evaluate, label_distribution
from .report import (
    build_manifest,
    distribution_record,
    eval_record,
    grid_record,
    manifest_footer,
    render_confusion,
    render_distribution,
    render_eval_table,
    render_grid_table,
    write_jsonl,
)
from .schema import DEFAULT_SCHEMA, load_schema
from .simgen import ModelSpec, SimSpec, write_fixtures


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _top_k(text: str) -> int | None:
    if text.lower() == "all":
        return None
    return _positive_int(text)


def _top_k_list(text: str) -> list[int | None]:
    return [_top_k(part) for part in text.split(",") if part]


def _methods(text: str) -> list[Method]:
    out = []
    for part in text.split(","):
        part = part.strip().lower()
        if part:
            try:
                out.append(Method(part))
            except ValueError:
                raise argparse.ArgumentTypeError(f"unknown method {part!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("no methods given")
    return out


def _floats(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _model_spec(text: str) -> ModelSpec:
    parts = _floats(text)
    if len(parts) == 1:
        return ModelSpec(target_accuracy=parts[0])
    if len(parts) == 2:
        return ModelSpec(target_accuracy=parts[0], sharpness=parts[1])
    raise argparse.ArgumentTypeError(f"expected 'accuracy[,sharpness]', got {text!r}")


def _add_common(parser: argparse.ArgumentParser, *, preds: str | None = None) -> None:
    parser.add_argument("--schema", metavar="PATH", help="label schema file, one label per line")
    parser.add_argument("--dataset", metavar="PATH", required=True, help="gold dataset TSV")
    if preds == "one":
        parser.add_argument("--pred", metavar="PATH", required=True, help="prediction file")
    elif preds == "many":
        parser.add_argument(
            "--pred", metavar="PATH", action="append", required=True, help="prediction file (repeatable)"
        )


def _add_report_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--average",
        choices=["micro", "macro", "weighted", "all"],
        default="all",
        help="averaging scheme for P/R/F1 columns (default: all)",
    )
    parser.add_argument("--jsonl", metavar="PATH", help="write machine-readable records here")
    parser.add_argument(
        "--full-precision", action="store_true", help="print full-precision values instead of 3 decimals"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarvote",
        description="Aggregate per-model class-probability predictions by majority or "
        "accuracy-weighted voting and report accuracy/precision/recall/F1.",
    )
    parser.add_argument("--version", action="version", version=f"polarvote {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("validate", help="check a dataset and prediction files for contract violations")
    _add_common(p, preds="many")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("stats", help="report the gold label distribution")
    _add_common(p)
    _add_report_flags(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("evaluate", help="score one model's predictions against gold labels")
    _add_common(p, preds="one")
    _add_report_flags(p)
    p.add_argument("--confusion", action="store_true", help="also print the confusion matrix")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("ensemble", help="combine prediction files and score the ensemble")
    _add_common(p, preds="many")
    _add_report_flags(p)
    p.add_argument("--method", required=True, choices=[m.value for m in Method])
    p.add_argument("--top-k", type=_top_k, default=None, metavar="N|all", help="models to keep (default: all)")
    p.add_argument("--out", metavar="PATH", help="write the ensemble prediction file here")
    p.add_argument(
        "--measured-weights",
        action="store_true",
        help="replace declared weights with each model's measured accuracy on --dataset",
    )
    p.set_defaults(func=cmd_ensemble)

    p = sub.add_parser("simgen", help="generate a seeded synthetic dataset and prediction files")
    p.add_argument("--schema", metavar="PATH")
    p.add_argument("--out-dir", required=True, metavar="DIR")
    p.add_argument("--seed", required=True, type=int, help="RNG seed (all randomness flows through this)")
    p.add_argument("--n", required=True, type=_positive_int, help="sample count")
    p.add_argument("--priors", required=True, type=_floats, metavar="P1,P2,...", help="class priors")
    p.add_argument(
        "--model",
        dest="models",
        action="append",
        required=True,
        type=_model_spec,
        metavar="ACC[,SHARPNESS]",
        help="synthetic model spec (repeatable)",
    )
    p.set_defaults(func=cmd_simgen)

    p = sub.add_parser("report", help="per-model table plus the ensemble grid over methods x top-k")
    _add_common(p, preds="many")
    _add_report_flags(p)
    p.add_argument(
        "--top-k",
        type=_top_k_list,
        default=[3, 5, None],
        metavar="K1,K2,...",
        help="top-k grid values; 'all' allowed (default: 3,5,all); entries beyond the model count are skipped",
    )
    p.add_argument(
        "--methods",
        type=_methods,
        default=[Method.MAJORITY, Method.WEIGHTED],
        metavar="M1,M2",
        help="ensemble methods for the grid (default: majority,weighted)",
    )
    p.set_defaults(func=cmd_report)
    return parser


def _load_schema(args) -> tuple:
    schema = load_schema(args.schema) if args.schema else DEFAULT_SCHEMA
    paths = [args.schema] if args.schema else []
    return schema, paths


def _manifest(args, argv, input_paths, schema, config):
    return build_manifest(["polarvote", *argv], input_paths, schema, config, __version__)


def cmd_validate(args, argv) -> int:
    failures = 0
    try:
        schema, _ = _load_schema(args)
        dataset = load_dataset(args.dataset, schema)
        print(f"dataset: OK ({args.dataset}, n={dataset.n})")
    except (PolarvoteError, OSError) as err:
        print(f"dataset: ERROR {err}", file=sys.stderr)
        return 1

    runs = []
    for pred_path in args.pred:
        try:
            run = load_predictions(pred_path, dataset, schema)
            runs.append(run)
            print(f"pred: OK ({pred_path}, model_id={run.model_id}, weight={run.weight})")
        except (PolarvoteError, OSError) as err:
            failures += 1
            print(f"pred: ERROR {err}", file=sys.stderr)
    if runs and not failures:
        try:
            validate_bundle(runs, dataset, schema)
            print(f"bundle: OK ({len(runs)} model(s), {schema.count} classes)")
        except PolarvoteError as err:
            failures += 1
            print(f"bundle: ERROR {err}", file=sys.stderr)
    return 1 if failures else 0


def cmd_stats(args, argv) -> int:
    schema, schema_paths = _load_schema(args)
    dataset = load_dataset(args.dataset, schema)
    dist = label_distribution(dataset.gold, schema)
    manifest = _manifest(args, argv, [args.dataset, *schema_paths], schema, {"command": "stats"})
    print(render_distribution(dist, schema, args.full_precision))
    print(manifest_footer(manifest))
    if args.jsonl:
        write_jsonl([manifest.to_dict(), distribution_record(dist, schema)], args.jsonl)
    return 0


def cmd_evaluate(args, argv) -> int:
    schema, schema_paths = _load_schema(args)
    dataset = load_dataset(args.dataset, schema)
    run = load_predictions(args.pred, dataset, schema)
    labels = run.predictions.probs.argmax(axis=1)
    report = evaluate(dataset.gold, labels, schema)
    manifest = _manifest(
        args,
        argv,
        [args.dataset, args.pred, *schema_paths],
        schema,
        {"command": "evaluate", "average": args.average},
    )
    print(render_eval_table([(run.model_id, report)], args.average, args.full_precision))
    if args.confusion:
        print()
        print(render_confusion(report.confusion, schema))
    print(manifest_footer(manifest))
    if args.jsonl:
        write_jsonl([manifest.to_dict(), eval_record(run.model_id, report, schema)], args.jsonl)
    return 0


def _load_bundle(args, schema):
    dataset = load_dataset(args.dataset, schema)
    runs = [load_predictions(path, dataset, schema) for path in args.pred]
    if getattr(args, "measured_weights", False):
        runs = [
            dataclasses.replace(
                run, weight=evaluate(dataset.gold, run.predictions.probs.argmax(axis=1), schema).accuracy
            )
            for run in runs
        ]
    return validate_bundle(runs, dataset, schema)


def cmd_ensemble(args, argv) -> int:
    schema, schema_paths = _load_schema(args)
    bundle = _load_bundle(args, schema)
    config = EnsembleConfig(method=Method(args.method), top_k=args.top_k)
    prediction, report = run_ensemble(bundle, config)

    ranked = rank_models(bundle.runs, config.top_k)
    manifest = _manifest(
        args,
        argv,
        [args.dataset, *args.pred, *schema_paths],
        schema,
        {
            "command": "ensemble",
            "method": config.method.value,
            "top_k": config.top_k_name,
            "tie_break": config.tie_break,
            "average": args.average,
            "measured_weights": bool(args.measured_weights),
        },
    )
    print(f"models: {', '.join(f'{r.model_id}({r.weight})' for r in ranked)}")
    print(render_grid_table([(config.method.value, config.top_k_name, report)], args.average, args.full_precision))
    if args.out:
        write_ensemble_prediction(prediction, config, bundle.dataset, schema, args.out)
        print(f"wrote: {args.out}")
    print(manifest_footer(manifest))
    if args.jsonl:
        write_jsonl(
            [manifest.to_dict(), grid_record(config.method.value, config.top_k_name, report, schema)],
            args.jsonl,
        )
    return 0


def cmd_simgen(args, argv) -> int:
    schema, _ = _load_schema(args)
    spec = SimSpec(
        n=args.n,
        class_priors=tuple(args.priors),
        model_specs=tuple(args.models),
        seed=args.seed,
    )
    paths = write_fixtures(spec, schema, args.out_dir)
    manifest = _manifest(
        args,
        argv,
        [],
        schema,
        {
            "command": "simgen",
            "seed": args.seed,
            "n": args.n,
            "priors": list(spec.class_priors),
            "models": [dataclasses.asdict(m) for m in spec.model_specs],
        },
    )
    for name, path in paths.items():
        print(f"wrote: {name} -> {path}")
    print(manifest_footer(manifest))
    return 0


def cmd_report(args, argv) -> int:
    schema, schema_paths = _load_schema(args)
    bundle = _load_bundle(args, schema)
    model_rows = []
    for run in bundle.runs:
        labels = run.predictions.probs.argmax(axis=1)
        model_rows.append((run.model_id, evaluate(bundle.dataset.gold, labels, schema)))

    ks = []
    for k in args.top_k:
        if (k is None or k <= len(bundle.runs)) and k not in ks:
            ks.append(k)
    grid_rows = []
    for method in args.methods:
        for k in ks:
            config = EnsembleConfig(method=method, top_k=k)
            _, report = run_ensemble(bundle, config)
            grid_rows.append((method.value, config.top_k_name, report))

    manifest = _manifest(
        args,
        argv,
        [args.dataset, *args.pred, *schema_paths],
        schema,
        {
            "command": "report",
            "average": args.average,
            "top_k": [("all" if k is None else k) for k in ks],
            "methods": [m.value for m in args.methods],
        },
    )
    print(render_eval_table(model_rows, args.average, args.full_precision))
    print()
    print(render_grid_table(grid_rows, args.average, args.full_precision))
    print(manifest_footer(manifest))
    if args.jsonl:
        records = [manifest.to_dict()]
        records += [eval_record(name, report, schema) for name, report in model_rows]
        records += [grid_record(method, top, report, schema) for method, top, report in grid_rows]
        write_jsonl(records, args.jsonl)
    return 0


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, argv)
    except PolarvoteError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
