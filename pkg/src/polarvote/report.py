"""Report rendering: aligned text tables, JSONL records, and run manifests.

Tables follow the Model / Acc. / Pre. / Rec. / F1 layout (an Avg column is
inserted when all averaging schemes are shown) with values rounded to 3
decimals; machine-readable records always carry full precision. Every
report embeds a RunManifest so results can be traced back to exact inputs.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, Sequence

from .metrics import ConfusionMatrix, EvalReport, LabelDistribution, PRF
from .schema import LabelSchema

AVERAGES = ("micro", "macro", "weighted")


@dataclass(frozen=True)
class RunManifest:
    """Provenance of one CLI run: inputs, digests, config, tool version."""

    command: tuple[str, ...]
    inputs: dict[str, str]  # path -> sha256
    schema: tuple[str, ...]
    config: dict
    version: str
    timestamp: str

    def to_dict(self) -> dict:
        return {
            "type": "manifest",
            "command": list(self.command),
            "inputs": dict(self.inputs),
            "schema": list(self.schema),
            "config": dict(self.config),
            "version": self.version,
            "timestamp": self.timestamp,
        }


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def build_manifest(
    command: Sequence[str],
    input_paths: Iterable[str | Path],
    schema: LabelSchema,
    config: dict,
    version: str,
) -> RunManifest:
    return RunManifest(
        command=tuple(command),
        inputs={str(p): file_digest(p) for p in input_paths},
        schema=schema.labels,
        config=config,
        version=version,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )


def _fmt(value: float, full_precision: bool) -> str:
    return repr(float(value)) if full_precision else f"{value:.3f}"


def _render_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _prf_for(report: EvalReport, average: str) -> PRF:
    return getattr(report, average)


def render_eval_table(
    rows: Sequence[tuple[str, EvalReport]],
    average: str = "all",
    full_precision: bool = False,
) -> str:
    """One line per model (per averaging scheme when average == 'all')."""
    if average == "all":
        header = ["Model", "Avg", "Acc.", "Prec.", "Rec.", "F1"]
        body = []
        for name, report in rows:
            for avg in AVERAGES:
                prf = _prf_for(report, avg)
                body.append(
                    [name, avg]
                    + [_fmt(v, full_precision) for v in (report.accuracy, *prf)]
                )
    else:
        header = ["Model", "Acc.", "Prec.", "Rec.", "F1"]
        body = [
            [name] + [_fmt(v, full_precision) for v in (report.accuracy, *_prf_for(report, average))]
            for name, report in rows
        ]
    return _render_table(header, body)


def render_grid_table(
    rows: Sequence[tuple[str, str, EvalReport]],
    average: str = "all",
    full_precision: bool = False,
) -> str:
    """Ensemble grid: one line per (method, top-k) combination."""
    if average == "all":
        header = ["Method", "Top", "Avg", "Acc.", "Prec.", "Rec.", "F1"]
        body = []
        for method, top, report in rows:
            for avg in AVERAGES:
                prf = _prf_for(report, avg)
                body.append(
                    [method, top, avg]
                    + [_fmt(v, full_precision) for v in (report.accuracy, *prf)]
                )
    else:
        header = ["Method", "Top", "Acc.", "Prec.", "Rec.", "F1"]
        body = [
            [method, top]
            + [_fmt(v, full_precision) for v in (report.accuracy, *_prf_for(report, average))]
            for method, top, report in rows
        ]
    return _render_table(header, body)


def render_distribution(dist: LabelDistribution, schema: LabelSchema, full_precision: bool = False) -> str:
    rows = [
        [name, str(count), _fmt(fraction, full_precision)]
        for name, count, fraction in zip(schema.labels, dist.counts, dist.fractions)
    ]
    rows.append(["total", str(dist.n), _fmt(1.0 if dist.n else 0.0, full_precision)])
    return _render_table(["Label", "Count", "Fraction"], rows)


def render_confusion(cm: ConfusionMatrix, schema: LabelSchema) -> str:
    header = ["gold\\pred"] + list(schema.labels)
    rows = [
        [schema.labels[g]] + [str(int(v)) for v in cm.counts[g]]
        for g in range(cm.c)
    ]
    return _render_table(header, rows)


def eval_record(model: str, report: EvalReport, schema: LabelSchema) -> dict:
    """Full-precision machine-readable record for one evaluated model."""
    return {
        "type": "eval",
        "model": model,
        "accuracy": report.accuracy,
        "micro": report.micro._asdict(),
        "macro": report.macro._asdict(),
        "weighted": report.weighted._asdict(),
        "per_class": [
            {"label": name, "support": support, **prf._asdict()}
            for name, support, prf in zip(schema.labels, report.support, report.per_class)
        ],
        "confusion": report.confusion.counts.tolist(),
    }


def distribution_record(dist: LabelDistribution, schema: LabelSchema) -> dict:
    return {
        "type": "label_distribution",
        "total": dist.n,
        "labels": [
            {"label": name, "count": count, "fraction": fraction}
            for name, count, fraction in zip(schema.labels, dist.counts, dist.fractions)
        ],
    }


def grid_record(method: str, top: str, report: EvalReport, schema: LabelSchema) -> dict:
    record = eval_record(f"ensemble-{method}-top{top}", report, schema)
    record["type"] = "ensemble"
    record["method"] = method
    record["top_k"] = top
    return record


def write_jsonl(records: Iterable[dict], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record) + "\n")


def manifest_footer(manifest: RunManifest) -> str:
    return "manifest: " + json.dumps(manifest.to_dict(), sort_keys=True)
