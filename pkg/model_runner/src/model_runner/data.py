"""Split loading.

Splits arrive as TSV files with the header `id<TAB>text<TAB>label`, the
same contract the prediction consumer enforces on its side. Labels are
matched case-insensitively after trimming and stored by their canonical
index in the label tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import DatasetError

DEFAULT_LABELS = ("Negative", "Neutral", "Positive")
HEADER = ("id", "text", "label")


@dataclass(frozen=True)
class Split:
    ids: tuple[str, ...]
    texts: tuple[str, ...]
    labels: tuple[int, ...]  # indices into the label tuple

    def __len__(self) -> int:
        return len(self.ids)


def load_split(path: str | Path, labels: tuple[str, ...] = DEFAULT_LABELS) -> Split:
    """Read one split; any contract violation raises DatasetError."""
    path = Path(path)
    canon = {name.strip().casefold(): i for i, name in enumerate(labels)}
    ids: list[str] = []
    texts: list[str] = []
    gold: list[int] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    if not lines or tuple(lines[0].split("\t")) != HEADER:
        raise DatasetError("header must be exactly id<TAB>text<TAB>label", path=str(path), line=1)
    for line_no, line in enumerate(lines[1:], start=2):
        fields = line.split("\t")
        if len(fields) != 3:
            raise DatasetError(
                f"expected 3 tab-separated fields, got {len(fields)}",
                path=str(path), line=line_no,
            )
        sample_id, text, label = fields
        if not sample_id:
            raise DatasetError("empty sample id", path=str(path), line=line_no)
        if sample_id in seen:
            raise DatasetError(f"duplicate sample id {sample_id!r}", path=str(path), line=line_no)
        seen.add(sample_id)
        key = label.strip().casefold()
        if key not in canon:
            raise DatasetError(f"unknown label {label!r}", path=str(path), line=line_no)
        ids.append(sample_id)
        texts.append(text)
        gold.append(canon[key])
    if not ids:
        raise DatasetError("split has no samples", path=str(path))
    return Split(tuple(ids), tuple(texts), tuple(gold))
