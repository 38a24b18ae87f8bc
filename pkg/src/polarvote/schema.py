"""Label vocabulary and the canonical class order.

A LabelSchema fixes the one total order used everywhere: probability columns,
confusion-matrix axes, and deterministic tie-breaking all index classes by
position in the schema. Matching of incoming label strings is exact after
trimming surrounding whitespace and case-folding; there is no fuzzy matching
and no aliasing, so data bugs surface at ingest instead of skewing scores.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, NewType

from .errors import BadSpec, UnknownLabel

LabelId = NewType("LabelId", int)


@dataclass(frozen=True)
class LabelSchema:
    """Ordered set of distinct class labels; immutable and freely shareable."""

    labels: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        if len(labels) < 2:
            raise BadSpec(f"schema needs at least 2 labels, got {len(labels)}")
        index: dict[str, int] = {}
        for pos, name in enumerate(labels):
            if not isinstance(name, str) or not name.strip():
                raise BadSpec(f"label at position {pos} is empty or not a string")
            key = _canon(name)
            if key in index:
                raise BadSpec(f"duplicate label {name!r} at position {pos}")
            index[key] = pos
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    @property
    def count(self) -> int:
        return len(self.labels)

    def label_of(self, label_id: LabelId) -> str:
        """Render a label id back to its canonical name."""
        if not 0 <= label_id < self.count:
            raise UnknownLabel(str(label_id))
        return self.labels[label_id]


def _canon(name: str) -> str:
    return name.strip().casefold()


def parse_label(name: str, schema: LabelSchema) -> LabelId:
    """Resolve a label name to its schema index (trim + casefold, no aliases)."""
    pos = schema._index.get(_canon(name))
    if pos is None:
        raise UnknownLabel(name)
    return LabelId(pos)


# Default 3-class polarity schema; alphabetical by English name so the order
# (and therefore every downstream tie-break) is deterministic.
DEFAULT_SCHEMA = LabelSchema(("Negative", "Neutral", "Positive"))


def load_schema(path: str | Path) -> LabelSchema:
    """Read a schema file: one label per line, UTF-8, order significant."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    labels = [line.strip() for line in lines if line.strip()]
    if not labels:
        raise BadSpec("schema file contains no labels", path=str(path))
    return LabelSchema(tuple(labels))


def write_schema(schema: LabelSchema, path: str | Path) -> None:
    Path(path).write_text("".join(f"{name}\n" for name in schema.labels), encoding="utf-8")


def parse_labels(names: Iterable[str], schema: LabelSchema) -> list[LabelId]:
    return [parse_label(name, schema) for name in names]
