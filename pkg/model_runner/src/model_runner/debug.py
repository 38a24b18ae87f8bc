"""A tiny local checkpoint for offline smoke tests.

Builds a character-level WordPiece vocabulary plus a two-layer BERT
encoder and saves both in the standard checkpoint layout, so the rest of
the package can exercise its full load/finetune/export path without any
network access or real pretrained weights.
"""

from __future__ import annotations

from pathlib import Path

import torch
from transformers import BertConfig, BertModel, BertTokenizer

SPECIALS = ("[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]")


def build_debug_checkpoint(out_dir: str | Path, seed: int = 0) -> str:
    """Write the checkpoint and return its directory path."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    chars = [chr(c) for c in range(ord("a"), ord("z") + 1)]
    vocab = (
        list(SPECIALS)
        + chars
        + ["##" + c for c in chars]
        + list("0123456789")
        + list(".,!?'\"-")
    )
    vocab_file = out / "vocab.txt"
    vocab_file.write_text("\n".join(vocab) + "\n", encoding="utf-8")
    BertTokenizer(str(vocab_file), do_lower_case=True).save_pretrained(str(out))

    config = BertConfig(
        vocab_size=len(vocab),
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=2,
        intermediate_size=64,
        max_position_embeddings=512,
    )
    torch.manual_seed(seed)
    BertModel(config).save_pretrained(str(out))
    return str(out)
