"""Training configuration."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConfigError

OPTIMIZERS = ("adamw",)


@dataclass(frozen=True)
class TrainConfig:
    """Hyperparameters for fine-tuning one checkpoint.

    Defaults: AdamW at learning rate 2e-5, batch size 32 over 32 epochs,
    sequences padded or truncated to 512 tokens.
    """

    checkpoint: str
    learning_rate: float = 2e-5
    batch_size: int = 32
    epochs: int = 32
    max_seq_len: int = 512
    optimizer: str = "adamw"
    seed: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.checkpoint, str) or not self.checkpoint.strip():
            raise ConfigError("checkpoint name must be a non-empty string")
        lr = self.learning_rate
        if isinstance(lr, bool) or not isinstance(lr, (int, float)) or not lr > 0:
            raise ConfigError(f"learning rate must be positive, got {lr!r}")
        for name in ("batch_size", "epochs", "max_seq_len"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if self.optimizer not in OPTIMIZERS:
            raise ConfigError(f"optimizer must be one of {OPTIMIZERS}, got {self.optimizer!r}")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ConfigError(f"seed must be an integer, got {self.seed!r}")

    def to_dict(self) -> dict:
        return {
            "checkpoint": self.checkpoint,
            "learning_rate": self.learning_rate,
            "batch_size": self.batch_size,
            "epochs": self.epochs,
            "max_seq_len": self.max_seq_len,
            "optimizer": self.optimizer,
            "seed": self.seed,
        }
