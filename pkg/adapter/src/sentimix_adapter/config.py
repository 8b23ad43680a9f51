"""Per-family fine-tuning configuration.

Defaults reproduce the published settings of the four models behind the
ensemble. MultiFiT's max length and optimizer were never published; they
stay None rather than guessed, and its base checkpoint has no hub id.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

FAMILIES = ("multifit", "bert", "albert", "xlnet")


@dataclass(frozen=True)
class AdapterConfig:
    family: str
    batch_size: int
    learning_rate: float
    max_length: int | None
    optimizer: str | None
    epochs: int | None
    steps: int | None
    base_checkpoint: str | None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown model family {self.family!r}; expected one of {FAMILIES}")
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        if not self.learning_rate > 0:
            raise ValueError("learning_rate must be positive")
        if self.max_length is not None and self.max_length < 1:
            raise ValueError("max_length must be >= 1 when set")
        if (self.epochs is None) == (self.steps is None):
            raise ValueError("exactly one of epochs or steps must be set")

    def manifest_dict(self) -> dict:
        return {
            "family": self.family,
            "batch_size": self.batch_size,
            "learning_rate": self.learning_rate,
            "max_length": self.max_length,
            "optimizer": self.optimizer,
            "epochs": self.epochs,
            "steps": self.steps,
            "base_checkpoint": self.base_checkpoint,
        }


FAMILY_DEFAULTS: dict[str, AdapterConfig] = {
    "multifit": AdapterConfig(
        family="multifit",
        batch_size=32,
        learning_rate=1e-3,
        max_length=None,
        optimizer=None,
        epochs=20,
        steps=None,
        base_checkpoint=None,
    ),
    "bert": AdapterConfig(
        family="bert",
        batch_size=8,
        learning_rate=2e-5,
        max_length=128,
        optimizer="AdamW",
        epochs=30,
        steps=None,
        base_checkpoint="bert-base-multilingual-cased",
    ),
    "albert": AdapterConfig(
        family="albert",
        batch_size=16,
        learning_rate=2e-5,
        max_length=256,
        optimizer="AdamW",
        epochs=30,
        steps=None,
        base_checkpoint="albert-xxlarge-v2",
    ),
    "xlnet": AdapterConfig(
        family="xlnet",
        batch_size=16,
        learning_rate=2e-5,
        max_length=256,
        optimizer=None,
        epochs=None,
        steps=8000,
        base_checkpoint="xlnet-large-cased",
    ),
}


def default_config(family: str) -> AdapterConfig:
    try:
        return FAMILY_DEFAULTS[family]
    except KeyError:
        raise ValueError(f"unknown model family {family!r}; expected one of {FAMILIES}") from None


def config_with_overrides(family: str, **overrides) -> AdapterConfig:
    """Family defaults with any non-None overrides applied."""
    filtered = {k: v for k, v in overrides.items() if v is not None}
    if {"epochs", "steps"} & filtered.keys():
        # An explicit budget replaces the default budget entirely.
        filtered.setdefault("epochs", None)
        filtered.setdefault("steps", None)
    return replace(default_config(family), **filtered)
