"""Transformer fine-tuning adapter for the sentimix prediction-file boundary."""

from .config import FAMILIES, FAMILY_DEFAULTS, AdapterConfig, config_with_overrides, default_config
from .corpus import LABELS, Example, read_corpus
from .export import export_predictions
from .finetune import AdapterError, CheckpointUnavailableError, finetune, read_manifest

__version__ = "0.1.0"

__all__ = [
    "AdapterConfig",
    "AdapterError",
    "CheckpointUnavailableError",
    "Example",
    "FAMILIES",
    "FAMILY_DEFAULTS",
    "LABELS",
    "config_with_overrides",
    "default_config",
    "export_predictions",
    "finetune",
    "read_corpus",
    "read_manifest",
]
