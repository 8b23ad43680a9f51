"""Fine-tune a 3-class sequence classifier and save it with a manifest."""

from __future__ import annotations

import json
import logging
from pathlib import Path

import torch

from .config import AdapterConfig
from .corpus import read_corpus

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"


class AdapterError(Exception):
    """Base error; the message always carries enough config context to retry."""


class CheckpointUnavailableError(AdapterError):
    pass


def _load_base(config: AdapterConfig):
    """Local directory first, then the model hub; failures map to one error."""
    from transformers import AutoModelForSequenceClassification, AutoTokenizer

    if config.base_checkpoint is None:
        raise CheckpointUnavailableError(
            f"{config.family} has no base checkpoint identifier; its toolchain "
            "is not bundled (use bert, albert or xlnet, or pass --base-checkpoint)"
        )
    try:
        tokenizer = AutoTokenizer.from_pretrained(config.base_checkpoint)
        model = AutoModelForSequenceClassification.from_pretrained(
            config.base_checkpoint, num_labels=3
        )
    except (OSError, ValueError) as exc:
        raise CheckpointUnavailableError(
            f"cannot load base checkpoint {config.base_checkpoint!r} "
            f"for family {config.family!r}: {exc}"
        ) from None
    return tokenizer, model


def _batches(items, size):
    for start in range(0, len(items), size):
        yield items[start : start + size]


def finetune(config: AdapterConfig, corpus_path: str | Path, out_dir: str | Path, seed: int = 0) -> Path:
    """Train on a labeled corpus file; returns the checkpoint directory.

    The checkpoint directory holds the model, the tokenizer and a manifest
    that echoes the requested configuration verbatim.
    """
    examples = [e for e in read_corpus(corpus_path)]
    unlabeled = [e.uid for e in examples if e.label is None]
    if not examples or unlabeled:
        raise AdapterError(
            f"training corpus {corpus_path} must be non-empty and fully labeled "
            f"(missing labels: {unlabeled[:5]})"
        )

    tokenizer, model = _load_base(config)
    torch.manual_seed(seed)
    device = torch.device("cuda" if torch.cuda.is_available() else "cpu")
    model.to(device)
    model.train()

    optimizer = torch.optim.AdamW(model.parameters(), lr=config.learning_rate)

    generator = torch.Generator().manual_seed(seed)
    step = 0

    def train_step(batch) -> None:
        nonlocal step
        encoded = tokenizer(
            [e.text for e in batch],
            truncation=True,
            max_length=config.max_length,
            padding=True,
            return_tensors="pt",
        ).to(device)
        labels = torch.tensor([e.label for e in batch], device=device)
        loss = torch.nn.functional.cross_entropy(model(**encoded).logits, labels)
        optimizer.zero_grad()
        loss.backward()
        optimizer.step()
        step += 1

    def shuffled_batches():
        order = torch.randperm(len(examples), generator=generator).tolist()
        return _batches([examples[i] for i in order], config.batch_size)

    # Budget: either full passes over the data or a raw step count.
    try:
        if config.epochs is not None:
            for _ in range(config.epochs):
                for batch in shuffled_batches():
                    train_step(batch)
        else:
            while step < config.steps:
                for batch in shuffled_batches():
                    train_step(batch)
                    if step >= config.steps:
                        break
    except (MemoryError, torch.cuda.OutOfMemoryError) as exc:
        raise AdapterError(f"out of memory while training {config.manifest_dict()}") from exc
    except RuntimeError as exc:
        if "out of memory" in str(exc).lower():
            raise AdapterError(f"out of memory while training {config.manifest_dict()}") from exc
        raise

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    model.save_pretrained(out_dir)
    tokenizer.save_pretrained(out_dir)
    manifest = dict(config.manifest_dict())
    manifest["trained_steps"] = step
    manifest["n_examples"] = len(examples)
    manifest["resolved_optimizer"] = "AdamW"
    out_dir.joinpath(MANIFEST_NAME).write_text(
        json.dumps(manifest, indent=2) + "\n", encoding="utf-8"
    )
    logger.info("saved checkpoint to %s after %d step(s)", out_dir, step)
    return out_dir


def read_manifest(checkpoint_dir: str | Path) -> dict:
    return json.loads(Path(checkpoint_dir).joinpath(MANIFEST_NAME).read_text(encoding="utf-8"))
