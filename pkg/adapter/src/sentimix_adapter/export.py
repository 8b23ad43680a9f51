"""Export softmax predictions from a checkpoint to the prediction TSV format.

Format contract (owned by the pipeline package):
header uid/model/p_negative/p_neutral/p_positive, one row per corpus uid,
probabilities with exactly 6 decimals, LF endings, column order matching
the label indices used at training time.
"""

from __future__ import annotations

from pathlib import Path

import torch

from .corpus import read_corpus
from .finetune import MANIFEST_NAME, AdapterError, read_manifest

HEADER = "uid\tmodel\tp_negative\tp_neutral\tp_positive"


def export_predictions(
    checkpoint_dir: str | Path,
    corpus_path: str | Path,
    model_id: str,
    out_path: str | Path,
    batch_size: int = 16,
) -> Path:
    """One softmax row per uid, written to out_path. Returns out_path."""
    from transformers import AutoModelForSequenceClassification, AutoTokenizer

    checkpoint_dir = Path(checkpoint_dir)
    if not model_id:
        raise AdapterError("model_id must be non-empty")
    try:
        tokenizer = AutoTokenizer.from_pretrained(checkpoint_dir)
        model = AutoModelForSequenceClassification.from_pretrained(checkpoint_dir)
    except (OSError, ValueError) as exc:
        raise AdapterError(f"cannot load checkpoint {checkpoint_dir}: {exc}") from None

    max_length = None
    if checkpoint_dir.joinpath(MANIFEST_NAME).is_file():
        max_length = read_manifest(checkpoint_dir).get("max_length")

    examples = read_corpus(corpus_path)
    model.eval()
    rows = [HEADER]
    with torch.no_grad():
        for start in range(0, len(examples), batch_size):
            batch = examples[start : start + batch_size]
            encoded = tokenizer(
                [e.text for e in batch],
                truncation=True,
                max_length=max_length,
                padding=True,
                return_tensors="pt",
            )
            probabilities = torch.softmax(model(**encoded).logits, dim=-1).double()
            for example, row in zip(batch, probabilities):
                values = (row / row.sum()).tolist()
                cells = "\t".join(f"{value:.6f}" for value in values)
                rows.append(f"{example.uid}\t{model_id}\t{cells}")

    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with open(out_path, "w", encoding="utf-8", newline="") as sink:
        sink.write("\n".join(rows) + "\n")
    return out_path
