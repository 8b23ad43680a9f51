"""Evaluation metrics: confusion matrix, per-class P/R/F1, macro scores, accuracy.

Conventions: rows of the confusion matrix are gold classes, columns are
predicted classes, both in canonical label order. Macro averaging is the
unweighted mean over the three classes, for precision and recall as well as
F1. Any 0/0 quantity is defined as 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .corpus import Corpus, SentimentLabel
from .ensemble import EnsembleConfig, classify_set, LabeledPrediction
from .errors import EmptyEvaluationError, MissingGoldLabelError, UidMismatchError
from .predictions import PredictionSet, validate_against

_LABELS = list(SentimentLabel)


class ClassPRF(NamedTuple):
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class ConfusionMatrix:
    """3x3 gold-vs-predicted counts (rows gold, columns predicted)."""

    counts: np.ndarray

    def __post_init__(self):
        counts = np.asarray(self.counts)
        if counts.shape != (3, 3):
            raise ValueError(f"confusion matrix must be 3x3, got {counts.shape}")
        if not np.issubdtype(counts.dtype, np.integer):
            raise ValueError("confusion matrix counts must be integers")
        if (counts < 0).any():
            raise ValueError("confusion matrix counts must be non-negative")
        counts = counts.astype(np.int64, copy=True)
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConfusionMatrix):
            return NotImplemented
        return bool(np.array_equal(self.counts, other.counts))

    @property
    def n(self) -> int:
        return int(self.counts.sum())

    @property
    def trace(self) -> int:
        return int(np.trace(self.counts))

    def cell(self, gold: SentimentLabel, predicted: SentimentLabel) -> int:
        return int(self.counts[gold, predicted])

    def as_lists(self) -> list[list[int]]:
        return [[int(c) for c in row] for row in self.counts]


@dataclass(frozen=True)
class EvaluationReport:
    per_class: dict[SentimentLabel, ClassPRF]
    macro_precision: float
    macro_recall: float
    macro_f1: float
    accuracy: float
    confusion: ConfusionMatrix
    n: int
    model_id: str
    ensemble_config: EnsembleConfig | None = None

    def to_json_dict(self) -> dict:
        return {
            "model_id": self.model_id,
            "n": self.n,
            "accuracy": self.accuracy,
            "macro_precision": self.macro_precision,
            "macro_recall": self.macro_recall,
            "macro_f1": self.macro_f1,
            "per_class": {
                label.canonical_name: {
                    "precision": prf.precision,
                    "recall": prf.recall,
                    "f1": prf.f1,
                }
                for label, prf in self.per_class.items()
            },
            "confusion": self.confusion.as_lists(),
            "ensemble_config": (
                None
                if self.ensemble_config is None
                else {
                    "weights": (
                        None
                        if self.ensemble_config.weights is None
                        else list(self.ensemble_config.weights)
                    )
                }
            ),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    def to_table(self) -> str:
        lines = [
            f"Model: {self.model_id}   n={self.n}",
            "",
            f"{'':<10}{'F1':>8}{'P':>8}{'R':>8}{'Acc':>8}",
            f"{'overall':<10}{self.macro_f1:>8.3f}{self.macro_precision:>8.3f}"
            f"{self.macro_recall:>8.3f}{self.accuracy:>8.3f}",
            "",
            f"{'Class':<10}{'Precision':>10}{'Recall':>8}{'F1':>8}",
        ]
        for label, prf in self.per_class.items():
            lines.append(
                f"{label.canonical_name:<10}{prf.precision:>10.3f}{prf.recall:>8.3f}{prf.f1:>8.3f}"
            )
        lines.append("")
        lines.append("Confusion (rows gold, columns predicted):")
        header = "".join(f"{label.canonical_name:>10}" for label in _LABELS)
        lines.append(f"{'':<10}{header}")
        for gold in _LABELS:
            row = "".join(f"{self.confusion.cell(gold, pred):>10}" for pred in _LABELS)
            lines.append(f"{gold.canonical_name:<10}{row}")
        return "\n".join(lines) + "\n"


def confusion(gold: Corpus, predicted: list[LabeledPrediction]) -> ConfusionMatrix:
    """Tally gold-vs-predicted counts; uid sets must match exactly."""
    by_uid = {p.uid: p.label for p in predicted}
    if len(by_uid) != len(predicted) or set(by_uid) != set(gold.uids()):
        raise UidMismatchError(
            f"predictions cover {len(by_uid)} uid(s), corpus has {len(gold)}; sets must match"
        )
    counts = np.zeros((3, 3), dtype=np.int64)
    for tweet in gold:
        if tweet.gold is None:
            raise MissingGoldLabelError(f"tweet {tweet.uid!r} has no gold label")
        counts[tweet.gold, by_uid[tweet.uid]] += 1
    return ConfusionMatrix(counts)


def per_class_prf(m: ConfusionMatrix) -> dict[SentimentLabel, ClassPRF]:
    """precision = TP/column sum, recall = TP/row sum, f1 = 2PR/(P+R); 0/0 -> 0."""
    result: dict[SentimentLabel, ClassPRF] = {}
    for label in _LABELS:
        tp = m.cell(label, label)
        col = sum(m.cell(g, label) for g in _LABELS)
        row = sum(m.cell(label, p) for p in _LABELS)
        precision = tp / col if col else 0.0
        recall = tp / row if row else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        result[label] = ClassPRF(precision, recall, f1)
    return result


def summarize(
    m: ConfusionMatrix,
    model_id: str = "unknown",
    ensemble_config: EnsembleConfig | None = None,
) -> EvaluationReport:
    """Full report from a confusion matrix; macro scores are unweighted means."""
    n = m.n
    if n == 0:
        raise EmptyEvaluationError("cannot evaluate zero tweets")
    per_class = per_class_prf(m)
    prfs = list(per_class.values())
    return EvaluationReport(
        per_class=per_class,
        macro_precision=sum(p.precision for p in prfs) / 3,
        macro_recall=sum(p.recall for p in prfs) / 3,
        macro_f1=sum(p.f1 for p in prfs) / 3,
        accuracy=m.trace / n,
        confusion=m,
        n=n,
        model_id=model_id,
        ensemble_config=ensemble_config,
    )


def evaluate(
    gold: Corpus,
    pset: PredictionSet,
    ensemble_config: EnsembleConfig | None = None,
) -> EvaluationReport:
    """classify -> confusion -> summarize, after uid validation."""
    validate_against(pset, gold)
    labeled = classify_set(pset)
    return summarize(confusion(gold, labeled), model_id=pset.model_id, ensemble_config=ensemble_config)
