"""Softmax-averaging ensemble: combine prediction sets, decide final labels.

Combination is a (weighted) arithmetic mean of the per-uid probability
vectors, taken in probability space. Uniform weights are the default; a
one-hot weight vector recovers that input set exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corpus import SentimentLabel
from .errors import EmptyInputError, UidMismatchError, WeightCountMismatchError
from .predictions import PredictionSet, ProbabilityVector


@dataclass(frozen=True)
class EnsembleConfig:
    """Optional per-model weights; None means uniform averaging.

    Zero weights are allowed (a one-hot vector recovers a single model);
    the total must be positive.
    """

    weights: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
            if not self.weights:
                raise ValueError("weights must be non-empty when given")
            if any(w < 0 for w in self.weights) or sum(self.weights) <= 0:
                raise ValueError("weights must be non-negative with a positive sum")


@dataclass(frozen=True)
class LabeledPrediction:
    uid: str
    distribution: ProbabilityVector
    label: SentimentLabel

    def __post_init__(self):
        if self.label is not classify(self.distribution):
            raise ValueError("label must be the tie-broken argmax of the distribution")


def combine(sets: list[PredictionSet], config: EnsembleConfig | None = None) -> PredictionSet:
    """Per-uid weighted mean of the input vectors.

    All sets must cover the same uid set; the output follows the first set's
    uid order and is named ensemble(<sorted input ids, comma-joined>).
    """
    if not sets:
        raise EmptyInputError("need at least one prediction set")
    k = len(sets)
    if config is not None and config.weights is not None:
        if len(config.weights) != k:
            raise WeightCountMismatchError(
                f"{len(config.weights)} weight(s) for {k} prediction set(s)"
            )
        raw = np.array(config.weights, dtype=np.float64)
        weights = raw / raw.sum()
    else:
        weights = np.full(k, 1.0 / k)

    order = sets[0].uids()
    reference = set(order)
    for pset in sets[1:]:
        uids = set(pset.uids())
        if uids != reference:
            raise UidMismatchError(
                f"prediction set {pset.model_id!r} disagrees on uids: "
                f"missing {sorted(reference - uids)}, extra {sorted(uids - reference)}"
            )

    # (k, n, 3) stack -> weighted sum over the model axis.
    stacked = np.array([[pset.vector(uid).components for uid in order] for pset in sets])
    combined = np.tensordot(weights, stacked, axes=1)

    model_id = "ensemble(" + ",".join(sorted(pset.model_id for pset in sets)) + ")"
    pairs = [(uid, ProbabilityVector.from_array(row)) for uid, row in zip(order, combined)]
    return PredictionSet(model_id, pairs)


def classify(v: ProbabilityVector) -> SentimentLabel:
    """Argmax label; exact ties break toward the lowest canonical index."""
    return SentimentLabel(int(np.argmax(v.as_array())))


def classify_set(pset: PredictionSet) -> list[LabeledPrediction]:
    return [
        LabeledPrediction(uid=uid, distribution=vector, label=classify(vector))
        for uid, vector in pset.items()
    ]
