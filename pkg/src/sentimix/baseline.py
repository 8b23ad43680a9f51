"""Multinomial Naive Bayes over word or character n-grams.

A deliberately small, fully deterministic prediction backend so the whole
ensemble pipeline runs end to end on a laptop: no seeds, no downloads.
Priors are raw class frequencies (no prior smoothing); feature likelihoods
get Laplace smoothing; scoring runs in log space with max-subtraction, and
n-grams unseen in training are skipped.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .corpus import SentimentLabel
from .errors import AllTextsEmptyError, EmptyTrainingSetError
from .predictions import PredictionSet, ProbabilityVector
from .preprocess import CleanText

MODEL_FORMAT = "sentimix-nb"
MODEL_VERSION = 1


@dataclass(frozen=True)
class NBConfig:
    ngram_min: int = 1
    ngram_max: int = 2
    alpha: float = 1.0
    unit: str = "word"

    def __post_init__(self):
        if not 1 <= self.ngram_min <= self.ngram_max <= 5:
            raise ValueError(
                f"need 1 <= ngram_min <= ngram_max <= 5, got {self.ngram_min}..{self.ngram_max}"
            )
        if not self.alpha > 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.unit not in ("word", "char"):
            raise ValueError(f"unit must be 'word' or 'char', got {self.unit!r}")


def extract_ngrams(text: CleanText, config: NBConfig) -> Counter:
    """All contiguous n-grams (as strings) for n in [ngram_min, ngram_max]."""
    grams: Counter = Counter()
    if config.unit == "word":
        words = text.words()
        for n in range(config.ngram_min, config.ngram_max + 1):
            for i in range(len(words) - n + 1):
                grams[" ".join(words[i : i + n])] += 1
    else:
        value = text.value
        for n in range(config.ngram_min, config.ngram_max + 1):
            for i in range(len(value) - n + 1):
                grams[value[i : i + n]] += 1
    return grams


@dataclass(frozen=True)
class NBModel:
    """Trained parameters; immutable, prediction is pure."""

    config: NBConfig
    vocabulary: dict[str, int]
    class_doc_counts: np.ndarray  # (3,) int64
    feature_counts: np.ndarray  # (3, |V|) int64
    log_prior: np.ndarray = field(init=False, repr=False, compare=False)
    log_likelihood: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        docs = np.asarray(self.class_doc_counts, dtype=np.int64)
        feats = np.asarray(self.feature_counts, dtype=np.int64)
        object.__setattr__(self, "class_doc_counts", docs)
        object.__setattr__(self, "feature_counts", feats)

        priors = docs / docs.sum()
        log_prior = np.full(3, -np.inf)
        np.log(priors, out=log_prior, where=priors > 0)
        object.__setattr__(self, "log_prior", log_prior)

        totals = feats.sum(axis=1, keepdims=True)
        smoothed = (feats + self.config.alpha) / (totals + self.config.alpha * feats.shape[1])
        object.__setattr__(self, "log_likelihood", np.log(smoothed))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NBModel):
            return NotImplemented
        return (
            self.config == other.config
            and self.vocabulary == other.vocabulary
            and np.array_equal(self.class_doc_counts, other.class_doc_counts)
            and np.array_equal(self.feature_counts, other.feature_counts)
        )

    def to_json_dict(self) -> dict:
        order = sorted(self.vocabulary, key=self.vocabulary.get)
        return {
            "format": MODEL_FORMAT,
            "version": MODEL_VERSION,
            "config": {
                "ngram_min": self.config.ngram_min,
                "ngram_max": self.config.ngram_max,
                "alpha": self.config.alpha,
                "unit": self.config.unit,
            },
            "class_doc_counts": [int(c) for c in self.class_doc_counts],
            "vocabulary": order,
            "feature_counts": [[int(c) for c in row] for row in self.feature_counts],
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "NBModel":
        if payload.get("format") != MODEL_FORMAT:
            raise ValueError(f"not a {MODEL_FORMAT} model file")
        if payload.get("version") != MODEL_VERSION:
            raise ValueError(f"unsupported model version {payload.get('version')!r}")
        config = NBConfig(**payload["config"])
        vocabulary = {gram: i for i, gram in enumerate(payload["vocabulary"])}
        return cls(
            config=config,
            vocabulary=vocabulary,
            class_doc_counts=np.array(payload["class_doc_counts"], dtype=np.int64),
            feature_counts=np.array(payload["feature_counts"], dtype=np.int64),
        )

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json_dict()) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "NBModel":
        return cls.from_json_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def train(data: list[tuple[CleanText, SentimentLabel]], config: NBConfig | None = None) -> NBModel:
    """Fit counts from (CleanText, label) pairs; vocabulary is lexicographic.

    Raises EmptyTrainingSetError on no documents and AllTextsEmptyError when
    no document yields a single n-gram.
    """
    if config is None:
        config = NBConfig()
    if not data:
        raise EmptyTrainingSetError("no training documents")

    per_doc = [(extract_ngrams(text, config), label) for text, label in data]
    vocabulary = {gram: i for i, gram in enumerate(sorted(set().union(*(g for g, _ in per_doc))))}
    if not vocabulary:
        raise AllTextsEmptyError("no n-grams in any training document")

    class_doc_counts = np.zeros(3, dtype=np.int64)
    feature_counts = np.zeros((3, len(vocabulary)), dtype=np.int64)
    for grams, label in per_doc:
        class_doc_counts[label] += 1
        for gram, count in grams.items():
            feature_counts[label, vocabulary[gram]] += count

    return NBModel(
        config=config,
        vocabulary=vocabulary,
        class_doc_counts=class_doc_counts,
        feature_counts=feature_counts,
    )


def predict(model: NBModel, text: CleanText) -> ProbabilityVector:
    """Posterior over the three classes; empty text returns the priors."""
    scores = model.log_prior.copy()
    for gram, count in extract_ngrams(text, model.config).items():
        index = model.vocabulary.get(gram)
        if index is not None:
            scores = scores + count * model.log_likelihood[:, index]
    shifted = np.exp(scores - scores.max())
    return ProbabilityVector.from_array(shifted / shifted.sum())


def predict_corpus(
    model: NBModel, items: list[tuple[str, CleanText]], model_id: str = "nb"
) -> PredictionSet:
    """One vector per (uid, CleanText) input, order preserved."""
    return PredictionSet(model_id, [(uid, predict(model, text)) for uid, text in items])
