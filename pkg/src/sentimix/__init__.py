"""Code-mixed tweet sentiment pipeline.

Corpus IO for the CONLL-style tweet format, four-rule text cleaning, a
Multinomial Naive Bayes n-gram baseline, a model-agnostic prediction-file
boundary, softmax-averaging ensembling, and shared-task evaluation metrics.
"""

from .corpus import (
    Corpus,
    LanguageTag,
    SentimentLabel,
    Token,
    Tweet,
    class_distribution,
    language_distribution,
    parse_conll,
    write_conll,
)
from .preprocess import CleanText, normalize, normalize_corpus
from .predictions import (
    PredictionSet,
    ProbabilityVector,
    read_predictions,
    validate_against,
    write_predictions,
)
from .baseline import NBConfig, NBModel, extract_ngrams, predict, predict_corpus, train
from .ensemble import EnsembleConfig, LabeledPrediction, classify, classify_set, combine
from .metrics import (
    ClassPRF,
    ConfusionMatrix,
    EvaluationReport,
    confusion,
    evaluate,
    per_class_prf,
    summarize,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "ClassPRF",
    "CleanText",
    "ConfusionMatrix",
    "Corpus",
    "EnsembleConfig",
    "EvaluationReport",
    "LabeledPrediction",
    "LanguageTag",
    "NBConfig",
    "NBModel",
    "PredictionSet",
    "ProbabilityVector",
    "SentimentLabel",
    "Token",
    "Tweet",
    "class_distribution",
    "classify",
    "classify_set",
    "combine",
    "confusion",
    "errors",
    "evaluate",
    "extract_ngrams",
    "language_distribution",
    "normalize",
    "normalize_corpus",
    "parse_conll",
    "per_class_prf",
    "predict",
    "predict_corpus",
    "read_predictions",
    "summarize",
    "train",
    "validate_against",
    "write_conll",
    "write_predictions",
]
