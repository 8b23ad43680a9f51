"""Confusion counting, P/R/F1, macro scores, report rendering."""

import numpy as np
import pytest

from sentimix import (
    ConfusionMatrix,
    PredictionSet,
    ProbabilityVector,
    SentimentLabel,
    confusion,
    evaluate,
    parse_conll,
    per_class_prf,
    summarize,
)
from sentimix.ensemble import LabeledPrediction, classify
from sentimix.errors import EmptyEvaluationError, MissingGoldLabelError, UidMismatchError

from .oracles import metric_report

NEG, NEU, POS = SentimentLabel

ONE_HOT = {
    NEG: ProbabilityVector(1.0, 0.0, 0.0),
    NEU: ProbabilityVector(0.0, 1.0, 0.0),
    POS: ProbabilityVector(0.0, 0.0, 1.0),
}


def corpus_of(labels, prefix="u"):
    text = "".join(
        f"meta\t{prefix}{i}\t{label.canonical_name}\nword\tEng\n\n" for i, label in enumerate(labels)
    )
    return parse_conll(text)


def labeled(labels, prefix="u"):
    return [
        LabeledPrediction(uid=f"{prefix}{i}", distribution=ONE_HOT[label], label=label)
        for i, label in enumerate(labels)
    ]


FIXTURE_GOLD = [NEG, NEG, POS, NEU]
FIXTURE_PRED = [NEG, POS, POS, NEU]


def test_confusion_hand_tallied():
    matrix = confusion(corpus_of(FIXTURE_GOLD), labeled(FIXTURE_PRED))
    assert matrix.as_lists() == [[1, 0, 1], [0, 1, 0], [0, 0, 1]]
    assert matrix.n == 4


def test_confusion_perfect_predictions_are_diagonal():
    labels = [NEG, NEU, POS, POS, NEU]
    matrix = confusion(corpus_of(labels), labeled(labels))
    assert matrix.as_lists() == [[1, 0, 0], [0, 2, 0], [0, 0, 2]]


def test_confusion_empty_inputs_zero_matrix():
    matrix = confusion(corpus_of([]), [])
    assert matrix.n == 0
    assert matrix.as_lists() == [[0, 0, 0], [0, 0, 0], [0, 0, 0]]


def test_confusion_uid_mismatch():
    with pytest.raises(UidMismatchError):
        confusion(corpus_of([NEG, POS]), labeled([NEG], prefix="x"))


def test_confusion_missing_gold():
    corpus = parse_conll("meta\tu0\nword\tEng\n\n")
    with pytest.raises(MissingGoldLabelError):
        confusion(corpus, labeled([NEG]))


def test_per_class_prf_on_fixture():
    # Frozen from the brute-force oracle (hand-checked): one gold-NEG tweet
    # predicted POS costs NEG recall and POS precision; NEU is untouched.
    matrix = confusion(corpus_of(FIXTURE_GOLD), labeled(FIXTURE_PRED))
    prf = per_class_prf(matrix)
    oracle = metric_report([int(g) for g in FIXTURE_GOLD], [int(p) for p in FIXTURE_PRED])
    assert prf[NEG] == pytest.approx(oracle["per_class"][0], abs=1e-15)
    assert prf[NEG] == (1.0, 0.5, 2 / 3)
    assert prf[NEU] == (1.0, 1.0, 1.0)
    assert prf[POS] == (0.5, 1.0, 2 / 3)


def test_per_class_zero_division_convention():
    matrix = ConfusionMatrix(np.array([[2, 0, 0], [0, 0, 0], [0, 0, 0]]))
    prf = per_class_prf(matrix)
    assert prf[NEU] == (0.0, 0.0, 0.0)
    assert prf[POS] == (0.0, 0.0, 0.0)


def test_per_class_diagonal_is_all_ones():
    matrix = ConfusionMatrix(np.diag([3, 2, 4]))
    assert all(prf == (1.0, 1.0, 1.0) for prf in per_class_prf(matrix).values())


def test_summarize_fixture():
    matrix = confusion(corpus_of(FIXTURE_GOLD), labeled(FIXTURE_PRED))
    report = summarize(matrix, model_id="fixture")
    assert report.accuracy == 0.75
    assert report.macro_f1 == pytest.approx((2 / 3 + 1.0 + 2 / 3) / 3, abs=1e-15)
    assert report.macro_f1 == sum(p.f1 for p in report.per_class.values()) / 3
    assert report.n == 4


def test_summarize_rejects_empty():
    with pytest.raises(EmptyEvaluationError):
        summarize(ConfusionMatrix(np.zeros((3, 3), dtype=np.int64)))


def test_confusion_matrix_validation():
    with pytest.raises(ValueError):
        ConfusionMatrix(np.zeros((2, 3), dtype=np.int64))
    with pytest.raises(ValueError):
        ConfusionMatrix(np.full((3, 3), 0.5))
    with pytest.raises(ValueError):
        ConfusionMatrix(np.full((3, 3), -1))


def test_evaluate_one_hot_gold_is_perfect(mini_eval):
    pset = PredictionSet("oracle", [(t.uid, ONE_HOT[t.gold]) for t in mini_eval])
    report = evaluate(mini_eval, pset)
    assert report.accuracy == 1.0
    assert report.macro_f1 == 1.0


def test_evaluate_uniform_vectors_tie_break_to_negative(mini_eval):
    uniform = ProbabilityVector(1 / 3, 1 / 3, 1 / 3)
    pset = PredictionSet("uniform", [(t.uid, uniform) for t in mini_eval])
    report = evaluate(mini_eval, pset)
    negative_fraction = sum(t.gold is NEG for t in mini_eval) / len(mini_eval)
    assert report.accuracy == negative_fraction
    predicted_negative = sum(report.confusion.cell(g, NEG) for g in SentimentLabel)
    assert predicted_negative == report.n


def test_permutation_symmetry():
    gold = [NEG, NEG, POS, NEU, POS, NEU, NEG]
    pred = [NEG, POS, POS, NEU, NEG, NEU, NEU]
    base = summarize(confusion(corpus_of(gold), labeled(pred)))

    mapping = {NEG: POS, NEU: NEG, POS: NEU}
    gold_p = [mapping[g] for g in gold]
    pred_p = [mapping[p] for p in pred]
    permuted = summarize(confusion(corpus_of(gold_p), labeled(pred_p)))

    assert permuted.accuracy == base.accuracy
    assert permuted.macro_f1 == pytest.approx(base.macro_f1, abs=1e-15)
    assert permuted.macro_precision == pytest.approx(base.macro_precision, abs=1e-15)
    for label in SentimentLabel:
        assert permuted.per_class[mapping[label]] == base.per_class[label]


def test_metric_bounds_and_macro_between_min_max():
    gold = [NEG, NEU, POS, POS, NEG, NEU, NEU]
    pred = [NEU, NEU, NEG, POS, NEG, POS, NEU]
    report = summarize(confusion(corpus_of(gold), labeled(pred)))
    values = [report.accuracy, report.macro_precision, report.macro_recall, report.macro_f1]
    values.extend(v for prf in report.per_class.values() for v in prf)
    assert all(0.0 <= v <= 1.0 for v in values)
    f1s = [prf.f1 for prf in report.per_class.values()]
    assert min(f1s) <= report.macro_f1 <= max(f1s)


def test_accuracy_identity():
    report = summarize(confusion(corpus_of(FIXTURE_GOLD), labeled(FIXTURE_PRED)))
    assert report.accuracy == report.confusion.trace / report.n


def test_report_json_keys():
    report = summarize(confusion(corpus_of(FIXTURE_GOLD), labeled(FIXTURE_PRED)), model_id="m")
    payload = report.to_json_dict()
    assert payload["model_id"] == "m"
    assert payload["n"] == 4
    assert set(payload["per_class"]) == {"negative", "neutral", "positive"}
    assert set(payload["per_class"]["negative"]) == {"precision", "recall", "f1"}
    assert len(payload["confusion"]) == 3 and all(len(row) == 3 for row in payload["confusion"])
    assert payload["ensemble_config"] is None
    for key in ("accuracy", "macro_precision", "macro_recall", "macro_f1"):
        assert isinstance(payload[key], float)


def test_report_table_mentions_all_classes():
    report = summarize(confusion(corpus_of(FIXTURE_GOLD), labeled(FIXTURE_PRED)), model_id="m")
    table = report.to_table()
    for name in ("negative", "neutral", "positive", "F1", "Acc"):
        assert name in table


def test_evaluate_composes_with_classify(mini_eval):
    # evaluate() must agree with running classification by hand.
    vectors = [
        (t.uid, ProbabilityVector(0.2, 0.3, 0.5) if i % 2 else ProbabilityVector(0.6, 0.3, 0.1))
        for i, t in enumerate(mini_eval)
    ]
    pset = PredictionSet("alt", vectors)
    report = evaluate(mini_eval, pset)
    manual_labels = [classify(v) for _, v in vectors]
    oracle = metric_report([int(t.gold) for t in mini_eval], [int(l) for l in manual_labels])
    assert report.accuracy == pytest.approx(oracle["accuracy"], abs=1e-12)
    assert report.macro_f1 == pytest.approx(oracle["macro_f1"], abs=1e-12)
    assert report.confusion.as_lists() == oracle["confusion"]
