"""Average two backends' softmax outputs, decide labels, and score the
result against gold labels.

Run from the repository root:  python demos/04_ensemble_and_metrics.py
"""

from pathlib import Path

from sentimix import (
    EnsembleConfig,
    NBConfig,
    combine,
    evaluate,
    normalize,
    parse_conll,
    predict_corpus,
    train,
)

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"

train_corpus = parse_conll((DATA / "mini_train.conll").read_text(encoding="utf-8"))
eval_corpus = parse_conll((DATA / "mini_eval.conll").read_text(encoding="utf-8"))
pairs = [(normalize(t), t.gold) for t in train_corpus]
eval_items = [(t.uid, normalize(t)) for t in eval_corpus]

backends = {
    "nb-word": NBConfig(1, 2, 1.0, "word"),
    "nb-char": NBConfig(2, 4, 1.0, "char"),
}
sets = [predict_corpus(train(pairs, cfg), eval_items, name) for name, cfg in backends.items()]

for pset in sets:
    report = evaluate(eval_corpus, pset)
    print(f"{pset.model_id:26s} macro F1 {report.macro_f1:.3f}  acc {report.accuracy:.3f}")

# Uniform softmax averaging: the combined distribution is the per-uid mean.
combined = combine(sets)
report = evaluate(eval_corpus, combined)
print(f"{combined.model_id:26s} macro F1 {report.macro_f1:.3f}  acc {report.accuracy:.3f}")

print()
print(report.to_table())

# Weighted averaging is available as an explicit non-default extension;
# a one-hot weight recovers a single backend exactly.
one_hot = combine(sets, EnsembleConfig(weights=(1.0, 0.0)))
assert all(one_hot.vector(uid) == sets[0].vector(uid) for uid in one_hot.uids())
print("one-hot weights recover the first backend exactly")
