"""Independent brute-force oracles the tests check the package against.

Everything here is deliberately written from first principles with plain
dicts/lists and no package imports, so it cannot share a bug with the
implementation under test.
"""

LABEL_NAMES = ["negative", "neutral", "positive"]


def argmax_label(values):
    """Index of the maximum; exact ties go to the lowest index."""
    best = 0
    for i in (1, 2):
        if values[i] > values[best]:
            best = i
    return best


def metric_report(gold, predicted):
    """All evaluation quantities from parallel lists of label indices."""
    assert len(gold) == len(predicted)
    n = len(gold)
    confusion = [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
    for g, p in zip(gold, predicted):
        confusion[g][p] += 1

    per_class = []
    for c in range(3):
        tp = confusion[c][c]
        predicted_as_c = confusion[0][c] + confusion[1][c] + confusion[2][c]
        gold_is_c = sum(confusion[c])
        precision = tp / predicted_as_c if predicted_as_c else 0.0
        recall = tp / gold_is_c if gold_is_c else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        per_class.append((precision, recall, f1))

    correct = confusion[0][0] + confusion[1][1] + confusion[2][2]
    return {
        "confusion": confusion,
        "n": n,
        "per_class": per_class,
        "macro_precision": sum(p for p, _, _ in per_class) / 3,
        "macro_recall": sum(r for _, r, _ in per_class) / 3,
        "macro_f1": sum(f for _, _, f in per_class) / 3,
        "accuracy": correct / n if n else 0.0,
    }


def word_ngrams(text, lo, hi):
    words = text.split() if text else []
    grams = {}
    for n in range(lo, hi + 1):
        for i in range(len(words) - n + 1):
            gram = " ".join(words[i : i + n])
            grams[gram] = grams.get(gram, 0) + 1
    return grams


def nb_probability_space(train_docs, test_text, lo=1, hi=1, alpha=1.0):
    """Multinomial NB posterior computed directly in probability space.

    train_docs: list of (clean text, label index). Returns the normalized
    3-way posterior for test_text; unknown n-grams are skipped.
    """
    doc_counts = [0, 0, 0]
    feature = [{}, {}, {}]
    vocabulary = set()
    for text, label in train_docs:
        doc_counts[label] += 1
        for gram, count in word_ngrams(text, lo, hi).items():
            vocabulary.add(gram)
            feature[label][gram] = feature[label].get(gram, 0) + count

    total = sum(doc_counts)
    totals = [sum(feature[c].values()) for c in range(3)]
    v = len(vocabulary)

    scores = []
    for c in range(3):
        score = doc_counts[c] / total
        for gram, count in word_ngrams(test_text, lo, hi).items():
            if gram in vocabulary:
                score *= ((feature[c].get(gram, 0) + alpha) / (totals[c] + alpha * v)) ** count
        scores.append(score)
    z = sum(scores)
    return [s / z for s in scores]


def weighted_mean_vectors(vectors, weights):
    """Plain-python weighted mean of 3-component rows."""
    total = sum(weights)
    normalized = [w / total for w in weights]
    out = [0.0, 0.0, 0.0]
    for w, vector in zip(normalized, vectors):
        for i in range(3):
            out[i] += w * vector[i]
    return out
