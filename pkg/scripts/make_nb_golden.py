#!/usr/bin/env python3
"""Golden Naive Bayes predictions for the bundled mini corpus.

A from-scratch probability-space multinomial NB (dicts, no numpy, no
package imports): train on mini_train.conll, predict mini_eval.conll with
word 1..2-grams and alpha=1, write tests/data/nb_golden_word.tsv. Warns if
any probability lands near a 6-decimal rounding boundary, where the
package's log-space arithmetic could round differently.
"""

import unicodedata
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"
LABELS = ["negative", "neutral", "positive"]


def parse_conll(path):
    tweets, uid, label, tokens = [], None, None, []
    for line in path.read_text(encoding="utf-8").split("\n"):
        if line == "":
            if uid is not None:
                tweets.append((uid, label, tokens))
                uid, label, tokens = None, None, []
            continue
        fields = line.split("\t")
        if uid is None:
            uid = fields[1]
            label = fields[2] if len(fields) == 3 else None
        else:
            tokens.append(fields[0])
    if uid is not None:
        tweets.append((uid, label, tokens))
    return tweets


def is_link(token):
    low = token.lower()
    return low.startswith(("http://", "https://", "www.")) or "t.co/" in low


def clean(tokens):
    words = []
    for token in tokens:
        if is_link(token):
            continue
        kept = [
            ch
            for ch in token
            if unicodedata.category(ch) != "Nd"
            and (unicodedata.category(ch).startswith("L") or ch.isspace())
        ]
        folded = "".join(kept).casefold()
        folded = "".join(
            ch for ch in folded if unicodedata.category(ch).startswith("L") or ch.isspace()
        )
        words.extend(folded.split())
    return words


def ngrams(words, lo=1, hi=2):
    grams = {}
    for n in range(lo, hi + 1):
        for i in range(len(words) - n + 1):
            gram = " ".join(words[i : i + n])
            grams[gram] = grams.get(gram, 0) + 1
    return grams


def main():
    train = parse_conll(DATA_DIR / "mini_train.conll")
    test = parse_conll(DATA_DIR / "mini_eval.conll")

    doc_counts = {label: 0 for label in LABELS}
    feat = {label: {} for label in LABELS}
    vocab = set()
    for _uid, label, tokens in train:
        doc_counts[label] += 1
        for gram, count in ngrams(clean(tokens)).items():
            vocab.add(gram)
            feat[label][gram] = feat[label].get(gram, 0) + count

    total_docs = sum(doc_counts.values())
    priors = {label: doc_counts[label] / total_docs for label in LABELS}
    totals = {label: sum(feat[label].values()) for label in LABELS}
    v_size = len(vocab)

    def likelihood(label, gram):
        return (feat[label].get(gram, 0) + 1.0) / (totals[label] + 1.0 * v_size)

    rows = ["uid\tmodel\tp_negative\tp_neutral\tp_positive"]
    boundary_hits = 0
    for uid, _gold, tokens in test:
        grams = ngrams(clean(tokens))
        scores = {}
        for label in LABELS:
            score = priors[label]
            for gram, count in grams.items():
                if gram in vocab:
                    score *= likelihood(label, gram) ** count
            scores[label] = score
        z = sum(scores.values())
        probs = [scores[label] / z for label in LABELS]
        for p in probs:
            frac = (p * 1e6) % 1.0
            if abs(frac - 0.5) < 1e-4:
                boundary_hits += 1
                print(f"WARNING: {uid} probability {p!r} near rounding boundary")
        rows.append(uid + "\tnb\t" + "\t".join(f"{p:.6f}" for p in probs))

    (DATA_DIR / "nb_golden_word.tsv").write_text("\n".join(rows) + "\n", encoding="utf-8")
    print(f"wrote nb_golden_word.tsv ({len(test)} rows, {boundary_hits} boundary warnings)")


if __name__ == "__main__":
    main()
