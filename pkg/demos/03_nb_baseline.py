"""Train the Naive Bayes baseline on the bundled mini corpus and look at a
few posteriors.

Run from the repository root:  python demos/03_nb_baseline.py
"""

from pathlib import Path

from sentimix import NBConfig, normalize, parse_conll, predict, train

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"

train_corpus = parse_conll((DATA / "mini_train.conll").read_text(encoding="utf-8"))
eval_corpus = parse_conll((DATA / "mini_eval.conll").read_text(encoding="utf-8"))

pairs = [(normalize(t), t.gold) for t in train_corpus]
model = train(pairs, NBConfig(ngram_min=1, ngram_max=2, alpha=1.0, unit="word"))
print(f"trained on {len(pairs)} tweets; vocabulary of {len(model.vocabulary)} n-grams")

print("\nfirst five evaluation tweets:")
for tweet in eval_corpus.tweets[:5]:
    clean = normalize(tweet)
    vector = predict(model, clean)
    parts = "  ".join(f"{p:.3f}" for p in vector.components)
    print(f"  {tweet.uid}  gold={tweet.gold.canonical_name:9s}  (neg neu pos)=({parts})  '{clean.value[:40]}'")

# With no evidence the posterior falls back to the class priors.
from sentimix import CleanText

empty = predict(model, CleanText("", True))
print("\nposterior for an emptied tweet (the priors):", [round(p, 3) for p in empty.components])

# Character n-grams are a second, differently-biased backend for ensembling.
char_model = train(pairs, NBConfig(ngram_min=2, ngram_max=4, unit="char"))
vector = predict(char_model, normalize(eval_corpus.tweets[0]))
print("char-gram posterior for the first tweet:", [round(p, 3) for p in vector.components])
