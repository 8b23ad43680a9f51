#!/usr/bin/env python3
"""Generate the bundled synthetic Hinglish mini corpus (train + eval splits).

Deterministic (fixed seed); writes tests/data/mini_train.conll and
tests/data/mini_eval.conll. Standalone on purpose: does not import the
package it feeds.
"""

import random
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"

POSITIVE = [
    ("accha", "Hin"), ("badhiya", "Hin"), ("mast", "Hin"), ("shandar", "Hin"),
    ("zabardast", "Hin"), ("khushi", "Hin"), ("love", "Eng"), ("great", "Eng"),
    ("awesome", "Eng"), ("superb", "Eng"), ("best", "Eng"), ("happy", "Eng"),
]
NEGATIVE = [
    ("bura", "Hin"), ("bekar", "Hin"), ("ganda", "Hin"), ("kharab", "Hin"),
    ("bakwas", "Hin"), ("dukh", "Hin"), ("hate", "Eng"), ("worst", "Eng"),
    ("awful", "Eng"), ("nonsense", "Eng"), ("sad", "Eng"), ("angry", "Eng"),
]
NEUTRAL = [
    ("aaj", "Hin"), ("kal", "Hin"), ("mausam", "Hin"), ("sarkar", "Hin"),
    ("shahar", "Hin"), ("bazar", "Hin"), ("news", "Eng"), ("update", "Eng"),
    ("office", "Eng"), ("train", "Eng"), ("market", "Eng"), ("report", "Eng"),
]
FILLERS = [
    ("hai", "Hin"), ("ka", "Hin"), ("ki", "Hin"), ("ke", "Hin"), ("to", "Hin"),
    ("me", "Hin"), ("aur", "Hin"), ("par", "Hin"), ("se", "Hin"), ("bhi", "Hin"),
    ("the", "Eng"), ("is", "Eng"), ("for", "Eng"), ("and", "Eng"), ("today", "Eng"),
]
# Ambiguous words shared across classes keep the task honest.
SHARED = [("yaar", "Hin"), ("bhai", "Hin"), ("time", "Eng"), ("log", "Hin")]

CLASS_WORDS = {"positive": POSITIVE, "negative": NEGATIVE, "neutral": NEUTRAL}
LABEL_CYCLE = (
    ["neutral"] * 8 + ["positive"] * 7 + ["negative"] * 5
)  # 40/35/25 mix per 20 tweets


def noise_tokens(rng):
    choices = [
        (f"@user{rng.randint(1, 99)}", "O"),
        (f"#{rng.choice(['india', 'cricket', 'news'])}", "O"),
        (f"https//t.co/{''.join(rng.choices('AbCdEfGh123', k=8))}", "O"),
        (f"http://bit.ly/{rng.randint(100, 999)}", "O"),
        (f"www.{rng.choice(['example', 'news18'])}.com", "O"),
        (str(rng.randint(2, 9999)), "O"),
        (rng.choice(["!!", "...", "?!", "*"]), "O"),
    ]
    return rng.sample(choices, k=rng.randint(1, 3))


def make_tweet(rng, uid, label):
    # Content follows the written label most of the time; the noisy rest keeps
    # the scores away from 1.0 and off the confusion-matrix diagonal.
    content = label
    if rng.random() < 0.18:
        content = rng.choice([l for l in CLASS_WORDS if l != label])
    words = []
    for _ in range(rng.randint(1, 3)):
        words.append(rng.choice(CLASS_WORDS[content]))
    if rng.random() < 0.30:
        words.append(rng.choice(CLASS_WORDS[rng.choice(list(CLASS_WORDS))]))
    for _ in range(rng.randint(3, 6)):
        words.append(rng.choice(FILLERS))
    if rng.random() < 0.50:
        words.append(rng.choice(SHARED))
    words.extend(noise_tokens(rng))
    rng.shuffle(words)
    lines = [f"meta\t{uid}\t{label}"]
    lines.extend(f"{surface}\t{tag}" for surface, tag in words)
    lines.append("")
    return "\n".join(lines) + "\n"


def make_split(rng, prefix, count):
    blocks = []
    for i in range(count):
        label = LABEL_CYCLE[i % len(LABEL_CYCLE)]
        blocks.append(make_tweet(rng, f"{prefix}{i + 1:04d}", label))
    return "".join(blocks)


def main():
    rng = random.Random(727)
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    (OUT_DIR / "mini_train.conll").write_text(make_split(rng, "t", 140), encoding="utf-8")
    (OUT_DIR / "mini_eval.conll").write_text(make_split(rng, "e", 60), encoding="utf-8")
    print("wrote mini_train.conll (140 tweets) and mini_eval.conll (60 tweets)")


if __name__ == "__main__":
    main()
