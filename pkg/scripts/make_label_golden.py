#!/usr/bin/env python3
"""Golden argmax labels for the golden NB prediction file.

Independent of the package: reads tests/data/nb_golden_word.tsv, takes the
argmax per row (exact ties break toward the lower column index), writes
tests/data/labels_golden.tsv.
"""

from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "tests" / "data"
LABELS = ["negative", "neutral", "positive"]


def main():
    lines = (DATA_DIR / "nb_golden_word.tsv").read_text(encoding="utf-8").split("\n")
    out = ["uid\tlabel"]
    for line in lines[1:]:
        if not line:
            continue
        uid, _model, *fields = line.split("\t")
        values = [float(f) for f in fields]
        best = max(range(3), key=values.__getitem__)  # first max wins ties
        out.append(f"{uid}\t{LABELS[best]}")
    (DATA_DIR / "labels_golden.tsv").write_text("\n".join(out) + "\n", encoding="utf-8")
    print(f"wrote labels_golden.tsv ({len(out) - 1} rows)")


if __name__ == "__main__":
    main()
