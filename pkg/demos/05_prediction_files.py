"""The prediction TSV boundary: any backend that writes this file can join
the ensemble, and malformed files are rejected with specific errors.

Run from the repository root:  python demos/05_prediction_files.py
"""

from io import StringIO

from sentimix import (
    PredictionSet,
    ProbabilityVector,
    parse_conll,
    read_predictions,
    validate_against,
    write_predictions,
)
from sentimix.errors import SentimixError

pset = PredictionSet("external-model", [
    ("1", ProbabilityVector(0.2, 0.3, 0.5)),
    ("2", ProbabilityVector(0.7, 0.2, 0.1)),
])
sink = StringIO()
write_predictions(pset, sink)
print("what a backend must produce:\n")
print(sink.getvalue())

again = read_predictions(sink.getvalue())
assert again.uids() == pset.uids()
print("read back ok; 6-decimal quantization keeps every component within 5e-7\n")

corpus = parse_conll("meta\t1\nok\tEng\n\nmeta\t2\nok\tEng\n\n")
validate_against(again, corpus)
print("uid sets match the corpus: ready to ensemble and evaluate\n")

BAD_FILES = {
    "sum off the simplex": "uid\tmodel\tp_negative\tp_neutral\tp_positive\n1\tm\t0.5\t0.5\t0.1\n",
    "negative probability": "uid\tmodel\tp_negative\tp_neutral\tp_positive\n1\tm\t-0.1\t0.6\t0.5\n",
    "missing header": "1\tm\t0.2\t0.3\t0.5\n",
    "mixed model ids": (
        "uid\tmodel\tp_negative\tp_neutral\tp_positive\n"
        "1\ta\t0.2\t0.3\t0.5\n2\tb\t0.2\t0.3\t0.5\n"
    ),
}
for name, text in BAD_FILES.items():
    try:
        read_predictions(text)
    except SentimixError as exc:
        print(f"{name:22s} -> {type(exc).__name__}: {exc}")
