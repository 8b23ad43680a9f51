"""Prediction TSV boundary: every backend delivers softmax rows through this.

Format (normative, bit-exact):

    uid<TAB>model<TAB>p_negative<TAB>p_neutral<TAB>p_positive
    <uid><TAB><model_id><TAB>0.200000<TAB>0.300000<TAB>0.500000

UTF-8, LF endings, probabilities with exactly 6 decimals (round-half-even).
Column order matches the canonical label indices (negative, neutral,
positive) so class permutations cannot sneak through. Writing normalizes
each vector exactly before quantizing, which keeps the printed decimal sum
within 1e-6 of 1; reading checks that bound with exact decimal arithmetic
and rejects anything beyond it, storing values as printed so a write/read
trip never moves a component by more than the 5e-7 quantization bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from typing import Iterable, TextIO

import numpy as np

from .corpus import Corpus
from .errors import (
    BadFieldCountError,
    DuplicateUidError,
    ExtraUidError,
    InconsistentModelIdError,
    MissingHeaderError,
    MissingUidError,
    NegativeProbabilityError,
    NonNumericProbabilityError,
    SimplexViolationError,
)

HEADER = "uid\tmodel\tp_negative\tp_neutral\tp_positive"

# |sum - 1| acceptance band; the 1e-12 slack absorbs float-parse dust on
# files whose exact decimal sum sits right at the 1e-6 boundary.
_SUM_TOLERANCE = 1e-6 + 1e-12
_DECIMAL_SUM_TOLERANCE = Decimal("0.000001")


@dataclass(frozen=True)
class ProbabilityVector:
    """A point on the 3-class simplex in canonical order (neg, neu, pos)."""

    p_negative: float
    p_neutral: float
    p_positive: float

    def __post_init__(self):
        for p in self.components:
            if not math.isfinite(p):
                raise NonNumericProbabilityError(f"non-finite probability {p!r}")
            if p < 0.0:
                raise NegativeProbabilityError(f"negative probability {p!r}")
        s = self.p_negative + self.p_neutral + self.p_positive
        if abs(s - 1.0) > _SUM_TOLERANCE:
            raise SimplexViolationError(f"probabilities sum to {s!r}, not 1")
        # Canonicalize -0.0 so rendering never emits a sign.
        object.__setattr__(self, "p_negative", self.p_negative + 0.0)
        object.__setattr__(self, "p_neutral", self.p_neutral + 0.0)
        object.__setattr__(self, "p_positive", self.p_positive + 0.0)

    @property
    def components(self) -> tuple[float, float, float]:
        return (self.p_negative, self.p_neutral, self.p_positive)

    def as_array(self) -> np.ndarray:
        return np.array(self.components, dtype=np.float64)

    @classmethod
    def from_array(cls, values: Iterable[float]) -> "ProbabilityVector":
        neg, neu, pos = (float(v) for v in values)
        return cls(neg, neu, pos)


class PredictionSet:
    """One model's ProbabilityVector per tweet uid, in a fixed order."""

    def __init__(self, model_id: str, pairs: Iterable[tuple[str, ProbabilityVector]]):
        if not model_id:
            raise ValueError("model_id must be non-empty")
        self.model_id = model_id
        self._vectors: dict[str, ProbabilityVector] = {}
        for uid, vector in pairs:
            if uid in self._vectors:
                raise DuplicateUidError(f"duplicate uid {uid!r} in prediction set")
            self._vectors[uid] = vector

    def __len__(self) -> int:
        return len(self._vectors)

    def __contains__(self, uid: str) -> bool:
        return uid in self._vectors

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PredictionSet):
            return NotImplemented
        return self.model_id == other.model_id and self._vectors == other._vectors

    def __repr__(self) -> str:
        return f"PredictionSet(model_id={self.model_id!r}, n={len(self)})"

    def uids(self) -> list[str]:
        return list(self._vectors)

    def vector(self, uid: str) -> ProbabilityVector:
        return self._vectors[uid]

    def items(self) -> list[tuple[str, ProbabilityVector]]:
        return list(self._vectors.items())


def write_predictions(pset: PredictionSet, sink: TextIO) -> None:
    """Emit the TSV format; probabilities get exactly 6 decimals, round-half-even."""
    sink.write(HEADER + "\n")
    for uid, vector in pset.items():
        total = sum(vector.components)
        cells = "\t".join(f"{p / total:.6f}" for p in vector.components)
        sink.write(f"{uid}\t{pset.model_id}\t{cells}\n")


def _parse_probability(field: str, line_no: int) -> float:
    try:
        value = float(field)
    except ValueError:
        raise NonNumericProbabilityError(f"not a number: {field!r}", line_no) from None
    if not math.isfinite(value):
        raise NonNumericProbabilityError(f"non-finite probability: {field!r}", line_no)
    if value < 0.0:
        raise NegativeProbabilityError(f"negative probability: {field!r}", line_no)
    return value


def read_predictions(source: str | TextIO) -> PredictionSet:
    """Parse and validate a prediction TSV into a PredictionSet.

    A header-only file yields an empty set with model_id "unknown" (an empty
    file has no rows to carry the id). Blank lines are ignored.
    """
    text = source if isinstance(source, str) else source.read()
    lines = text.split("\n")
    if lines[0] != HEADER:
        raise MissingHeaderError(f"expected header {HEADER!r}, got {lines[0]!r}", 1)

    model_id: str | None = None
    pairs: list[tuple[str, ProbabilityVector]] = []
    seen: set[str] = set()

    for line_no, line in enumerate(lines[1:], start=2):
        if line == "":
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise BadFieldCountError(f"expected 5 tab-separated fields, got {len(fields)}", line_no)
        uid, model, *prob_fields = fields
        if not model:
            raise InconsistentModelIdError("empty model id", line_no)
        if model_id is None:
            model_id = model
        elif model != model_id:
            raise InconsistentModelIdError(
                f"model column changed from {model_id!r} to {model!r}", line_no
            )
        if uid in seen:
            raise DuplicateUidError(f"line {line_no}: duplicate uid {uid!r}")
        seen.add(uid)

        values = [_parse_probability(field, line_no) for field in prob_fields]
        try:
            decimal_sum = sum(Decimal(field) for field in prob_fields)
        except InvalidOperation:
            raise NonNumericProbabilityError(f"not a decimal numeral in {prob_fields!r}", line_no) from None
        if abs(decimal_sum - 1) > _DECIMAL_SUM_TOLERANCE:
            raise SimplexViolationError(
                f"probabilities sum to {decimal_sum}, more than 1e-6 away from 1", line_no
            )
        pairs.append((uid, ProbabilityVector(*values)))

    return PredictionSet(model_id if model_id is not None else "unknown", pairs)


def validate_against(pset: PredictionSet, corpus: Corpus) -> None:
    """Succeed iff the prediction set covers exactly the corpus uid set."""
    missing = [uid for uid in corpus.uids() if uid not in pset]
    extra = [uid for uid in pset.uids() if uid not in corpus]
    if missing:
        raise MissingUidError(missing, extra)
    if extra:
        raise ExtraUidError(extra)
