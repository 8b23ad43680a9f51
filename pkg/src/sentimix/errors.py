"""Exception types shared across the pipeline.

Everything raised on bad input data derives from SentimixError so callers
(notably the CLI) can map any data/validation failure to one exit code.
"""


class SentimixError(Exception):
    """Base class for all data and validation errors."""


# corpus file parsing

class CorpusParseError(SentimixError):
    """A corpus file violates the CONLL-style format; carries the 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class MalformedMetaLineError(CorpusParseError):
    pass


class UnknownLabelError(CorpusParseError):
    pass


class DuplicateUidError(SentimixError):
    pass


class EmptyTweetError(CorpusParseError):
    pass


class MalformedTokenLineError(CorpusParseError):
    pass


class MissingGoldLabelError(SentimixError):
    pass


# Naive Bayes baseline

class EmptyTrainingSetError(SentimixError):
    pass


class AllTextsEmptyError(SentimixError):
    pass


# prediction files

class PredictionFormatError(SentimixError):
    """A prediction TSV violates the format; carries the 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class MissingHeaderError(PredictionFormatError):
    pass


class BadFieldCountError(PredictionFormatError):
    pass


class NonNumericProbabilityError(PredictionFormatError):
    pass


class NegativeProbabilityError(PredictionFormatError):
    pass


class SimplexViolationError(PredictionFormatError):
    pass


class InconsistentModelIdError(PredictionFormatError):
    pass


class MissingUidError(SentimixError):
    """Uids present in the corpus but absent from the prediction set."""

    def __init__(self, missing: list[str], extra: list[str] | None = None):
        self.missing = list(missing)
        self.extra = list(extra or [])
        message = f"prediction set is missing {len(self.missing)} corpus uid(s): {self.missing}"
        if self.extra:
            message += f"; it also has {len(self.extra)} extra uid(s): {self.extra}"
        super().__init__(message)


class ExtraUidError(SentimixError):
    """Uids present in the prediction set but absent from the corpus."""

    def __init__(self, extra: list[str]):
        self.extra = list(extra)
        super().__init__(f"prediction set has {len(self.extra)} uid(s) not in the corpus: {self.extra}")


# ensemble

class UidMismatchError(SentimixError):
    pass


class EmptyInputError(SentimixError):
    pass


class WeightCountMismatchError(SentimixError):
    pass


# metrics

class EmptyEvaluationError(SentimixError):
    pass
