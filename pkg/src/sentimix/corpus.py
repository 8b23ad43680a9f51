"""CONLL-style corpus model and IO for code-mixed tweets.

File format (normative; the parser below is the single source of truth):

    meta<TAB><uid><TAB><label>      tweet header, labeled data
    meta<TAB><uid>                  tweet header, unlabeled test data
    <surface><TAB><tag>             one line per token; tag in {Eng, Hin, O}
                                    (blank line)  terminates the tweet

UTF-8, LF line endings. Label strings are negative / neutral / positive,
compared case-insensitively. Unknown language tags fold into Other (counted,
never fatal). Trailing blank lines are ignored. Inside a tweet every line is
a token line until the blank terminator, so a surface form "meta" is legal.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Iterator, TextIO

from .errors import (
    DuplicateUidError,
    EmptyTweetError,
    MalformedMetaLineError,
    MalformedTokenLineError,
    MissingGoldLabelError,
    UnknownLabelError,
)

logger = logging.getLogger(__name__)

META_PREFIX = "meta"


class SentimentLabel(IntEnum):
    """Three-way sentiment with canonical indices used everywhere downstream."""

    NEGATIVE = 0
    NEUTRAL = 1
    POSITIVE = 2

    @property
    def canonical_name(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, text: str) -> "SentimentLabel":
        try:
            return _LABELS[text.lower()]
        except KeyError:
            raise UnknownLabelError(f"unknown sentiment label {text!r}") from None


_LABELS = {label.canonical_name: label for label in SentimentLabel}


class LanguageTag(Enum):
    ENG = "Eng"
    HIN = "Hin"
    OTHER = "O"

    @classmethod
    def parse(cls, tag: str) -> tuple["LanguageTag", bool]:
        """Map a raw tag string; unknown strings fold to OTHER. Returns (tag, was_known)."""
        known = _TAGS.get(tag)
        if known is not None:
            return known, True
        return cls.OTHER, False


_TAGS = {tag.value: tag for tag in LanguageTag}


@dataclass(frozen=True)
class Token:
    surface: str
    lang: LanguageTag

    def __post_init__(self):
        if not self.surface:
            raise ValueError("token surface must be non-empty")
        if "\t" in self.surface or "\n" in self.surface:
            raise ValueError("token surface must not contain tab or newline")


@dataclass(frozen=True)
class Tweet:
    uid: str
    tokens: tuple[Token, ...]
    gold: SentimentLabel | None = None

    def __post_init__(self):
        if not self.uid:
            raise ValueError("tweet uid must be non-empty")
        if "\t" in self.uid or "\n" in self.uid:
            raise ValueError("tweet uid must not contain tab or newline")
        if not self.tokens:
            raise ValueError(f"tweet {self.uid!r} has no tokens")
        object.__setattr__(self, "tokens", tuple(self.tokens))


@dataclass(frozen=True)
class Corpus:
    """An ordered collection of tweets with unique uids. Immutable once built."""

    tweets: tuple[Tweet, ...]
    _by_uid: dict[str, Tweet] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tweets", tuple(self.tweets))
        by_uid: dict[str, Tweet] = {}
        for tweet in self.tweets:
            if tweet.uid in by_uid:
                raise DuplicateUidError(f"duplicate uid {tweet.uid!r} in corpus")
            by_uid[tweet.uid] = tweet
        object.__setattr__(self, "_by_uid", by_uid)

    def __len__(self) -> int:
        return len(self.tweets)

    def __iter__(self) -> Iterator[Tweet]:
        return iter(self.tweets)

    def __contains__(self, uid: str) -> bool:
        return uid in self._by_uid

    def get(self, uid: str) -> Tweet:
        return self._by_uid[uid]

    def uids(self) -> list[str]:
        return [tweet.uid for tweet in self.tweets]

    @property
    def fully_labeled(self) -> bool:
        return all(tweet.gold is not None for tweet in self.tweets)


def parse_conll(source: str | TextIO) -> Corpus:
    """Parse CONLL-style text (string or readable stream) into a Corpus.

    Tweets come back in file order. The gold label is present iff the meta
    line carried one. Raises MalformedMetaLineError, UnknownLabelError,
    DuplicateUidError, EmptyTweetError or MalformedTokenLineError on bad
    input; unknown language tags are folded to Other and counted, not fatal.
    """
    text = source if isinstance(source, str) else source.read()

    tweets: list[Tweet] = []
    seen: set[str] = set()
    unknown_tags = 0

    uid: str | None = None
    gold: SentimentLabel | None = None
    tokens: list[Token] = []
    meta_line_no = 0

    def finish() -> None:
        nonlocal uid, gold, tokens
        assert uid is not None
        if not tokens:
            raise EmptyTweetError(f"tweet {uid!r} has a meta line but no token lines", meta_line_no)
        tweets.append(Tweet(uid=uid, tokens=tuple(tokens), gold=gold))
        uid, gold, tokens = None, None, []

    for line_no, line in enumerate(text.split("\n"), start=1):
        if line == "":
            if uid is not None:
                finish()
            continue

        fields = line.split("\t")
        if uid is None:
            # Expecting a tweet header.
            if fields[0] != META_PREFIX:
                raise MalformedMetaLineError(
                    f"expected a meta line, got {line!r}", line_no
                )
            if len(fields) not in (2, 3) or not fields[1]:
                raise MalformedMetaLineError(
                    f"meta line needs 2 or 3 non-empty fields, got {line!r}", line_no
                )
            if fields[1] in seen:
                raise DuplicateUidError(f"line {line_no}: duplicate uid {fields[1]!r}")
            uid = fields[1]
            seen.add(uid)
            if len(fields) == 3:
                try:
                    gold = SentimentLabel.parse(fields[2])
                except UnknownLabelError:
                    raise UnknownLabelError(
                        f"unknown sentiment label {fields[2]!r}", line_no
                    ) from None
            else:
                gold = None
            meta_line_no = line_no
        else:
            if len(fields) != 2 or not fields[0]:
                raise MalformedTokenLineError(
                    f"token line needs 2 fields with a non-empty surface, got {line!r}", line_no
                )
            lang, known = LanguageTag.parse(fields[1])
            if not known:
                unknown_tags += 1
            tokens.append(Token(surface=fields[0], lang=lang))

    if uid is not None:
        # Input ended without the terminating blank line; accept the open tweet.
        finish()

    if unknown_tags:
        logger.warning("%d unknown language tag(s) folded to Other", unknown_tags)
    return Corpus(tweets=tuple(tweets))


def write_conll(corpus: Corpus) -> str:
    """Serialize a Corpus to canonical CONLL-style text.

    The output re-parses to a structurally equal Corpus, and parsing then
    writing a canonical-form file reproduces it byte for byte.
    """
    parts: list[str] = []
    for tweet in corpus:
        if tweet.gold is not None:
            parts.append(f"{META_PREFIX}\t{tweet.uid}\t{tweet.gold.canonical_name}\n")
        else:
            parts.append(f"{META_PREFIX}\t{tweet.uid}\n")
        for token in tweet.tokens:
            parts.append(f"{token.surface}\t{token.lang.value}\n")
        parts.append("\n")
    return "".join(parts)


def class_distribution(corpus: Corpus) -> dict[SentimentLabel, int]:
    """Gold-label counts in canonical label order; counts sum to len(corpus)."""
    counts = {label: 0 for label in SentimentLabel}
    for tweet in corpus:
        if tweet.gold is None:
            raise MissingGoldLabelError(f"tweet {tweet.uid!r} has no gold label")
        counts[tweet.gold] += 1
    return counts


def language_distribution(corpus: Corpus) -> dict[LanguageTag, int]:
    """Token counts per language tag (plumbing for corpus statistics)."""
    counts = {tag: 0 for tag in LanguageTag}
    for tweet in corpus:
        for token in tweet.tokens:
            counts[token.lang] += 1
    return counts
