"""Noise removal for tweet text: links, digits, special characters, case.

Rules, applied per token in this order:
  1. drop the token if it looks like a URL (http:// or https:// prefix,
     t.co/ anywhere, or www. prefix; matched case-insensitively — the data
     contains malformed links like "https//t.co/..." so the colon is not
     required, the t.co/ substring rule catches those),
  2. delete decimal digit characters in place ("370ko" keeps "ko"),
  3. delete everything that is not a Unicode letter or whitespace,
  4. case-fold.
Surviving tokens are joined with single spaces. Mentions and hashtags are
not dropped as units; rule 3 strips their sigils.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

from .corpus import Corpus, Tweet

_URL_PREFIXES = ("http://", "https://", "www.")
_URL_SUBSTRING = "t.co/"


def _is_link(surface: str) -> bool:
    lowered = surface.lower()
    return lowered.startswith(_URL_PREFIXES) or _URL_SUBSTRING in lowered


def _is_letter(ch: str) -> bool:
    return unicodedata.category(ch).startswith("L")


def _clean_surface(surface: str) -> str:
    no_digits = "".join(ch for ch in surface if not ch.isdecimal())
    letters = "".join(ch for ch in no_digits if _is_letter(ch) or ch.isspace())
    folded = letters.casefold()
    # Case-folding may introduce combining marks (e.g. dotted capital I ->
    # "i" + U+0307); they are not letters, so filter once more.
    return "".join(ch for ch in folded if _is_letter(ch) or ch.isspace())


@dataclass(frozen=True)
class CleanText:
    """Normalized tweet text: lowercase letters and single spaces only.

    emptied is True iff cleaning removed every character of the tweet;
    such tweets are kept so every uid still gets a prediction downstream.
    """

    value: str
    emptied: bool

    def __post_init__(self):
        if self.emptied != (self.value == ""):
            raise ValueError("emptied flag must mirror an empty value")
        if self.value:
            if "  " in self.value or self.value[0] == " " or self.value[-1] == " ":
                raise ValueError("clean text must use single internal spaces with no padding")
            for ch in self.value:
                if ch != " " and not _is_letter(ch):
                    raise ValueError(f"clean text contains non-letter {ch!r}")
            if self.value.casefold() != self.value:
                raise ValueError("clean text must be case-folded")

    def words(self) -> list[str]:
        return self.value.split(" ") if self.value else []


def normalize(tweet: Tweet) -> CleanText:
    """Apply the four noise-removal rules to one tweet. Total: never raises."""
    kept: list[str] = []
    for token in tweet.tokens:
        if _is_link(token.surface):
            continue
        # split() also collapses any whitespace a surface smuggled in.
        kept.extend(_clean_surface(token.surface).split())
    value = " ".join(kept)
    return CleanText(value=value, emptied=not value)


def normalize_corpus(corpus: Corpus) -> list[tuple[str, CleanText]]:
    """One (uid, CleanText) per tweet in corpus order; emptied tweets included."""
    return [(tweet.uid, normalize(tweet)) for tweet in corpus]
