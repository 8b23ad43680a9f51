"""Minimal reader for the pipeline's CONLL-style corpus files.

This is the adapter's side of the file-format interface: meta header lines
(uid, optional label), one token per line, blank-line separators. Token
surfaces are joined with single spaces; the transformer tokenizers do their
own subword segmentation on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

LABELS = ("negative", "neutral", "positive")
LABEL_INDEX = {name: i for i, name in enumerate(LABELS)}


@dataclass(frozen=True)
class Example:
    uid: str
    text: str
    label: int | None


def read_corpus(path: str | Path) -> list[Example]:
    examples: list[Example] = []
    uid, label, tokens = None, None, []

    def finish():
        nonlocal uid, label, tokens
        if uid is not None:
            examples.append(Example(uid=uid, text=" ".join(tokens), label=label))
        uid, label, tokens = None, None, []

    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").split("\n"), start=1):
        if line == "":
            finish()
            continue
        fields = line.split("\t")
        if uid is None:
            if fields[0] != "meta" or len(fields) not in (2, 3) or not fields[1]:
                raise ValueError(f"{path}:{line_no}: expected a meta line, got {line!r}")
            uid = fields[1]
            if len(fields) == 3:
                name = fields[2].lower()
                if name not in LABEL_INDEX:
                    raise ValueError(f"{path}:{line_no}: unknown label {fields[2]!r}")
                label = LABEL_INDEX[name]
        else:
            if len(fields) != 2 or not fields[0]:
                raise ValueError(f"{path}:{line_no}: expected a token line, got {line!r}")
            tokens.append(fields[0])
    finish()
    return examples
