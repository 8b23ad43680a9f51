"""Command-line front end for the whole pipeline.

Subcommands: ingest, stats, preprocess, train-baseline, predict, ensemble,
classify, evaluate, pipeline. Exit codes: 0 success, 1 usage error (bad or
missing flags, nonexistent input paths), 2 data/validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from io import StringIO
from pathlib import Path

from .baseline import NBConfig, NBModel, predict_corpus, train
from .corpus import (
    Corpus,
    class_distribution,
    language_distribution,
    parse_conll,
    write_conll,
)
from .ensemble import EnsembleConfig, classify_set, combine
from .errors import MissingGoldLabelError, SentimixError
from .metrics import evaluate
from .predictions import read_predictions, validate_against, write_predictions
from .preprocess import normalize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved for data errors here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _existing_file(value: str) -> Path:
    path = Path(value)
    if not path.is_file():
        raise argparse.ArgumentTypeError(f"no such file: {value}")
    return path


def _weights(value: str) -> tuple[float, ...]:
    try:
        weights = tuple(float(part) for part in value.split(","))
        EnsembleConfig(weights=weights)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad weights {value!r}: {exc}") from None
    return weights


@dataclass(frozen=True)
class BackendSpec:
    """One NB backend requested on the command line."""

    model_id: str
    config: NBConfig


def _backend(value: str) -> BackendSpec:
    # id=unit:min-max[:alpha], e.g. nb-word=word:1-2 or nb-char=char:2-4:0.5
    try:
        model_id, rest = value.split("=", 1)
        parts = rest.split(":")
        unit, ngrams = parts[0], parts[1]
        lo, hi = ngrams.split("-")
        alpha = float(parts[2]) if len(parts) > 2 else 1.0
        if len(parts) > 3 or not model_id:
            raise ValueError("expected id=unit:min-max[:alpha]")
        config = NBConfig(ngram_min=int(lo), ngram_max=int(hi), alpha=alpha, unit=unit)
    except (ValueError, IndexError) as exc:
        raise argparse.ArgumentTypeError(f"bad backend spec {value!r}: {exc}") from None
    return BackendSpec(model_id=model_id, config=config)


def _read_corpus(path: Path) -> Corpus:
    with open(path, encoding="utf-8", newline="") as stream:
        return parse_conll(stream)


def _read_prediction_file(path: Path):
    with open(path, encoding="utf-8", newline="") as stream:
        return read_predictions(stream)


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as sink:
            sink.write(text)


def _labeled_pairs(corpus: Corpus):
    pairs = []
    for tweet in corpus:
        if tweet.gold is None:
            raise MissingGoldLabelError(f"tweet {tweet.uid!r} has no gold label; cannot train")
        pairs.append((normalize(tweet), tweet.gold))
    return pairs


def _clean_tsv(corpus: Corpus) -> str:
    lines = ["uid\tclean_text"]
    lines.extend(f"{tweet.uid}\t{normalize(tweet).value}" for tweet in corpus)
    return "\n".join(lines) + "\n"


def _label_tsv(labeled) -> str:
    lines = ["uid\tlabel"]
    lines.extend(f"{p.uid}\t{p.label.canonical_name}" for p in labeled)
    return "\n".join(lines) + "\n"


def _predictions_text(pset) -> str:
    buffer = StringIO()
    write_predictions(pset, buffer)
    return buffer.getvalue()


def cmd_ingest(args) -> int:
    _emit(write_conll(_read_corpus(args.corpus)), args.out)
    return EXIT_OK


def cmd_stats(args) -> int:
    corpus = _read_corpus(args.corpus)
    any_labeled = any(tweet.gold is not None for tweet in corpus)
    labels = class_distribution(corpus) if any_labeled else None
    languages = language_distribution(corpus)
    stats = {
        "n_tweets": len(corpus),
        "n_tokens": sum(len(tweet.tokens) for tweet in corpus),
        "labels": None if labels is None else {k.canonical_name: v for k, v in labels.items()},
        "language_tags": {k.name.lower(): v for k, v in languages.items()},
    }
    if args.format == "json":
        _emit(json.dumps(stats, indent=2) + "\n", args.out)
    else:
        lines = [f"tweets: {stats['n_tweets']}", f"tokens: {stats['n_tokens']}"]
        if stats["labels"] is not None:
            lines.append("labels: " + "  ".join(f"{k}={v}" for k, v in stats["labels"].items()))
        lines.append("language tags: " + "  ".join(f"{k}={v}" for k, v in stats["language_tags"].items()))
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_preprocess(args) -> int:
    _emit(_clean_tsv(_read_corpus(args.corpus)), args.out)
    return EXIT_OK


def cmd_train_baseline(args) -> int:
    try:
        config = NBConfig(
            ngram_min=args.ngram_min, ngram_max=args.ngram_max, alpha=args.alpha, unit=args.unit
        )
    except ValueError as exc:
        args.parser.error(str(exc))
    model = train(_labeled_pairs(_read_corpus(args.corpus)), config)
    model.save(args.out)
    return EXIT_OK


def cmd_predict(args) -> int:
    try:
        model = NBModel.load(args.model)
    except (ValueError, KeyError) as exc:
        raise SentimixError(f"bad model file {args.model}: {exc}") from None
    corpus = _read_corpus(args.corpus)
    pset = predict_corpus(model, [(t.uid, normalize(t)) for t in corpus], args.model_id)
    _emit(_predictions_text(pset), args.out)
    return EXIT_OK


def cmd_ensemble(args) -> int:
    sets = [_read_prediction_file(path) for path in args.predictions]
    config = EnsembleConfig(weights=args.weights) if args.weights else None
    _emit(_predictions_text(combine(sets, config)), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    _emit(_label_tsv(classify_set(_read_prediction_file(args.predictions))), args.out)
    return EXIT_OK


def cmd_evaluate(args) -> int:
    corpus = _read_corpus(args.corpus)
    pset = _read_prediction_file(args.predictions)
    report = evaluate(corpus, pset)
    if args.out is not None:
        _emit(report.to_json(), args.out)
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_table())
    return EXIT_OK


def cmd_pipeline(args) -> int:
    out_dir: Path = args.out_dir
    out_dir.mkdir(parents=True, exist_ok=True)

    train_corpus = _read_corpus(args.train_corpus)
    eval_corpus = _read_corpus(args.corpus)
    _emit(_clean_tsv(train_corpus), out_dir / "train_clean.tsv")
    _emit(_clean_tsv(eval_corpus), out_dir / "eval_clean.tsv")

    # Every stage consumes the previous stage's written artifact, so the run
    # is byte-identical to chaining the subcommands by hand.
    eval_items = [(tweet.uid, normalize(tweet)) for tweet in eval_corpus]
    sets = []
    for spec in args.backend:
        model = train(_labeled_pairs(train_corpus), spec.config)
        model.save(out_dir / f"model_{spec.model_id}.json")
        pset = predict_corpus(model, eval_items, spec.model_id)
        path = out_dir / f"predictions_{spec.model_id}.tsv"
        _emit(_predictions_text(pset), path)
        sets.append(_read_prediction_file(path))
    for path in args.predictions:
        pset = _read_prediction_file(path)
        validate_against(pset, eval_corpus)
        sets.append(pset)

    config = EnsembleConfig(weights=args.weights) if args.weights else None
    _emit(_predictions_text(combine(sets, config)), out_dir / "ensemble.tsv")
    combined = _read_prediction_file(out_dir / "ensemble.tsv")
    _emit(_label_tsv(classify_set(combined)), out_dir / "labels.tsv")

    report = evaluate(eval_corpus, combined, ensemble_config=config)
    _emit(report.to_json(), out_dir / "report.json")
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_table())
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="sentimix", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="validate a corpus file and write it back in canonical form")
    p.add_argument("--corpus", type=_existing_file, required=True)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("stats", help="tweet/token counts, label and language-tag distributions")
    p.add_argument("--corpus", type=_existing_file, required=True)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("preprocess", help="write uid<TAB>clean_text rows")
    p.add_argument("--corpus", type=_existing_file, required=True)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("train-baseline", help="train the Naive Bayes baseline")
    p.add_argument("--corpus", type=_existing_file, required=True)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--ngram-min", type=int, default=1)
    p.add_argument("--ngram-max", type=int, default=2)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--unit", choices=("word", "char"), default="word")
    p.set_defaults(func=cmd_train_baseline)

    p = sub.add_parser("predict", help="predict a corpus with a trained baseline model")
    p.add_argument("--model", type=_existing_file, required=True)
    p.add_argument("--corpus", type=_existing_file, required=True)
    p.add_argument("--model-id", default="nb")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("ensemble", help="average prediction files into one")
    p.add_argument("--predictions", type=_existing_file, nargs="+", required=True)
    p.add_argument("--weights", type=_weights)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_ensemble)

    p = sub.add_parser("classify", help="argmax labels from a prediction file")
    p.add_argument("--predictions", type=_existing_file, required=True)
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("evaluate", help="score a prediction file against gold labels")
    p.add_argument("--corpus", type=_existing_file, required=True)
    p.add_argument("--predictions", type=_existing_file, required=True)
    p.add_argument("--out", type=Path, help="write the JSON report here")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser(
        "pipeline",
        help="preprocess, predict with 1+ backends and/or prediction files, ensemble, evaluate",
    )
    p.add_argument("--train-corpus", type=_existing_file, required=True)
    p.add_argument("--corpus", type=_existing_file, required=True, help="evaluation corpus with gold labels")
    p.add_argument("--backend", type=_backend, action="append", default=[],
                   metavar="ID=UNIT:MIN-MAX[:ALPHA]")
    p.add_argument("--predictions", type=_existing_file, nargs="*", default=[],
                   help="extra prediction TSVs to ensemble in")
    p.add_argument("--weights", type=_weights)
    p.add_argument("--out-dir", type=Path, required=True)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_pipeline)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.parser = parser

    if args.func is cmd_pipeline:
        if not args.backend and not args.predictions:
            parser.error("pipeline needs at least one --backend or --predictions")
        ids = [spec.model_id for spec in args.backend]
        if len(set(ids)) != len(ids):
            parser.error("duplicate --backend ids")

    try:
        return args.func(args)
    except SentimixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
