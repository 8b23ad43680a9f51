"""CLI: fine-tune a family checkpoint or export predictions from one.

Exit codes: 0 success, 1 usage error, 2 training/export/data error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import FAMILIES, config_with_overrides
from .export import export_predictions
from .finetune import AdapterError, finetune


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _existing_file(value: str) -> Path:
    path = Path(value)
    if not path.is_file():
        raise argparse.ArgumentTypeError(f"no such file: {value}")
    return path


def cmd_finetune(args) -> int:
    try:
        config = config_with_overrides(
            args.family,
            batch_size=args.batch_size,
            learning_rate=args.learning_rate,
            max_length=args.max_length,
            optimizer=args.optimizer,
            epochs=args.epochs,
            steps=args.steps,
            base_checkpoint=args.base_checkpoint,
        )
    except ValueError as exc:
        args.parser.error(str(exc))
    finetune(config, args.corpus, args.out_dir, seed=args.seed)
    print(f"checkpoint saved to {args.out_dir}")
    return 0


def cmd_export(args) -> int:
    export_predictions(args.checkpoint, args.corpus, args.model_id, args.out)
    print(f"predictions written to {args.out}")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="sentimix-adapter", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("finetune", help="fine-tune a 3-class classifier")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--corpus", type=_existing_file, required=True)
    p.add_argument("--out-dir", type=Path, required=True)
    p.add_argument("--base-checkpoint", help="hub id or local path; overrides the family default")
    p.add_argument("--batch-size", type=int)
    p.add_argument("--learning-rate", type=float)
    p.add_argument("--max-length", type=int)
    p.add_argument("--optimizer")
    p.add_argument("--epochs", type=int)
    p.add_argument("--steps", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_finetune)

    p = sub.add_parser("export", help="export softmax predictions from a checkpoint")
    p.add_argument("--checkpoint", type=Path, required=True)
    p.add_argument("--corpus", type=_existing_file, required=True)
    p.add_argument("--model-id", required=True)
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.parser = parser
    try:
        return args.func(args)
    except (AdapterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
