"""Batch front end: file or stdin in, rendered text out.

Shares the service's pipeline, so identical inputs and options produce
byte-identical output (no trailing newline is added). Exit codes: 0 success,
1 I/O or decoding failure, 2 option validation errors.
"""

from __future__ import annotations

import argparse
import sys

from speedreader.bolding import BoldingConfig
from speedreader.pipeline import ProcessRequest, process
from speedreader.render import RenderFormat
from speedreader.summarize import load_stopwords
from speedreader.tokenizer import load_abbreviations
from speedreader.typography import TypographyConfig, Violation, merge


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="speedreader",
        description="Summarize text and render it with half-word bolding.",
    )
    parser.add_argument("input", nargs="?", default="-", help="input file, or - for stdin")
    parser.add_argument("--output", default="-", help="output file, or - for stdout")
    parser.add_argument(
        "--summarize",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="select the highest-scoring sentences before rendering",
    )
    parser.add_argument("--ratio", type=float, default=0.3, help="summary size as a fraction of sentences")
    parser.add_argument(
        "--format",
        choices=[f.value for f in RenderFormat],
        default=RenderFormat.HTML.value,
    )
    parser.add_argument("--fixation", type=float, default=0.5, help="fraction of each word to bold")
    parser.add_argument("--min-word-length", type=int, default=1, help="words shorter than this stay unbolded")
    parser.add_argument("--bold-numeric", action="store_true", help="also bold digit runs")
    parser.add_argument("--line-spacing", type=float, default=None)
    parser.add_argument("--word-spacing", type=float, default=None)
    parser.add_argument("--letter-spacing", type=float, default=None)
    parser.add_argument("--font-size", type=float, default=None)
    parser.add_argument("--abbrev-file", help="override the abbreviation list")
    parser.add_argument("--stopword-file", help="override the stopword list")
    return parser


def _validate(args: argparse.Namespace, text: str) -> tuple[ProcessRequest | None, list[Violation]]:
    violations: list[Violation] = []
    if not text.strip():
        violations.append(Violation("text", "input text is empty"))
    if not 0.0 < args.ratio <= 1.0:
        violations.append(Violation("ratio", f"ratio must be in (0, 1], got {args.ratio}"))
    if not 0.0 < args.fixation <= 1.0:
        violations.append(Violation("fixation_ratio", f"fixation must be in (0, 1], got {args.fixation}"))
    if args.min_word_length < 1:
        violations.append(
            Violation("min_word_length", f"min-word-length must be >= 1, got {args.min_word_length}")
        )
    overrides = {
        field: value
        for field, value in (
            ("line_spacing", args.line_spacing),
            ("word_spacing_em", args.word_spacing),
            ("letter_spacing_em", args.letter_spacing),
            ("font_size_px", args.font_size),
        )
        if value is not None
    }
    typography, typo_violations = merge(TypographyConfig(), overrides)
    violations.extend(typo_violations)
    if violations:
        return None, violations
    return (
        ProcessRequest(
            text=text,
            summarize=args.summarize,
            ratio=args.ratio,
            format=RenderFormat(args.format),
            typography=typography,
            bolding=BoldingConfig(args.fixation, args.min_word_length, args.bold_numeric),
        ),
        [],
    )


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        if args.input == "-":
            raw = sys.stdin.buffer.read()
            source_name = "<stdin>"
        else:
            source_name = args.input
            with open(args.input, "rb") as fh:
                raw = fh.read()
    except OSError as exc:
        print(f"cannot read {args.input}: {exc}", file=sys.stderr)
        return 1
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        print(f"{source_name} is not valid UTF-8: {exc}", file=sys.stderr)
        return 1

    request, violations = _validate(args, text)
    if request is None:
        for violation in violations:
            print(f"{violation.field}: {violation.message}", file=sys.stderr)
        return 2

    try:
        abbreviations = load_abbreviations(args.abbrev_file) if args.abbrev_file else None
        stopwords = load_stopwords(args.stopword_file) if args.stopword_file else None
    except OSError as exc:
        print(f"cannot read word list: {exc}", file=sys.stderr)
        return 1

    result = process(request, abbreviations=abbreviations, stopwords=stopwords)
    payload = result.output.encode("utf-8")
    try:
        if args.output == "-":
            sys.stdout.buffer.write(payload)
            sys.stdout.buffer.flush()
        else:
            with open(args.output, "wb") as fh:
                fh.write(payload)
    except OSError as exc:
        print(f"cannot write {args.output}: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
