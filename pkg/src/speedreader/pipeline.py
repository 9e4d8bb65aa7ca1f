"""The processing contract shared by the HTTP service and the CLI.

One request shape, one validation pass, one pipeline:
parse -> (summarize) -> annotate -> render. Keeping both front ends on this
module is what makes their outputs byte-identical.
"""

from __future__ import annotations

import dataclasses
import time
from dataclasses import dataclass, field
from typing import Any, Mapping

from speedreader.bolding import BoldingConfig, annotate
from speedreader.render import RenderFormat, render
from speedreader.summarize import SummaryOptions, summarize, summary_document
from speedreader.tokenizer import parse_document
from speedreader.typography import TypographyConfig, Violation, merge

_FORMATS = {f.value: f for f in RenderFormat}

_REQUEST_FIELDS = frozenset(
    {"text", "summarize", "ratio", "format", "typography", "bolding"}
)
_BOLDING_FIELDS = frozenset({"fixation_ratio", "min_word_length", "bold_numeric"})


@dataclass(frozen=True)
class ProcessRequest:
    text: str
    summarize: bool = True
    ratio: float = 0.3
    format: RenderFormat = RenderFormat.HTML
    typography: TypographyConfig = field(default_factory=TypographyConfig)
    bolding: BoldingConfig = field(default_factory=BoldingConfig)


@dataclass(frozen=True)
class ProcessResult:
    output: str
    sentences_in: int
    sentences_out: int
    elapsed_ms: float
    options: dict[str, Any]

    def to_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)


def _is_number(value: object) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def validate_request(payload: Mapping[str, Any]) -> tuple[ProcessRequest | None, list[Violation]]:
    """Turn a decoded JSON object into a ProcessRequest, or name what's wrong.

    Every violation carries the offending field name; unknown fields are
    rejected rather than ignored.
    """
    violations: list[Violation] = []

    for key in payload:
        if key not in _REQUEST_FIELDS:
            violations.append(Violation(key, f"unknown request field {key!r}"))

    text = payload.get("text")
    if not isinstance(text, str) or not text.strip():
        violations.append(Violation("text", "text must be a non-empty string"))
        text = ""

    summarize_flag = payload.get("summarize", True)
    if not isinstance(summarize_flag, bool):
        violations.append(Violation("summarize", "summarize must be a boolean"))
        summarize_flag = True

    ratio = payload.get("ratio", 0.3)
    if not _is_number(ratio) or not 0.0 < ratio <= 1.0:
        violations.append(Violation("ratio", f"ratio must be in (0, 1], got {ratio!r}"))
        ratio = 0.3

    fmt_name = payload.get("format", RenderFormat.HTML.value)
    fmt = _FORMATS.get(fmt_name if isinstance(fmt_name, str) else "")
    if fmt is None:
        allowed = ", ".join(sorted(_FORMATS))
        violations.append(Violation("format", f"format must be one of: {allowed}"))
        fmt = RenderFormat.HTML

    typo_overrides = payload.get("typography", {})
    if not isinstance(typo_overrides, Mapping):
        violations.append(Violation("typography", "typography must be an object"))
        typo_overrides = {}
    typography, typo_violations = merge(TypographyConfig(), typo_overrides)
    violations.extend(typo_violations)

    bold_overrides = payload.get("bolding", {})
    if not isinstance(bold_overrides, Mapping):
        violations.append(Violation("bolding", "bolding must be an object"))
        bold_overrides = {}
    bolding, bold_violations = _merge_bolding(bold_overrides)
    violations.extend(bold_violations)

    if violations:
        return None, violations
    return (
        ProcessRequest(
            text=text,
            summarize=summarize_flag,
            ratio=float(ratio),
            format=fmt,
            typography=typography,
            bolding=bolding,
        ),
        [],
    )


def _merge_bolding(overrides: Mapping[str, Any]) -> tuple[BoldingConfig, list[Violation]]:
    violations = []
    fixation = overrides.get("fixation_ratio", 0.5)
    min_len = overrides.get("min_word_length", 1)
    numeric = overrides.get("bold_numeric", False)
    for key in overrides:
        if key not in _BOLDING_FIELDS:
            violations.append(Violation(key, f"unknown bolding field {key!r}"))
    if not _is_number(fixation) or not 0.0 < fixation <= 1.0:
        violations.append(
            Violation("fixation_ratio", f"fixation_ratio must be in (0, 1], got {fixation!r}")
        )
        fixation = 0.5
    if isinstance(min_len, bool) or not isinstance(min_len, int) or min_len < 1:
        violations.append(
            Violation("min_word_length", f"min_word_length must be an integer >= 1, got {min_len!r}")
        )
        min_len = 1
    if not isinstance(numeric, bool):
        violations.append(Violation("bold_numeric", "bold_numeric must be a boolean"))
        numeric = False
    return BoldingConfig(float(fixation), min_len, numeric), violations


def effective_options(request: ProcessRequest) -> dict[str, Any]:
    return {
        "summarize": request.summarize,
        "ratio": request.ratio,
        "format": request.format.value,
        "typography": dataclasses.asdict(request.typography),
        "bolding": dataclasses.asdict(request.bolding),
    }


def process(
    request: ProcessRequest,
    abbreviations: frozenset[str] | None = None,
    stopwords: frozenset[str] | None = None,
) -> ProcessResult:
    """Run the full pipeline for one request."""
    t0 = time.perf_counter()
    doc = parse_document(request.text, abbreviations)
    sentences_in = len(doc.sentences)
    if request.summarize and doc.sentences:
        opts = (
            SummaryOptions(ratio=request.ratio, stopwords=stopwords)
            if stopwords is not None
            else SummaryOptions(ratio=request.ratio)
        )
        summary = summarize(doc, opts)
        doc = summary_document(doc, summary)
        sentences_out = len(summary.sentence_indices)
    else:
        sentences_out = sentences_in
    adoc = annotate(doc, request.bolding)
    output = render(adoc, request.format, request.typography)
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return ProcessResult(
        output=output,
        sentences_in=sentences_in,
        sentences_out=sentences_out,
        elapsed_ms=elapsed_ms,
        options=effective_options(request),
    )
