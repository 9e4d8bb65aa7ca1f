"""Serialize an annotated document to HTML, Markdown, ANSI text, or JSON spans.

Every format preserves the source text exactly: stripping the format's
markup (and unescaping, where the format escapes) recovers the input
byte-for-byte. Bold prefixes are split on grapheme cluster boundaries,
matching how they were counted.
"""

from __future__ import annotations

import dataclasses
import enum
import json

from speedreader.bolding import AnnotatedDocument, graphemes
from speedreader.typography import TypographyConfig


class RenderFormat(enum.Enum):
    HTML = "html"
    MARKDOWN = "markdown"
    ANSI = "ansi"
    JSON = "json"


_ANSI_BOLD = "\x1b[1m"
_ANSI_NORMAL = "\x1b[22m"

_MD_ESCAPES = "*_`[]\\"


def escape_html(text: str) -> str:
    """Escape exactly &, <, >, \", ' (in that order of substitution)."""
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
        .replace("'", "&#39;")
    )


def escape_markdown(text: str) -> str:
    out = []
    for ch in text:
        if ch in _MD_ESCAPES:
            out.append("\\")
        out.append(ch)
    return "".join(out)


def _split_bold(text: str, bold_len: int) -> tuple[str, str]:
    if bold_len <= 0:
        return "", text
    clusters = graphemes(text)
    return "".join(clusters[:bold_len]), "".join(clusters[bold_len:])


def _fmt(value: float) -> str:
    return f"{value:g}"


def render_html(adoc: AnnotatedDocument, typo: TypographyConfig) -> str:
    """One self-contained container element with inline styles.

    The container carries line-height, word-spacing, letter-spacing,
    font-size, and the regular weight (inherited by all regular runs);
    each bold prefix is a <b> carrying the bold weight and size scale.
    """
    container_style = (
        f"line-height: {_fmt(typo.line_spacing)}; "
        f"word-spacing: {_fmt(typo.word_spacing_em)}em; "
        f"letter-spacing: {_fmt(typo.letter_spacing_em)}em; "
        f"font-size: {_fmt(typo.font_size_px)}px; "
        f"font-weight: {typo.regular_weight};"
    )
    bold_style = (
        f"font-weight: {typo.bold_weight}; "
        f"font-size: {_fmt(typo.bold_size_scale)}em;"
    )
    parts = [f'<div class="speedread" style="{container_style}">']
    for span in adoc.spans:
        head, tail = _split_bold(span.token.text, span.bold_len)
        if head:
            parts.append(f'<b style="{bold_style}">{escape_html(head)}</b>')
        if tail:
            parts.append(escape_html(tail))
    parts.append("</div>")
    return "".join(parts)


def render_markdown(adoc: AnnotatedDocument) -> str:
    """Bold prefixes as **...**; source *, _, `, [, ], \\ backslash-escaped."""
    parts = []
    for span in adoc.spans:
        head, tail = _split_bold(span.token.text, span.bold_len)
        if head:
            parts.append(f"**{escape_markdown(head)}**")
        parts.append(escape_markdown(tail))
    return "".join(parts)


def render_ansi(adoc: AnnotatedDocument) -> str:
    """Bold prefixes wrapped in SGR bold-on/normal-intensity sequences."""
    parts = []
    for span in adoc.spans:
        head, tail = _split_bold(span.token.text, span.bold_len)
        if head:
            parts.append(f"{_ANSI_BOLD}{head}{_ANSI_NORMAL}")
        parts.append(tail)
    return "".join(parts)


def render_json(adoc: AnnotatedDocument, typo: TypographyConfig) -> str:
    """Machine-readable spans: sentences as arrays of {kind, text, bold_len}."""
    sentences = []
    for _, spans in adoc.sentence_spans():
        sentences.append(
            [
                {"kind": s.token.kind.value, "text": s.token.text, "bold_len": s.bold_len}
                for s in spans
            ]
        )
    payload = {"sentences": sentences, "typography": dataclasses.asdict(typo)}
    return json.dumps(payload, ensure_ascii=False)


def render(adoc: AnnotatedDocument, fmt: RenderFormat, typo: TypographyConfig) -> str:
    if fmt is RenderFormat.HTML:
        return render_html(adoc, typo)
    if fmt is RenderFormat.MARKDOWN:
        return render_markdown(adoc)
    if fmt is RenderFormat.ANSI:
        return render_ansi(adoc)
    if fmt is RenderFormat.JSON:
        return render_json(adoc, typo)
    raise ValueError(f"unsupported render format: {fmt!r}")
