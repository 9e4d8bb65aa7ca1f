"""Half-word bolding: how many leading characters of each word to embolden.

Lengths are measured in grapheme clusters (user-perceived characters), not
bytes or code points, so accented and combining-mark text bolds where a
reader expects. An odd-length word takes the longer prefix: ceil(ratio * n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import regex

from speedreader.tokenizer import Document, Token, TokenKind

_GRAPHEME_RE = regex.compile(r"\X")


def graphemes(text: str) -> list[str]:
    """Split text into extended grapheme clusters."""
    return _GRAPHEME_RE.findall(text)


def grapheme_count(text: str) -> int:
    return len(graphemes(text))


@dataclass(frozen=True)
class BoldingConfig:
    fixation_ratio: float = 0.5
    min_word_length: int = 1
    bold_numeric: bool = False


@dataclass(frozen=True)
class BoldSpan:
    token: Token
    bold_len: int


@dataclass(frozen=True)
class AnnotatedDocument:
    """A Document plus one BoldSpan per token, in document order."""

    doc: Document
    spans: tuple[BoldSpan, ...]

    def sentence_spans(self) -> Iterator[tuple[int, list[BoldSpan]]]:
        """Yield (sentence index, its spans) preserving token order."""
        pos = 0
        for sentence in self.doc.sentences:
            count = len(sentence.tokens)
            yield sentence.index, list(self.spans[pos : pos + count])
            pos += count


def bold_prefix_len(word: str, cfg: BoldingConfig = BoldingConfig()) -> int:
    """Number of leading grapheme clusters to bold for one word.

    Words shorter than cfg.min_word_length get 0; otherwise
    ceil(fixation_ratio * n) clamped to [1, n].
    """
    n = grapheme_count(word)
    if n < cfg.min_word_length:
        return 0
    return min(max(math.ceil(cfg.fixation_ratio * n), 1), n)


def _is_numeric_run(token: Token) -> bool:
    return token.kind is TokenKind.PUNCT and token.text.isdigit()


def annotate(doc: Document, cfg: BoldingConfig = BoldingConfig()) -> AnnotatedDocument:
    """Attach a bold-prefix length to every token of the document.

    Word tokens get bold_prefix_len; Space and Punct tokens get 0, except
    purely numeric Punct runs when cfg.bold_numeric is set.
    """
    spans = []
    for token in doc.tokens():
        if token.kind is TokenKind.WORD:
            bold = bold_prefix_len(token.text, cfg)
        elif cfg.bold_numeric and _is_numeric_run(token):
            bold = bold_prefix_len(token.text, cfg)
        else:
            bold = 0
        spans.append(BoldSpan(token, bold))
    return AnnotatedDocument(doc, tuple(spans))
