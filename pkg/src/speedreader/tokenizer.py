"""Sentence splitting and lossless word/punct/space tokenization.

Deterministic rule set, no trained models:

- A sentence ends after '.', '!', '?' or an ellipsis run ('...' / '…'),
  optionally followed by closing quotes/brackets, when the next non-space
  character exists, is uppercase, and is separated by whitespace.
- A period never ends a sentence when it terminates a known abbreviation,
  a single-letter initial, or sits between two digits (decimal).
- A bare '.', '!', '?' at end of input simply closes the final sentence.

Sentence spans partition the entire input; whitespace between sentences is
attached to the *following* sentence. Offsets are byte offsets into the UTF-8
encoding of the source, and token boundaries never split a multi-byte scalar.
Concatenating every token text in order reproduces the source byte-for-byte.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Iterator

_TERMINATORS = frozenset(".!?…")
_CLOSERS = frozenset("\"')]}»’”")
_HYPHENS = frozenset("-")
_APOSTROPHES = frozenset("'’")

# Maximal run of letters, possibly with single interior periods ("e.g", "U.S"),
# ending exactly at the candidate period. [^\W\d_] is "Unicode letter".
_CHUNK_RE = re.compile(r"[^\W\d_]+(?:\.[^\W\d_]+)*\Z")


class TokenKind(enum.Enum):
    WORD = "word"
    PUNCT = "punct"
    SPACE = "space"


@dataclass(frozen=True)
class Token:
    """A classified span of the source text.

    start/end are byte offsets into the UTF-8 encoding; text equals the
    source slice [start, end).
    """

    kind: TokenKind
    text: str
    start: int
    end: int


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    index: int

    @property
    def text(self) -> str:
        return "".join(t.text for t in self.tokens)


@dataclass(frozen=True)
class Document:
    source: str
    sentences: tuple[Sentence, ...]

    def tokens(self) -> Iterator[Token]:
        for sentence in self.sentences:
            yield from sentence.tokens


def load_abbreviations(path: str) -> frozenset[str]:
    """Read an abbreviation list: one entry per line, '#' starts a comment.

    Entries are lowercased; a trailing period is tolerated and stripped.
    """
    entries = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            entry = line.split("#", 1)[0].strip().lower().rstrip(".")
            if entry:
                entries.append(entry)
    return frozenset(entries)


def _default_abbreviations() -> frozenset[str]:
    text = resources.files("speedreader.data").joinpath("abbreviations.txt").read_text("utf-8")
    entries = []
    for line in text.splitlines():
        entry = line.split("#", 1)[0].strip().lower().rstrip(".")
        if entry:
            entries.append(entry)
    return frozenset(entries)


DEFAULT_ABBREVIATIONS: frozenset[str] = _default_abbreviations()


def _byte_offsets(text: str) -> list[int]:
    """Prefix array mapping code point index -> byte offset; length len(text)+1."""
    offsets = [0] * (len(text) + 1)
    total = 0
    for i, ch in enumerate(text):
        total += len(ch.encode("utf-8"))
        offsets[i + 1] = total
    return offsets


def _period_suppressed(text: str, i: int, abbreviations: frozenset[str]) -> bool:
    """True when the '.' at code point i must not end a sentence."""
    # Decimal: digit on both sides.
    if 0 < i < len(text) - 1 and text[i - 1].isdigit() and text[i + 1].isdigit():
        return True
    m = _CHUNK_RE.search(text, 0, i)
    if not m:
        return False
    if m.start() > 0 and text[m.start() - 1].isalnum():
        # Letter run is the tail of a larger word ("1st."): not a standalone
        # abbreviation or initial.
        return False
    chunk = m.group()
    if len(chunk.split(".")[-1]) == 1:
        return True  # initial: "Johann S. Bach", also covers "U.S.", "e.g."
    return chunk.lower() in abbreviations


def _sentence_breaks(text: str, abbreviations: frozenset[str]) -> list[int]:
    """Code point indices at which one sentence ends and the next begins."""
    breaks: list[int] = []
    n = len(text)
    i = 0
    while i < n:
        ch = text[i]
        if ch not in _TERMINATORS:
            i += 1
            continue
        j = i + 1
        if ch == ".":
            while j < n and text[j] == ".":
                j += 1
            ellipsis = j - i >= 2
        elif ch == "…":
            while j < n and text[j] == "…":
                j += 1
            ellipsis = True
        else:
            ellipsis = False
        k = j
        while k < n and text[k] in _CLOSERS:
            k += 1
        m = k
        while m < n and text[m].isspace():
            m += 1
        if m == k or m >= n or not text[m].isupper():
            # No whitespace+uppercase follow; end of input closes the final
            # sentence without an explicit break.
            i = j
            continue
        if ch == "." and not ellipsis and _period_suppressed(text, i, abbreviations):
            i = j
            continue
        breaks.append(k)
        i = m
    return breaks


def _sentence_spans_cp(text: str, abbreviations: frozenset[str]) -> list[tuple[int, int]]:
    if not text:
        return []
    breaks = _sentence_breaks(text, abbreviations)
    spans = []
    start = 0
    for b in breaks:
        spans.append((start, b))
        start = b
    spans.append((start, len(text)))
    return spans


def split_sentences(
    text: str, abbreviations: frozenset[str] | None = None
) -> list[tuple[int, int]]:
    """Split text into sentence spans given as UTF-8 byte ranges.

    Spans are ordered, non-overlapping, and jointly cover the whole input
    (inter-sentence whitespace leads the following span). Empty input yields
    an empty list.
    """
    abbrevs = DEFAULT_ABBREVIATIONS if abbreviations is None else abbreviations
    offsets = _byte_offsets(text)
    return [(offsets[a], offsets[b]) for a, b in _sentence_spans_cp(text, abbrevs)]


def _is_word_char(ch: str) -> bool:
    return ch.isalpha() or ch.isdigit()


def tokenize_sentence(text: str, base: int = 0) -> list[Token]:
    """Partition a sentence span into Word/Punct/Space tokens.

    Maximal whitespace runs become one Space token. Runs of letters/digits,
    with '-' or an apostrophe kept only between letters/digits, become a Word
    when they contain at least one letter and a Punct run otherwise. Anything
    else groups into Punct runs of consecutive other characters.

    base is the byte offset of this span within the source document.
    """
    offsets = _byte_offsets(text)
    tokens: list[Token] = []
    n = len(text)
    i = 0
    while i < n:
        ch = text[i]
        if ch.isspace():
            j = i + 1
            while j < n and text[j].isspace():
                j += 1
            kind = TokenKind.SPACE
        elif _is_word_char(ch):
            j = i + 1
            has_alpha = ch.isalpha()
            while j < n:
                c = text[j]
                if _is_word_char(c):
                    has_alpha = has_alpha or c.isalpha()
                    j += 1
                elif (
                    (c in _HYPHENS or c in _APOSTROPHES)
                    and j + 1 < n
                    and _is_word_char(text[j + 1])
                ):
                    # Joiner is flanked by letters/digits: word-internal.
                    j += 1
                else:
                    break
            kind = TokenKind.WORD if has_alpha else TokenKind.PUNCT
        else:
            j = i + 1
            while j < n and not text[j].isspace() and not _is_word_char(text[j]):
                j += 1
            kind = TokenKind.PUNCT
        tokens.append(Token(kind, text[i:j], base + offsets[i], base + offsets[j]))
        i = j
    return tokens


def parse_document(text: str, abbreviations: frozenset[str] | None = None) -> Document:
    """Compose sentence splitting and tokenization into a Document."""
    abbrevs = DEFAULT_ABBREVIATIONS if abbreviations is None else abbreviations
    offsets = _byte_offsets(text)
    sentences = []
    for idx, (a, b) in enumerate(_sentence_spans_cp(text, abbrevs)):
        tokens = tokenize_sentence(text[a:b], offsets[a])
        sentences.append(Sentence(tuple(tokens), idx))
    return Document(text, tuple(sentences))


def build_document(source: str, sentence_tokens: Iterable[Iterable[Token]]) -> Document:
    """Assemble a Document from pre-built per-sentence token lists.

    Used when re-basing existing sentences (e.g. a summary) without
    re-running boundary detection; callers guarantee the tokens partition
    source in order.
    """
    sentences = tuple(
        Sentence(tuple(tokens), idx) for idx, tokens in enumerate(sentence_tokens)
    )
    return Document(source, sentences)
