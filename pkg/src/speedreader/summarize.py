"""Extractive summarization by normalized word-frequency scoring.

Deterministic default backend: sentences are scored by the mean normalized
frequency of their non-stopword words, and the top k = max(1, round(ratio*n))
sentences are returned verbatim in original order (round = half-up). A toy
neural backend delegates to the character-level Transformer with the
text-to-text "summarize: " prefix; its output is raw generated text with no
structural claim.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass, field

from speedreader import transformer
from speedreader.tokenizer import Document, Token, TokenKind, build_document
from importlib import resources


class SummaryBackend(enum.Enum):
    EXTRACTIVE = "extractive"
    TOY_NEURAL = "toy-neural"


def load_stopwords(path: str) -> frozenset[str]:
    """Read a stopword list: one lowercase word per line, '#' comments."""
    words = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.split("#", 1)[0].strip().lower()
            if word:
                words.append(word)
    return frozenset(words)


def _default_stopwords() -> frozenset[str]:
    text = resources.files("speedreader.data").joinpath("stopwords.txt").read_text("utf-8")
    words = []
    for line in text.splitlines():
        word = line.split("#", 1)[0].strip().lower()
        if word:
            words.append(word)
    return frozenset(words)


DEFAULT_STOPWORDS: frozenset[str] = _default_stopwords()


@dataclass(frozen=True)
class SummaryOptions:
    ratio: float = 0.3
    backend: SummaryBackend = SummaryBackend.EXTRACTIVE
    stopwords: frozenset[str] = field(default_factory=lambda: DEFAULT_STOPWORDS)


@dataclass(frozen=True)
class Summary:
    sentence_indices: tuple[int, ...]
    text: str


def _scoring_words(tokens: tuple[Token, ...], stopwords: frozenset[str]) -> list[str]:
    return [
        t.text.lower()
        for t in tokens
        if t.kind is TokenKind.WORD and t.text.lower() not in stopwords
    ]


def score_sentences(
    doc: Document, stopwords: frozenset[str] = DEFAULT_STOPWORDS
) -> list[tuple[int, float]]:
    """Score every sentence by mean normalized word frequency.

    Frequencies are counted over lowercased non-stopword Word tokens of the
    whole document and normalized by the maximum; a sentence with no scoring
    words scores 0.
    """
    if not doc.sentences:
        raise ValueError("cannot score an empty document")
    freq = Counter()
    for sentence in doc.sentences:
        freq.update(_scoring_words(sentence.tokens, stopwords))
    max_freq = max(freq.values()) if freq else 1
    scores = []
    for sentence in doc.sentences:
        words = _scoring_words(sentence.tokens, stopwords)
        if words:
            score = sum(freq[w] / max_freq for w in words) / len(words)
        else:
            score = 0.0
        scores.append((sentence.index, score))
    return scores


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def summary_size(ratio: float, sentence_count: int) -> int:
    return max(1, _round_half_up(ratio * sentence_count))


def summarize(doc: Document, opts: SummaryOptions = SummaryOptions()) -> Summary:
    """Select the top-scoring sentences, ties broken toward the earlier one,
    and return them in original document order."""
    if not doc.sentences:
        raise ValueError("cannot summarize an empty document")
    if not 0.0 < opts.ratio <= 1.0:
        raise ValueError(f"ratio must be in (0, 1], got {opts.ratio}")
    scores = score_sentences(doc, opts.stopwords)
    k = summary_size(opts.ratio, len(doc.sentences))
    ranked = sorted(scores, key=lambda item: (-item[1], item[0]))
    selected = tuple(sorted(index for index, _ in ranked[:k]))
    text = "".join(doc.sentences[i].text for i in selected)
    return Summary(selected, text)


def summary_document(doc: Document, summary: Summary) -> Document:
    """Rebuild the selected sentences as a standalone Document.

    Token offsets are rebased onto the concatenated summary text; boundary
    detection is not re-run, so the selection's sentence structure is kept
    as-is.
    """
    sentence_tokens = []
    new_base = 0
    for idx in summary.sentence_indices:
        sentence = doc.sentences[idx]
        delta = new_base - sentence.tokens[0].start
        rebased = [
            Token(t.kind, t.text, t.start + delta, t.end + delta) for t in sentence.tokens
        ]
        sentence_tokens.append(rebased)
        new_base = rebased[-1].end
    return build_document(summary.text, sentence_tokens)


def summarize_neural(
    doc: Document,
    params: transformer.ModelParams,
    cfg: transformer.ModelConfig,
    opts: SummaryOptions = SummaryOptions(),
    max_new: int = 32,
) -> str:
    """Text-to-text toy backend: generate from "summarize: " + source.

    Returns the raw generated string; unlike the extractive path it makes no
    sentence-subset guarantee.
    """
    return transformer.generate("summarize: " + doc.source, params, cfg, max_new)
