"""Speed-reading text engine.

Pipeline: sentence splitting and tokenization -> optional extractive (or toy
neural) summarization -> half-word bolding -> rendering as HTML, Markdown,
ANSI terminal text, or JSON spans. Served over HTTP and as a batch CLI.
"""

__version__ = "0.1.0"

from speedreader.bolding import AnnotatedDocument, BoldingConfig, BoldSpan, annotate, bold_prefix_len
from speedreader.render import RenderFormat, render
from speedreader.summarize import Summary, SummaryOptions, summarize
from speedreader.tokenizer import Document, Sentence, Token, TokenKind, parse_document
from speedreader.typography import TypographyConfig, Violation

__all__ = [
    "AnnotatedDocument",
    "BoldSpan",
    "BoldingConfig",
    "Document",
    "RenderFormat",
    "Sentence",
    "Summary",
    "SummaryOptions",
    "Token",
    "TokenKind",
    "TypographyConfig",
    "Violation",
    "annotate",
    "bold_prefix_len",
    "parse_document",
    "render",
    "summarize",
    "__version__",
]
