"""Turn answer HTML into sentences while protecting inline code text.

The pipeline needs two views of an answer body: the inline ``<code>`` spans
(mined for API mentions) and the surrounding natural-language sentences
(collected as context). Both views come from the same single split so that
sentence indexes stay consistent across stages.

Inline code is replaced by private-use placeholder characters before
boundary detection and restored verbatim afterwards, so a token like
``app.activity.onCreate`` never splits a sentence. ``<pre>`` code blocks are
treated as display code: they force a sentence boundary and contribute no
sentence text.
"""

from __future__ import annotations

import html
import re
from dataclasses import dataclass, field

# Placeholders from the Unicode private-use area; they survive tag stripping
# and whitespace collapsing untouched.
_CODE_OPEN = ""
_CODE_CLOSE = ""
_BLOCK_BREAK = ""

_CODE_TAG_RE = re.compile(r"<code(?:\s[^>]*)?>", re.IGNORECASE)
_CODE_END_RE = re.compile(r"</code\s*>", re.IGNORECASE)
_PRE_OPEN_RE = re.compile(r"<pre(?:\s[^>]*)?>", re.IGNORECASE)
_PRE_CLOSE_RE = re.compile(r"</pre\s*>", re.IGNORECASE)

# Only these tags force sentence boundaries; anything else is stripped.
_BLOCK_TAG_RE = re.compile(r"</?(?:p|li|br|pre)\b[^>]*/?>", re.IGNORECASE)
_ANY_TAG_RE = re.compile(r"<[^>]*>")

_PLACEHOLDER_RE = re.compile(f"{_CODE_OPEN}(\\d+){_CODE_CLOSE}")

# A boundary is punctuation, whitespace, then an uppercase letter or digit.
_BOUNDARY_RE = re.compile(r"[.!?]+\s+(?=[A-Z0-9])")

ABBREVIATIONS = frozenset({
    "e.g.", "i.e.", "etc.", "vs.", "cf.", "al.",
    "mr.", "mrs.", "ms.", "dr.", "prof.", "fig.", "st.",
})


@dataclass
class Segment:
    """One slice of an answer body: prose HTML or the inside of a code tag."""

    kind: str  # "text" | "code"
    raw: str   # exact substring of the original body (code: inner text only)
    in_pre: bool = False
    unterminated: bool = False
    opener: str = ""  # exact opening/closing tag text, kept so the
    closer: str = ""  # original body can be reassembled byte for byte


def split_code_segments(body_html: str) -> list[Segment]:
    """Split a body into alternating prose and code segments.

    Concatenating ``text.raw`` and ``opener + code.raw + closer`` in order
    reproduces the input exactly. An unclosed ``<code>`` runs to the end of
    the input and is flagged ``unterminated``.
    """
    segments: list[Segment] = []
    pre_depth = 0
    pos = 0
    while True:
        match = _CODE_TAG_RE.search(body_html, pos)
        if match is None:
            segments.append(Segment("text", body_html[pos:]))
            break
        text = body_html[pos:match.start()]
        segments.append(Segment("text", text))
        pre_depth += len(_PRE_OPEN_RE.findall(text))
        pre_depth -= len(_PRE_CLOSE_RE.findall(text))
        pre_depth = max(pre_depth, 0)

        end = _CODE_END_RE.search(body_html, match.end())
        if end is None:
            segments.append(Segment(
                "code", body_html[match.end():], in_pre=pre_depth > 0,
                unterminated=True, opener=match.group(),
            ))
            break
        segments.append(Segment(
            "code", body_html[match.end():end.start()], in_pre=pre_depth > 0,
            opener=match.group(), closer=end.group(),
        ))
        pos = end.end()
    return segments


@dataclass
class SegmentedAnswer:
    """Sentences of one answer plus the sentence index of each inline span."""

    sentences: list[str] = field(default_factory=list)
    span_sentence: dict[int, int] = field(default_factory=dict)


def _clean_text_segment(raw: str) -> str:
    cleaned = _BLOCK_TAG_RE.sub(_BLOCK_BREAK, raw)
    cleaned = _ANY_TAG_RE.sub("", cleaned)
    return html.unescape(cleaned)


def _split_block(block: str) -> list[str]:
    """Split one whitespace-collapsed block at sentence boundaries."""
    pieces: list[str] = []
    start = 0
    for match in _BOUNDARY_RE.finditer(block):
        punct_end = match.start() + len(match.group().rstrip())
        word_start = block.rfind(" ", start, match.start()) + 1
        word = block[word_start:punct_end].lower()
        if word in ABBREVIATIONS:
            continue
        pieces.append(block[start:punct_end])
        start = match.end()
    pieces.append(block[start:])
    return [piece for piece in (p.strip() for p in pieces) if piece]


def segment_answer(body_html: str) -> SegmentedAnswer:
    """Segment a body into sentences and locate each inline code span.

    Spans inside ``<pre>`` blocks are excluded from the text and get no
    sentence index.
    """
    segments = split_code_segments(body_html)
    parts: list[str] = []
    code_by_ordinal: dict[int, str] = {}
    ordinal = 0
    for segment in segments:
        if segment.kind == "text":
            parts.append(_clean_text_segment(segment.raw))
            continue
        if segment.in_pre:
            parts.append(_BLOCK_BREAK)
        else:
            parts.append(f"{_CODE_OPEN}{ordinal}{_CODE_CLOSE}")
            code_by_ordinal[ordinal] = html.unescape(segment.raw)
        ordinal += 1

    result = SegmentedAnswer()
    for block in "".join(parts).split(_BLOCK_BREAK):
        collapsed = " ".join(block.split())
        if not collapsed:
            continue
        for sentence in _split_block(collapsed):
            index = len(result.sentences)

            def restore(match: re.Match, _index: int = index) -> str:
                span_ordinal = int(match.group(1))
                result.span_sentence[span_ordinal] = _index
                return code_by_ordinal[span_ordinal]

            restored = _PLACEHOLDER_RE.sub(restore, sentence).strip()
            if restored:
                result.sentences.append(restored)
    return result


def segment_sentences(body_html: str) -> list[str]:
    """Sentences of a body, code spans restored inline. Empty input -> []."""
    return segment_answer(body_html).sentences
