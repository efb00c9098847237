"""Unicode normalization and tokenization for Arabic-script Sindhi text.

Normalization rules (applied in order, idempotent as a whole):

1. Strip tatweel/kashida (U+0640) — typographic elongation, no lexical
   content.
2. Optionally strip harakat (U+064B–U+0652). OFF by default: the shape
   groups distinguish letters by diacritic-like marks, so silent stripping
   would corrupt shape matching.
3. Canonical composition (NFC), so precomposed letters such as
   alif-madda (U+0622) arrive as single scalars regardless of how the
   source text spelled them.

Tokens are maximal runs of Arabic-script letters and combining marks.
Whitespace, digits (including Arabic-Indic ٠–٩), Latin text, and
punctuation (including Arabic ، ؛ ؟) separate tokens and never appear
inside one. Offsets are 0-based Unicode scalar indexes into the
normalized text, end exclusive.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass

TATWEEL = "ـ"

# Harakat / short-vowel marks subject to optional stripping.
HARAKAT_RANGE = (0x064B, 0x0652)

# Code blocks whose letters and marks count as Arabic script here.
_ARABIC_BLOCKS = (
    (0x0600, 0x06FF),  # Arabic
    (0x0750, 0x077F),  # Arabic Supplement
    (0x08A0, 0x08FF),  # Arabic Extended-A
    (0xFB50, 0xFDFF),  # Arabic Presentation Forms-A
    (0xFE70, 0xFEFF),  # Arabic Presentation Forms-B
)

# Letters (Lo/Lm) start or extend a token; combining marks (Mn) extend one.
_TOKEN_CATEGORIES = frozenset({"Lo", "Lm", "Mn"})


@dataclass(frozen=True)
class Token:
    """One word token; ``surface == text[start:end]`` of the source document."""

    surface: str
    start: int
    end: int


def _in_arabic_block(cp: int) -> bool:
    for lo, hi in _ARABIC_BLOCKS:
        if lo <= cp <= hi:
            return True
    return False


def is_token_char(ch: str) -> bool:
    """True if ``ch`` belongs inside a word token."""
    return (
        _in_arabic_block(ord(ch))
        and unicodedata.category(ch) in _TOKEN_CATEGORIES
    )


def normalize(raw: str, *, strip_diacritics: bool = False) -> str:
    """Normalize ``raw`` per the module rules. Idempotent."""
    text = raw.replace(TATWEEL, "")
    if strip_diacritics:
        lo, hi = HARAKAT_RANGE
        text = "".join(ch for ch in text if not lo <= ord(ch) <= hi)
    return unicodedata.normalize("NFC", text)


def tokenize(text: str) -> list[Token]:
    """Split normalized ``text`` into word tokens with scalar offsets.

    Concatenating tokens and the separators between them in order
    reconstructs ``text`` exactly.
    """
    tokens: list[Token] = []
    start: int | None = None
    for i, ch in enumerate(text):
        if is_token_char(ch):
            if start is None:
                start = i
        elif start is not None:
            tokens.append(Token(text[start:i], start, i))
            start = None
    if start is not None:
        tokens.append(Token(text[start:], start, len(text)))
    return tokens
