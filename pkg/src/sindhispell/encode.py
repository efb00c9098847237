"""Word → code-string encoding under a group table.

A code is the literal prefix ``x`` followed by one symbol per encoded
scalar, in word order:

    code   := 'x' symbol*
    symbol := [0-9A-Z?]

Scalars in no group encode as the escape ``?`` (it equals no group code,
so unmapped characters match only themselves positionally). Adjacent
duplicate symbols are kept and codes are never truncated, so two words
share a code exactly when they have the same length and groupwise-equal
characters. Combining marks that are unmapped are dropped rather than
escaped (otherwise visually identical words would encode to different
lengths); pass ``drop_unmapped_marks=False`` to escape them instead.

Codes are pure ASCII: safe as index keys and in URLs.
"""

from __future__ import annotations

import re
import unicodedata

from .tables import GroupTable

CODE_PREFIX = "x"
UNMAPPED_SYMBOL = "?"

_CODE_RE = re.compile(r"x[0-9A-Z?]*\Z")


class EmptyWordError(ValueError):
    """encode() requires a non-empty word."""


class MalformedCodeError(ValueError):
    """A code string does not match the code grammar."""


def is_well_formed_code(code: str) -> bool:
    return _CODE_RE.fullmatch(code) is not None


def encode(word: str, table: GroupTable, *, drop_unmapped_marks: bool = True) -> str:
    """Encode a normalized, non-empty word under ``table``."""
    if not word:
        raise EmptyWordError("cannot encode an empty word")
    symbols = [CODE_PREFIX]
    for ch in word:
        code = table.classify(ch)
        if code is not None:
            symbols.append(code)
        elif drop_unmapped_marks and unicodedata.category(ch) == "Mn":
            continue
        else:
            symbols.append(UNMAPPED_SYMBOL)
    return "".join(symbols)


def encode_batch(
    words: list[str], table: GroupTable, *, drop_unmapped_marks: bool = True
) -> list[str]:
    """Element-wise ``encode``; order preserved."""
    codes = []
    for i, word in enumerate(words):
        if not word:
            raise EmptyWordError(f"empty word at index {i}")
        codes.append(encode(word, table, drop_unmapped_marks=drop_unmapped_marks))
    return codes
