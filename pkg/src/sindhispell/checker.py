"""Document-level pipeline: normalize, tokenize, flag unknown tokens.

A token is misspelled exactly when its surface is absent from the
lexicon. Suggestions are produced on demand per flagged token, mirroring
the interactive flow: flag first, suggest on click.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lexicon import Lexicon
from .suggest import SuggestParams, Suggestion, suggest
from .textnorm import Token, normalize, tokenize


class InvalidRequestError(ValueError):
    """Suggestions requested for a token that is not misspelled."""


@dataclass(frozen=True)
class FlaggedToken:
    token: Token
    misspelled: bool


@dataclass(frozen=True)
class CheckReport:
    text: str  # the normalized document the offsets index into
    tokens: tuple[FlaggedToken, ...]

    @property
    def total_tokens(self) -> int:
        return len(self.tokens)

    @property
    def misspelled_count(self) -> int:
        return sum(1 for t in self.tokens if t.misspelled)

    def to_dict(self) -> dict:
        return {
            "normalized_text": self.text,
            "tokens": [
                {
                    "surface": ft.token.surface,
                    "start": ft.token.start,
                    "end": ft.token.end,
                    "misspelled": ft.misspelled,
                }
                for ft in self.tokens
            ],
            "total_tokens": self.total_tokens,
            "misspelled_tokens": self.misspelled_count,
        }


def check(text: str, lex: Lexicon, *, strip_diacritics: bool = False) -> CheckReport:
    """Flag every token of ``text`` absent from ``lex``. Pure."""
    normalized = normalize(text, strip_diacritics=strip_diacritics)
    flagged = tuple(
        FlaggedToken(token=tok, misspelled=not lex.contains(tok.surface))
        for tok in tokenize(normalized)
    )
    return CheckReport(text=normalized, tokens=flagged)


def suggestions_for(
    report: CheckReport,
    index: int,
    lex: Lexicon,
    params: SuggestParams | None = None,
) -> list[Suggestion]:
    """Suggestions for the flagged token at ``report.tokens[index]``."""
    if not 0 <= index < len(report.tokens):
        raise IndexError(f"token index {index} out of range")
    flagged = report.tokens[index]
    if not flagged.misspelled:
        raise InvalidRequestError(
            f"token {flagged.token.surface!r} at index {index} is not misspelled"
        )
    return suggest(flagged.token.surface, lex, params)
