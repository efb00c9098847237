"""Suggestion generation for a misspelled word.

Pipeline: collect candidate words whose sound code (SOX) and/or shape
code (SPX) equals the query's — a word found by both routes is tagged
BOTH — then consolidate: drop candidates beyond the edit-distance cutoff,
sort by (distance, source priority BOTH < SOX < SPX, lexicon insertion
order), truncate, and assign 1-based ranks.

Because code matching preserves length, every SOX/SPX candidate has
exactly the query's scalar count; the edit-distance cutoff then bounds
how many of those positions may differ. The query word itself is never
suggested.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distance import edit_distance
from .encode import encode
from .lexicon import Lexicon

SOURCE_BOTH = "BOTH"
SOURCE_SOX = "SOX"
SOURCE_SPX = "SPX"
_SOURCE_PRIORITY = {SOURCE_BOTH: 0, SOURCE_SOX: 1, SOURCE_SPX: 2}

MERGE_POLICIES = ("union", "sound-only", "shape-only")


@dataclass(frozen=True)
class Suggestion:
    word: str
    source: str  # SOX | SPX | BOTH
    distance: int
    rank: int

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "source": self.source,
            "distance": self.distance,
            "rank": self.rank,
        }


@dataclass(frozen=True)
class SuggestParams:
    max_distance: int = 2
    max_results: int = 10
    merge_policy: str = "union"

    def __post_init__(self) -> None:
        if self.max_distance < 0:
            raise ValueError("max_distance must be >= 0")
        if self.max_results < 1:
            raise ValueError("max_results must be >= 1")
        if self.merge_policy not in MERGE_POLICIES:
            raise ValueError(
                f"merge_policy must be one of {MERGE_POLICIES}, "
                f"got {self.merge_policy!r}"
            )


def sox_candidates(word: str, lex: Lexicon) -> list[str]:
    """Lexicon words sharing the query's sound code, minus the query."""
    code = encode(word, lex.sound_table)
    return [w for w in lex.sound_bucket(code) if w != word]


def spx_candidates(word: str, lex: Lexicon) -> list[str]:
    """Lexicon words sharing the query's shape code, minus the query."""
    code = encode(word, lex.shape_table)
    return [w for w in lex.shape_bucket(code) if w != word]


def suggest(
    word: str, lex: Lexicon, params: SuggestParams | None = None
) -> list[Suggestion]:
    """Ranked correction suggestions for a normalized, non-empty word."""
    params = params if params is not None else SuggestParams()
    sources: dict[str, str] = {}
    if params.merge_policy in ("union", "sound-only"):
        for w in sox_candidates(word, lex):
            sources[w] = SOURCE_SOX
    if params.merge_policy in ("union", "shape-only"):
        for w in spx_candidates(word, lex):
            sources[w] = SOURCE_BOTH if w in sources else SOURCE_SPX

    scored = []
    for w, source in sources.items():
        d = edit_distance(word, w)
        if d <= params.max_distance:
            scored.append((d, _SOURCE_PRIORITY[source], lex.word_id(w), w, source))
    scored.sort()
    return [
        Suggestion(word=w, source=source, distance=d, rank=rank)
        for rank, (d, _prio, _wid, w, source) in enumerate(
            scored[: params.max_results], start=1
        )
    ]
