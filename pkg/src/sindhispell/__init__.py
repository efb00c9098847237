"""Sindhi spell checking.

Two character-class encoders — sound (homophone groups) and shape
(same-glyph groups) — map words to short codes; a code-indexed lexicon
turns a misspelled word's codes into candidate corrections, which are
consolidated and ranked by edit distance.
"""

__version__ = "0.1.0"

from .checker import CheckReport, FlaggedToken, InvalidRequestError, check, suggestions_for
from .distance import edit_distance
from .encode import EmptyWordError, MalformedCodeError, encode, encode_batch
from .engine import SpellEngine
from .lexicon import (
    Lexicon,
    LexiconError,
    LexiconStats,
    StaleIndexError,
    WordListError,
    build,
    build_from_word_list,
    load,
    load_word_list,
    save,
    stats,
)
from .suggest import (
    MERGE_POLICIES,
    SuggestParams,
    Suggestion,
    sox_candidates,
    spx_candidates,
    suggest,
)
from .tables import (
    GroupTable,
    SINDHI_ALPHABET,
    SHAPE_ALPHABET,
    SOUND_ALPHABET,
    TableFormatError,
    classify,
    load_table,
    parse_table,
    serialize_table,
    shape_table,
    sound_table,
    validate_ship_tables,
)
from .textnorm import Token, normalize, tokenize

__all__ = [
    "__version__",
    "CheckReport", "FlaggedToken", "InvalidRequestError", "check", "suggestions_for",
    "edit_distance",
    "EmptyWordError", "MalformedCodeError", "encode", "encode_batch",
    "SpellEngine",
    "Lexicon", "LexiconError", "LexiconStats", "StaleIndexError", "WordListError",
    "build", "build_from_word_list", "load", "load_word_list", "save", "stats",
    "MERGE_POLICIES", "SuggestParams", "Suggestion",
    "sox_candidates", "spx_candidates", "suggest",
    "GroupTable", "SINDHI_ALPHABET", "SHAPE_ALPHABET", "SOUND_ALPHABET",
    "TableFormatError", "classify", "load_table", "parse_table",
    "serialize_table", "shape_table", "sound_table", "validate_ship_tables",
    "Token", "normalize", "tokenize",
]
