"""Bundles the loaded tables and lexicon behind one object.

The CLI and the HTTP service both work through a ``SpellEngine`` so that
table/lexicon loading, checksum verification, and the diacritic-stripping
convention live in one place. Engines are immutable; a reload builds a
new engine and swaps the reference.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from . import checker, lexicon, tables
from .encode import encode
from .suggest import SuggestParams, Suggestion, suggest
from .textnorm import normalize


def shipped_words_path() -> str:
    return str(resources.files("sindhispell.data").joinpath("words.txt"))


@dataclass(frozen=True)
class SpellEngine:
    sound_table: tables.GroupTable
    shape_table: tables.GroupTable
    lexicon: lexicon.Lexicon
    strip_diacritics: bool = False

    @classmethod
    def from_paths(
        cls,
        *,
        sound_table_path: str | None = None,
        shape_table_path: str | None = None,
        words_path: str | None = None,
        index_path: str | None = None,
        strip_diacritics: bool = False,
    ) -> "SpellEngine":
        """Load an engine; exactly one of ``words_path``/``index_path``.

        Table paths default to the shipped tables.
        """
        if (words_path is None) == (index_path is None):
            raise ValueError("exactly one of words_path and index_path is required")
        sound = (
            tables.load_table(sound_table_path, tables.KIND_SOUND)
            if sound_table_path
            else tables.sound_table()
        )
        shape = (
            tables.load_table(shape_table_path, tables.KIND_SHAPE)
            if shape_table_path
            else tables.shape_table()
        )
        if words_path is not None:
            with open(words_path, encoding="utf-8") as fh:
                text = fh.read()
            lex = lexicon.build_from_word_list(
                text, sound, shape, source=words_path, strip_diacritics=strip_diacritics
            )
        else:
            with open(index_path, "rb") as fh:
                lex = lexicon.load(fh.read(), sound, shape)
        return cls(sound, shape, lex, strip_diacritics)

    def normalize(self, text: str) -> str:
        return normalize(text, strip_diacritics=self.strip_diacritics)

    def encode_word(self, word: str, kind: str) -> str:
        table = self.sound_table if kind == tables.KIND_SOUND else self.shape_table
        return encode(self.normalize(word), table)

    def check(self, text: str) -> checker.CheckReport:
        return checker.check(text, self.lexicon, strip_diacritics=self.strip_diacritics)

    def suggest(self, word: str, params: SuggestParams | None = None) -> list[Suggestion]:
        return suggest(self.normalize(word), self.lexicon, params)

    def stats(self) -> lexicon.LexiconStats:
        return lexicon.stats(self.lexicon)
