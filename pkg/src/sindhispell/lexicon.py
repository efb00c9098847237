"""Correct-word repository with code-keyed inverted indexes.

The lexicon holds the correctly spelled words in insertion order plus two
inverted indexes: word ids bucketed by sound code and by shape code.
Bucket lookup is equivalent to encoding every word and filtering — the
index is just the fast realization.

Word-list file format (UTF-8): one word per line, ``#`` starts a comment
line. A blank line or a line with internal whitespace is an error naming
the 1-based line number. Duplicates after normalization are merged
silently; the merge count is reported in the stats.

The persisted index is a versioned binary: an 8-byte magic, the SHA-256
of the payload, then a JSON payload. Loading verifies the payload
checksum and that the stored table checksums match the tables supplied
by the caller, so an index can never silently serve buckets computed
from different tables.
"""

from __future__ import annotations

import hashlib
import json
import statistics
from dataclasses import dataclass

from .encode import MalformedCodeError, encode, is_well_formed_code
from .tables import KIND_SHAPE, KIND_SOUND, GroupTable
from .textnorm import normalize

MAGIC = b"SNDHLEX\x01"
FORMAT_VERSION = 1


class LexiconError(ValueError):
    pass


class WordListError(LexiconError):
    """Bad word-list input; ``line`` is the 1-based offending line."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class IndexFormatError(LexiconError):
    """Persisted index is corrupt, truncated, or a different version."""


class StaleIndexError(LexiconError):
    """Persisted index was built from different group tables."""


@dataclass(frozen=True)
class LexiconMeta:
    source: str
    duplicates_merged: int
    sound_checksum: str
    shape_checksum: str


@dataclass(frozen=True)
class IndexStats:
    bucket_count: int
    max_bucket: int
    mean_bucket: float


@dataclass(frozen=True)
class LexiconStats:
    word_count: int
    duplicates_merged: int
    sound: IndexStats
    shape: IndexStats

    def to_dict(self) -> dict:
        return {
            "word_count": self.word_count,
            "duplicates_merged": self.duplicates_merged,
            "sound": vars(self.sound).copy(),
            "shape": vars(self.shape).copy(),
        }


class Lexicon:
    """Immutable after construction; all queries are read-only."""

    def __init__(
        self,
        words: tuple[str, ...],
        sound_index: dict[str, list[int]],
        shape_index: dict[str, list[int]],
        meta: LexiconMeta,
        sound_table: GroupTable,
        shape_table: GroupTable,
    ) -> None:
        self.words = words
        self.meta = meta
        self.sound_table = sound_table
        self.shape_table = shape_table
        self._indexes = {KIND_SOUND: sound_index, KIND_SHAPE: shape_index}
        self._word_ids = {w: i for i, w in enumerate(words)}

    def __len__(self) -> int:
        return len(self.words)

    def contains(self, word: str) -> bool:
        """Exact-string membership of a normalized word."""
        return word in self._word_ids

    __contains__ = contains

    def word_id(self, word: str) -> int:
        return self._word_ids[word]

    def bucket(self, code: str, kind: str) -> list[str]:
        """All words whose ``kind`` code equals ``code``, in insertion order."""
        if not is_well_formed_code(code):
            raise MalformedCodeError(f"malformed code {code!r}")
        index = self._indexes[kind]
        return [self.words[i] for i in index.get(code, ())]

    def sound_bucket(self, code: str) -> list[str]:
        return self.bucket(code, KIND_SOUND)

    def shape_bucket(self, code: str) -> list[str]:
        return self.bucket(code, KIND_SHAPE)

    def codes_for(self, word: str) -> tuple[str, str]:
        """(sound code, shape code) of an arbitrary normalized word."""
        return encode(word, self.sound_table), encode(word, self.shape_table)


def build(
    words: list[str],
    sound_table: GroupTable,
    shape_table: GroupTable,
    *,
    source: str = "<memory>",
    duplicates_merged: int = 0,
) -> Lexicon:
    """Index ``words`` (normalized, deduplicated, non-empty) under both tables."""
    sound_index: dict[str, list[int]] = {}
    shape_index: dict[str, list[int]] = {}
    seen: set[str] = set()
    for i, word in enumerate(words):
        if not word:
            raise LexiconError(f"empty word at position {i + 1}")
        if word in seen:
            raise LexiconError(f"duplicate word {word!r} at position {i + 1}")
        if word != normalize(word):
            raise LexiconError(f"word {word!r} at position {i + 1} is not normalized")
        seen.add(word)
        sound_index.setdefault(encode(word, sound_table), []).append(i)
        shape_index.setdefault(encode(word, shape_table), []).append(i)
    meta = LexiconMeta(
        source=source,
        duplicates_merged=duplicates_merged,
        sound_checksum=sound_table.checksum(),
        shape_checksum=shape_table.checksum(),
    )
    return Lexicon(tuple(words), sound_index, shape_index, meta, sound_table, shape_table)


def load_word_list(
    text: str, *, source: str = "<memory>", strip_diacritics: bool = False
) -> tuple[list[str], int]:
    """Parse a word-list file's content.

    Returns (words in first-seen order, duplicates merged). Raises
    ``WordListError`` naming the line for blank lines and lines that are
    not a single word.
    """
    words: list[str] = []
    seen: set[str] = set()
    duplicates = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if not stripped:
            raise WordListError(lineno, "blank line (expected one word)")
        if len(stripped.split()) != 1:
            raise WordListError(lineno, f"expected one word, got {stripped!r}")
        word = normalize(stripped, strip_diacritics=strip_diacritics)
        if not word:
            raise WordListError(lineno, f"word {stripped!r} is empty after normalization")
        if word in seen:
            duplicates += 1
            continue
        seen.add(word)
        words.append(word)
    return words, duplicates


def build_from_word_list(
    text: str,
    sound_table: GroupTable,
    shape_table: GroupTable,
    *,
    source: str = "<memory>",
    strip_diacritics: bool = False,
) -> Lexicon:
    words, duplicates = load_word_list(
        text, source=source, strip_diacritics=strip_diacritics
    )
    return build(
        words, sound_table, shape_table, source=source, duplicates_merged=duplicates
    )


def stats(lex: Lexicon) -> LexiconStats:
    def index_stats(kind: str) -> IndexStats:
        sizes = [len(ids) for ids in lex._indexes[kind].values()]
        return IndexStats(
            bucket_count=len(sizes),
            max_bucket=max(sizes, default=0),
            mean_bucket=statistics.mean(sizes) if sizes else 0.0,
        )

    return LexiconStats(
        word_count=len(lex.words),
        duplicates_merged=lex.meta.duplicates_merged,
        sound=index_stats(KIND_SOUND),
        shape=index_stats(KIND_SHAPE),
    )


def bucket_sizes(lex: Lexicon, kind: str) -> dict[str, int]:
    """code → bucket size for one index (report/plot input)."""
    return {code: len(ids) for code, ids in lex._indexes[kind].items()}


def save(lex: Lexicon) -> bytes:
    """Serialize; identical inputs give byte-identical output."""
    payload = json.dumps(
        {
            "format_version": FORMAT_VERSION,
            "meta": vars(lex.meta).copy(),
            "words": list(lex.words),
            "sound_index": lex._indexes[KIND_SOUND],
            "shape_index": lex._indexes[KIND_SHAPE],
        },
        ensure_ascii=False,
        sort_keys=True,
        separators=(",", ":"),
    ).encode("utf-8")
    digest = hashlib.sha256(payload).hexdigest().encode("ascii")
    return MAGIC + digest + b"\n" + payload


def load(data: bytes, sound_table: GroupTable, shape_table: GroupTable) -> Lexicon:
    """Deserialize and verify: payload checksum, format version, and that
    ``sound_table``/``shape_table`` match the tables the index was built
    from (otherwise ``StaleIndexError`` — rebuild required)."""
    if len(data) < len(MAGIC) + 65 or not data.startswith(MAGIC):
        raise IndexFormatError("not a lexicon index file")
    digest = data[len(MAGIC) : len(MAGIC) + 64]
    payload = data[len(MAGIC) + 65 :]
    if hashlib.sha256(payload).hexdigest().encode("ascii") != digest:
        raise IndexFormatError("checksum failure (corrupt or truncated index)")
    doc = json.loads(payload.decode("utf-8"))
    if doc.get("format_version") != FORMAT_VERSION:
        raise IndexFormatError(
            f"unsupported index format version {doc.get('format_version')!r}"
        )
    meta = LexiconMeta(**doc["meta"])
    if meta.sound_checksum != sound_table.checksum() or (
        meta.shape_checksum != shape_table.checksum()
    ):
        raise StaleIndexError(
            "index was built from different group tables; rebuild it"
        )
    return Lexicon(
        tuple(doc["words"]),
        doc["sound_index"],
        doc["shape_index"],
        meta,
        sound_table,
        shape_table,
    )
