"""Character group tables for the sound and shape encoders.

A table partitions part of the Sindhi character inventory into coded
groups: every member scalar carries its group's single-symbol code, and a
scalar may belong to at most one group. Characters outside every group
are "unmapped" — a first-class classification, not an error.

Table file format (UTF-8):

    # comment line
    <code> <member> <member> ...

One group per data line; the code is a single symbol from the table
kind's alphabet; members are single Unicode scalars separated by
whitespace. Groups must be declared in alphabet order. ``serialize_table``
emits this exact format, and load ∘ serialize is the identity on the
group structure (bit-exact on the serialized form).

Code alphabets:
    sound: 0–9 then A–L (exactly 22 symbols — one per homophone group)
    shape: 0–9 then A–Z

The shipped tables live in ``sindhispell/data/``. The sound table groups
letters by pronunciation; letters whose pronunciation matches nothing
else form singleton groups. The shape table groups letters sharing a base
glyph, differing only in dots or small marks.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

SOUND_ALPHABET = "0123456789ABCDEFGHIJKL"
SHAPE_ALPHABET = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"

KIND_SOUND = "sound"
KIND_SHAPE = "shape"
_ALPHABETS = {KIND_SOUND: SOUND_ALPHABET, KIND_SHAPE: SHAPE_ALPHABET}

#: The 52-letter Sindhi alphabet. Two entries (جھ, گھ) are aspirate
#: digraphs of two scalars each; table coverage is checked over the
#: scalars occurring in these entries.
SINDHI_ALPHABET = (
    "ا", "ب", "ٻ", "ڀ", "ت", "ٿ", "ٽ", "ٺ", "ث", "پ", "ڦ",
    "ج", "ڄ", "جھ", "ڃ", "چ", "ڇ", "ح", "خ",
    "د", "ڌ", "ڏ", "ڊ", "ڍ", "ذ",
    "ر", "ڙ", "ز", "س", "ش", "ص", "ض", "ط", "ظ",
    "ع", "غ", "ف", "ق", "ڪ", "ک", "گ", "ڳ", "گھ", "ڱ",
    "ل", "م", "ن", "ڻ", "و", "ھ", "ء", "ي",
)


class TableFormatError(ValueError):
    """A table file violates the format or a table invariant."""


class AlphabetError(TableFormatError):
    """A group code is outside the table kind's alphabet."""


class DuplicateCodeError(TableFormatError):
    """The same group code appears on more than one line."""


class EmptyGroupError(TableFormatError):
    """A data line declares a code with no members."""


class PartitionError(TableFormatError):
    """A scalar appears in more than one group."""


@dataclass(frozen=True)
class GroupTable:
    """Validated, immutable group table. Build via ``parse_table``."""

    kind: str
    groups: tuple[tuple[str, tuple[str, ...]], ...]
    _code_of: dict[str, str] = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self) -> None:
        mapping = {m: code for code, members in self.groups for m in members}
        object.__setattr__(self, "_code_of", mapping)

    @property
    def alphabet(self) -> str:
        return _ALPHABETS[self.kind]

    def classify(self, scalar: str) -> str | None:
        """Group code for ``scalar``, or None when unmapped. Total."""
        return self._code_of.get(scalar)

    def members(self) -> frozenset[str]:
        """Union of all group members."""
        return frozenset(self._code_of)

    def checksum(self) -> str:
        """SHA-256 of the canonical serialized form."""
        return hashlib.sha256(serialize_table(self).encode("utf-8")).hexdigest()


def classify(table: GroupTable, scalar: str) -> str | None:
    return table.classify(scalar)


def parse_table(source: str, kind: str) -> GroupTable:
    """Parse and validate a table file's content."""
    if kind not in _ALPHABETS:
        raise ValueError(f"unknown table kind {kind!r}")
    alphabet = _ALPHABETS[kind]
    groups: list[tuple[str, tuple[str, ...]]] = []
    seen_codes: dict[str, int] = {}
    owner: dict[str, str] = {}
    last_pos = -1
    for lineno, line in enumerate(source.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        code, members = parts[0], parts[1:]
        if len(code) != 1 or code not in alphabet:
            raise AlphabetError(
                f"line {lineno}: code {code!r} is not a single symbol "
                f"of the {kind} alphabet"
            )
        if code in seen_codes:
            raise DuplicateCodeError(
                f"line {lineno}: code {code!r} already declared on "
                f"line {seen_codes[code]}"
            )
        pos = alphabet.index(code)
        if pos <= last_pos:
            raise TableFormatError(
                f"line {lineno}: code {code!r} out of alphabet order"
            )
        if not members:
            raise EmptyGroupError(f"line {lineno}: group {code!r} has no members")
        for m in members:
            if len(m) != 1:
                raise TableFormatError(
                    f"line {lineno}: member {m!r} is not a single scalar"
                )
            if m in owner:
                raise PartitionError(
                    f"scalar {m!r} appears in group {owner[m]!r} "
                    f"and group {code!r}"
                )
            owner[m] = code
        seen_codes[code] = lineno
        last_pos = pos
        groups.append((code, tuple(members)))
    return GroupTable(kind=kind, groups=tuple(groups))


def serialize_table(table: GroupTable) -> str:
    """Canonical file form: one ``code member...`` line per group."""
    lines = [" ".join((code, *members)) for code, members in table.groups]
    return "".join(line + "\n" for line in lines)


def load_table(path: str, kind: str) -> GroupTable:
    with open(path, encoding="utf-8") as fh:
        return parse_table(fh.read(), kind)


def _shipped_text(name: str) -> str:
    return resources.files("sindhispell.data").joinpath(name).read_text("utf-8")


@lru_cache(maxsize=None)
def sound_table() -> GroupTable:
    """The shipped Sindhi sound (homophone) table."""
    return parse_table(_shipped_text("sound_groups.txt"), KIND_SOUND)


@lru_cache(maxsize=None)
def shape_table() -> GroupTable:
    """The shipped Sindhi shape (glyph) table."""
    return parse_table(_shipped_text("shape_groups.txt"), KIND_SHAPE)


@dataclass(frozen=True)
class ShipTablesReport:
    """Validation report for a (sound, shape) table pair."""

    sound_groups: int
    shape_groups: int
    sound_uncovered: tuple[str, ...]
    shape_uncovered: tuple[str, ...]
    inventory_difference: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return (
            self.sound_groups == 22
            and not self.sound_uncovered
            and not self.shape_uncovered
            and not self.inventory_difference
        )

    def summary(self) -> str:
        lines = [
            f"sound groups: {self.sound_groups} (expected 22)",
            f"shape groups: {self.shape_groups}",
        ]
        if self.sound_uncovered:
            lines.append("letters missing from sound table: " + " ".join(self.sound_uncovered))
        if self.shape_uncovered:
            lines.append("letters missing from shape table: " + " ".join(self.shape_uncovered))
        if self.inventory_difference:
            lines.append(
                "scalars mapped by only one table: " + " ".join(self.inventory_difference)
            )
        lines.append("OK" if self.ok else "PROBLEMS FOUND")
        return "\n".join(lines)


def _uncovered(table: GroupTable) -> tuple[str, ...]:
    mapped = table.members()
    missing = []
    for letter in SINDHI_ALPHABET:
        if any(scalar not in mapped for scalar in letter):
            missing.append(letter)
    return tuple(missing)


def validate_ship_tables(
    sound: GroupTable | None = None, shape: GroupTable | None = None
) -> ShipTablesReport:
    """Check the shipped pair: 22 sound groups, full alphabet coverage,
    and that both tables partition the same scalar inventory.

    Problems are reported, not raised.
    """
    sound = sound if sound is not None else sound_table()
    shape = shape if shape is not None else shape_table()
    diff = sound.members() ^ shape.members()
    return ShipTablesReport(
        sound_groups=len(sound.groups),
        shape_groups=len(shape.groups),
        sound_uncovered=_uncovered(sound),
        shape_uncovered=_uncovered(shape),
        inventory_difference=tuple(sorted(diff)),
    )
