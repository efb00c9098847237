import random

import pytest
from hypothesis import given, strategies as st

from sindhispell.encode import (
    EmptyWordError,
    encode,
    encode_batch,
    is_well_formed_code,
)
from sindhispell.tables import KIND_SOUND, parse_table

from .oracles import encode_oracle

_random_word = st.text(
    alphabet="اآءيئبٻڀتثپسصشرڙڻونملهھڪقکگزضظطعغفڦچڇجڄڃخڌڏڊڍذٽٺٿطةQz13٠ ",
    min_size=1,
    max_size=10,
).map(str.strip).filter(bool)


def test_encode_spec_example(sound):
    assert encode("اي", sound) == "x00"


def test_codes_start_with_x_and_match_grammar(sound, shape):
    for word in ("اي", "سنڌ", "abc", "ا1ب"):
        for table in (sound, shape):
            code = encode(word, table)
            assert code.startswith("x")
            assert is_well_formed_code(code)


def test_unmapped_scalars_escape(sound):
    assert encode("abc", sound) == "x???"
    assert encode("aاb", sound) == "x?0?"


def test_adjacent_duplicate_codes_retained(sound, shape):
    assert encode("اي", sound) == "x00"  # two scalars, same group, both kept
    assert encode("ببب", sound) == "x111"
    assert encode("بتث", shape) == "x111"


def test_no_truncation_on_long_words(sound):
    word = "س" * 9
    assert encode(word, sound) == "x" + "6" * 9


def test_first_letter_not_special(sound):
    # classic Soundex keeps the initial letter literal; this encoder must not
    assert encode("سا", sound) == "x60"


def test_unmapped_combining_marks_dropped_by_default(sound):
    word = "اَب"  # fatha is unmapped
    assert encode(word, sound) == "x01"
    assert encode(word, sound, drop_unmapped_marks=False) == "x0?1"


def test_empty_word_rejected(sound):
    with pytest.raises(EmptyWordError):
        encode("", sound)


def test_encode_batch(sound):
    assert encode_batch([], sound) == []
    assert encode_batch(["اي"], sound) == ["x00"]
    assert encode_batch(["اي", "اي"], sound) == ["x00", "x00"]


def test_encode_batch_reports_empty_index(sound):
    with pytest.raises(EmptyWordError) as exc:
        encode_batch(["اي", "", "اي"], sound)
    assert "index 1" in str(exc.value)


@given(_random_word)
def test_matches_brute_force_oracle(sound, shape, word):
    assert encode(word, sound) == encode_oracle(word, sound)
    assert encode(word, shape) == encode_oracle(word, shape)


@given(_random_word, _random_word)
def test_encoding_is_a_homomorphism(sound, word_a, word_b):
    joined = word_a + word_b
    assert encode(joined, sound) == encode(word_a, sound) + encode(word_b, sound)[1:]


@given(_random_word)
def test_length_law_for_fully_mapped_words(sound, word):
    mapped = "".join(ch for ch in word if sound.classify(ch) is not None)
    if mapped:
        assert len(encode(mapped, sound)) == len(mapped) + 1


def test_group_substitution_invariance_exhaustive(sound, shape):
    # swapping any character for a group-mate never changes the code
    rng = random.Random(7)
    for table in (sound, shape):
        letters = sorted(table.members())
        for _, members in table.groups:
            for a in members:
                for b in members:
                    word = list(rng.choice(letters) for _ in range(4))
                    pos = rng.randrange(4)
                    word[pos] = a
                    swapped = word.copy()
                    swapped[pos] = b
                    assert encode("".join(word), table) == encode("".join(swapped), table)


def test_batch_equals_elementwise(sound):
    words = ["اي", "سنڌ", "ٻولي"]
    assert encode_batch(words, sound) == [encode(w, sound) for w in words]
