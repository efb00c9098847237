import random

from hypothesis import given, strategies as st

from sindhispell.distance import edit_distance

from .oracles import distance_oracle

_short = st.text(alphabet="اآءيئبسصثرو ab", max_size=8)


def test_identity():
    assert edit_distance("اي", "اي") == 0
    assert edit_distance("", "") == 0


def test_single_substitution():
    # verified against the DP oracle
    assert distance_oracle("ا", "آ") == 1
    assert edit_distance("ا", "آ") == 1


def test_insertions_from_empty():
    assert edit_distance("", "اي") == 2
    assert edit_distance("اي", "") == 2


def test_mixed_edits():
    assert edit_distance("سنڌي", "سنڌ") == 1
    assert edit_distance("ڪتاب", "ڪتابن") == 1
    assert edit_distance("گل", "قلم") == 2


@given(_short, _short)
def test_matches_full_matrix_oracle(a, b):
    assert edit_distance(a, b) == distance_oracle(a, b)


@given(_short, _short)
def test_symmetry(a, b):
    assert edit_distance(a, b) == edit_distance(b, a)


@given(_short)
def test_zero_iff_equal(a):
    assert edit_distance(a, a) == 0


@given(_short, _short, _short)
def test_triangle_inequality(a, b, c):
    assert edit_distance(a, c) <= edit_distance(a, b) + edit_distance(b, c)


def test_randomized_against_oracle_bulk():
    rng = random.Random(2024)
    letters = "اآءيئبسصثروڙڻ"
    for _ in range(500):
        a = "".join(rng.choice(letters) for _ in range(rng.randint(0, 10)))
        b = "".join(rng.choice(letters) for _ in range(rng.randint(0, 10)))
        assert edit_distance(a, b) == distance_oracle(a, b)
