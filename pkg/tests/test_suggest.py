import random

import pytest

from sindhispell.distance import edit_distance
from sindhispell.encode import EmptyWordError, encode
from sindhispell.lexicon import build
from sindhispell.suggest import (
    SuggestParams,
    sox_candidates,
    spx_candidates,
    suggest,
)

from .conftest import FIG3_QUERY, FIG3_WORDS

# fixture words matching the query by shape code too (hand-traced)
FIG3_BOTH = ["ئثيڙو", "يثئڙو", "يثيرو"]


def test_params_defaults_and_validation():
    params = SuggestParams()
    assert (params.max_distance, params.max_results, params.merge_policy) == (2, 10, "union")
    with pytest.raises(ValueError):
        SuggestParams(max_distance=-1)
    with pytest.raises(ValueError):
        SuggestParams(max_results=0)
    with pytest.raises(ValueError):
        SuggestParams(merge_policy="best")


def test_sox_candidates_fig3_scenario(fig3_lexicon):
    assert sox_candidates(FIG3_QUERY, fig3_lexicon) == FIG3_WORDS


def test_sox_candidates_one_word_scenario(one_word_lexicon):
    assert sox_candidates("اثير", one_word_lexicon) == ["اسير"]


def test_self_exclusion(fig3_lexicon, sound, shape):
    # a word present in an otherwise empty lexicon yields nothing
    lex = build(["اسير"], sound, shape)
    assert sox_candidates("اسير", lex) == []
    assert spx_candidates("اسير", lex) == []
    # and a lexicon word queried against the fixture never suggests itself
    for s in suggest("اثيڙو", fig3_lexicon, SuggestParams(max_results=30)):
        assert s.word != "اثيڙو"


def test_no_code_match_gives_empty(sound, shape):
    lex = build(["اي"], sound, shape)
    assert sox_candidates("گل", lex) == []
    assert spx_candidates("گل", lex) == []


def test_code_matching_is_length_preserving(sound, shape):
    # "ا" vs lexicon ["اي"]: same leading group but codes differ in length
    lex = build(["اي"], sound, shape)
    assert encode("ا", sound) == "x0"
    assert encode("اي", sound) == "x00"
    assert sox_candidates("ا", lex) == []
    assert spx_candidates("ا", lex) == []
    assert suggest("ا", lex) == []


def test_spx_candidates_fig3(fig3_lexicon):
    assert spx_candidates(FIG3_QUERY, fig3_lexicon) == FIG3_BOTH


def test_suggest_union_order_sources_and_ranks(fig3_lexicon):
    got = suggest(FIG3_QUERY, fig3_lexicon, SuggestParams(max_results=20))
    expected = [
        ("ئثيڙو", "BOTH", 1),
        ("يثئڙو", "BOTH", 1),
        ("يثيرو", "BOTH", 1),
        ("اثيڙو", "SOX", 1),
        ("آثيڙو", "SOX", 1),
        ("ءثيڙو", "SOX", 1),
        ("يسيڙو", "SOX", 1),
        ("يصيڙو", "SOX", 1),
        ("يثاڙو", "SOX", 1),
        ("يثآڙو", "SOX", 1),
        ("يثءڙو", "SOX", 1),
        ("يثيڻو", "SOX", 1),
        ("اسيڙو", "SOX", 2),
        ("آصيڙو", "SOX", 2),
        ("ءثاڙو", "SOX", 2),
    ]
    assert [(s.word, s.source, s.distance) for s in got] == expected
    assert [s.rank for s in got] == list(range(1, 16))


def test_suggest_sound_only_matches_fixture_order(fig3_lexicon):
    got = suggest(
        FIG3_QUERY, fig3_lexicon, SuggestParams(max_results=15, merge_policy="sound-only")
    )
    assert [s.word for s in got] == FIG3_WORDS
    assert all(s.source == "SOX" for s in got)


def test_suggest_shape_only(fig3_lexicon):
    got = suggest(FIG3_QUERY, fig3_lexicon, SuggestParams(merge_policy="shape-only"))
    assert [s.word for s in got] == FIG3_BOTH
    assert all(s.source == "SPX" for s in got)


def test_union_is_superset_of_both_routes(fig3_lexicon):
    merged = {
        s.word
        for s in suggest(FIG3_QUERY, fig3_lexicon, SuggestParams(max_distance=5, max_results=50))
    }
    assert merged >= set(sox_candidates(FIG3_QUERY, fig3_lexicon))
    assert merged >= set(spx_candidates(FIG3_QUERY, fig3_lexicon))


def test_distance_filter(fig3_lexicon):
    got = suggest(FIG3_QUERY, fig3_lexicon, SuggestParams(max_distance=1, max_results=20))
    assert len(got) == 12
    assert all(s.distance == 1 for s in got)
    zero = suggest(FIG3_QUERY, fig3_lexicon, SuggestParams(max_distance=0, max_results=20))
    assert zero == []


def test_truncation_reassigns_ranks(fig3_lexicon):
    got = suggest(FIG3_QUERY, fig3_lexicon, SuggestParams(max_results=4))
    assert len(got) == 4
    assert [s.rank for s in got] == [1, 2, 3, 4]


def test_distance_nondecreasing_with_rank(fig3_lexicon):
    got = suggest(FIG3_QUERY, fig3_lexicon, SuggestParams(max_results=20))
    distances = [s.distance for s in got]
    assert distances == sorted(distances)


def test_every_suggestion_is_a_lexicon_word(fig3_lexicon):
    for s in suggest(FIG3_QUERY, fig3_lexicon, SuggestParams(max_results=50)):
        assert fig3_lexicon.contains(s.word)


def test_determinism(fig3_lexicon):
    a = suggest(FIG3_QUERY, fig3_lexicon)
    b = suggest(FIG3_QUERY, fig3_lexicon)
    assert a == b


def test_monotonic_in_max_distance(fig3_lexicon):
    seen = set()
    for d in range(0, 6):
        got = {s.word for s in suggest(FIG3_QUERY, fig3_lexicon, SuggestParams(max_distance=d, max_results=50))}
        assert got >= seen
        seen = got


def test_monotonic_in_max_results(fig3_lexicon):
    full = [s.word for s in suggest(FIG3_QUERY, fig3_lexicon, SuggestParams(max_results=50))]
    for n in range(1, len(full) + 1):
        head = [s.word for s in suggest(FIG3_QUERY, fig3_lexicon, SuggestParams(max_results=n))]
        assert head == full[:n]


def test_candidates_match_brute_force_over_lexicon(fig3_lexicon, sound, shape):
    # completeness: code-equal lexicon words, nothing more, nothing less
    q_sound = encode(FIG3_QUERY, sound)
    q_shape = encode(FIG3_QUERY, shape)
    expected_sox = [
        w for w in fig3_lexicon.words if encode(w, sound) == q_sound and w != FIG3_QUERY
    ]
    expected_spx = [
        w for w in fig3_lexicon.words if encode(w, shape) == q_shape and w != FIG3_QUERY
    ]
    assert sox_candidates(FIG3_QUERY, fig3_lexicon) == expected_sox
    assert spx_candidates(FIG3_QUERY, fig3_lexicon) == expected_spx


def test_candidate_lengths_equal_query_length(fig3_lexicon):
    for w in sox_candidates(FIG3_QUERY, fig3_lexicon):
        assert len(w) == len(FIG3_QUERY)
    for w in spx_candidates(FIG3_QUERY, fig3_lexicon):
        assert len(w) == len(FIG3_QUERY)


def test_suggested_distances_are_true_distances(fig3_lexicon):
    for s in suggest(FIG3_QUERY, fig3_lexicon, SuggestParams(max_results=50)):
        assert s.distance == edit_distance(FIG3_QUERY, s.word)


def test_empty_word_rejected(fig3_lexicon):
    with pytest.raises(EmptyWordError):
        suggest("", fig3_lexicon)


def test_randomized_ranking_invariants(sound, shape):
    rng = random.Random(11)
    letters = "اآءيئبسصثرڙڻو"
    words = sorted({"".join(rng.choice(letters) for _ in range(rng.randint(2, 5))) for _ in range(60)})
    lex = build(words, sound, shape)
    for _ in range(40):
        query = "".join(rng.choice(letters) for _ in range(rng.randint(2, 5)))
        got = suggest(query, lex, SuggestParams(max_distance=3, max_results=8))
        assert [s.rank for s in got] == list(range(1, len(got) + 1))
        assert all(got[i].distance <= got[i + 1].distance for i in range(len(got) - 1))
        assert all(lex.contains(s.word) and s.word != query for s in got)
