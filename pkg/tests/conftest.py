import pytest

from sindhispell import build, shape_table, sound_table

# Fixture reconstruction of the paper-style scenario: fifteen lexicon
# words sharing one sound code (x060DL), all within edit distance 2 of
# the query, which shares the code but is absent from the lexicon.
FIG3_QUERY = "يثيڙو"
FIG3_WORDS = [
    "اثيڙو", "آثيڙو", "ءثيڙو", "ئثيڙو",   # first letter varied
    "يسيڙو", "يصيڙو",                      # second letter varied
    "يثاڙو", "يثآڙو", "يثءڙو", "يثئڙو",   # third letter varied
    "يثيرو", "يثيڻو",                      # fourth letter varied
    "اسيڙو", "آصيڙو", "ءثاڙو",            # two letters varied
]
FIG3_DECOYS = ["گل", "سج"]


@pytest.fixture(scope="session")
def sound():
    return sound_table()


@pytest.fixture(scope="session")
def shape():
    return shape_table()


@pytest.fixture(scope="session")
def fig3_lexicon(sound, shape):
    return build([*FIG3_WORDS, *FIG3_DECOYS], sound, shape, source="fig3-fixture")


@pytest.fixture(scope="session")
def one_word_lexicon(sound, shape):
    # the "only one similar word" scenario: query اثير shares x060D
    return build(["اسير"], sound, shape, source="one-word-fixture")
