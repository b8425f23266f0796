import pytest

from biquasile import fixtures
from biquasile.diagram import serialize_diagram
from biquasile.errors import ParseError
from biquasile.morse import euler_characteristics, surface_components


@pytest.mark.parametrize("name", fixtures.diagram_names())
def test_stored_file_matches_word(name):
    assert fixtures.diagram(name) == fixtures.build(name)


def test_corpus_regeneration_is_byte_identical(tmp_path):
    fixtures.write_corpus(tmp_path)
    bundled = fixtures.load_corpus()
    assert [d.name for d in bundled] == list(fixtures.TABLE_CORPUS)
    for name in fixtures.diagram_names():
        stored = (fixtures._DATA / "diagrams" / f"{name}.mgd").read_text()
        assert (tmp_path / f"{name}.mgd").read_text() == stored
    assert fixtures.load_corpus(tmp_path) == bundled


# number of surface components named by each table entry (one superscript per component)
COMPONENTS = {"2_1": 1, "6_1-01": 2, "8_1": 1, "8_1-11": 2, "9_1": 1, "9_1-01": 2, "10_1": 1,
              "10_2": 1, "10_3": 1, "10_1-1": 1, "10_1-01": 2, "10_2-01": 2, "10_1-11": 2,
              "10_1-001": 3}


@pytest.mark.parametrize("name", fixtures.TABLE_CORPUS)
def test_component_count(name):
    assert surface_components(fixtures.WORDS[name].word) == COMPONENTS[name]


def test_unknown_names():
    with pytest.raises(ParseError):
        fixtures.diagram("nope")
    with pytest.raises(ParseError):
        fixtures.algebra("nope")


def test_serialized_fixture_has_word_comment():
    text = serialize_diagram(fixtures.build("8_1"), ["w"])
    assert text.startswith("# w\nregions 12\n")


# Euler characteristic per surface component: a superscript g means genus g
GENERA = {"2_1": [1], "6_1-01": [0, 1], "8_1": [0], "8_1-11": [1, 1], "9_1": [0],
          "9_1-01": [0, 1], "10_1": [0], "10_2": [0], "10_3": [0], "10_1-1": [1],
          "10_1-01": [0, 1], "10_2-01": [0, 1], "10_1-11": [1, 1], "10_1-001": [0, 0, 1]}


@pytest.mark.parametrize("name", fixtures.TABLE_CORPUS)
def test_genera(name):
    chi = euler_characteristics(fixtures.WORDS[name].word)
    assert sorted((2 - c) // 2 for c in chi) == GENERA[name]


def test_stabilized_pairs_differ_in_genus_only():
    for a, b in fixtures.STABILIZED_PAIRS:
        ca = euler_characteristics(fixtures.WORDS[a].word)
        cb = euler_characteristics(fixtures.WORDS[b].word)
        assert len(ca) == len(cb) and sum(ca) - sum(cb) == 2
