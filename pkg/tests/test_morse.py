import pytest

from biquasile import fixtures
from biquasile.diagram import VertexKind
from biquasile.errors import BiquasileError
from biquasile.morse import (diagram_from_word, format_word, parse_word, strand_circles,
                             surface_components)


def test_token_roundtrip():
    w = "cup0 cup2 m1 x1+ x0- m1* cap2 cap0"
    assert format_word(parse_word(w)) == w


@pytest.mark.parametrize("bad", ["cup", "x1", "x1*", "m1+", "cap0-", "y2"])
def test_bad_tokens(bad):
    with pytest.raises(BiquasileError):
        parse_word(bad)


def test_open_strands_rejected():
    with pytest.raises(BiquasileError):
        diagram_from_word("cup0")


def test_out_of_range_position():
    with pytest.raises(BiquasileError):
        diagram_from_word("cup0 x1+ cap0")


def test_parallel_marked_vertex_rejected():
    # after the crossing the cap would close two parallel strands
    with pytest.raises(BiquasileError, match="antiparallel"):
        diagram_from_word("cup0 cup2 m1 x1+ cap2 cap0")


def test_crossing_signs():
    d = diagram_from_word("cup0 cup1 x2+ x2+ cap1 cap0")
    assert [v.kind for v in d.vertices] == [VertexKind.POSITIVE] * 2
    d = diagram_from_word("cup0 cup1 x2- x2- cap1 cap0")
    assert [v.kind for v in d.vertices] == [VertexKind.NEGATIVE] * 2


def test_counts_of_circles_and_components():
    w = fixtures.WORDS["6_1-01"].word
    assert strand_circles(w) == 3
    assert surface_components(w) == 2
    assert diagram_from_word(w).components == 1
    assert diagram_from_word("cup0 cap0 cup0 cap0").components == 2


def test_split_circle_is_free():
    d = diagram_from_word(fixtures.WORDS["torus_sphere"].word)
    assert d.components == 2 and d.free_regions == 1 and d.region_count == 5


def test_reverse_checks_component_index():
    with pytest.raises(BiquasileError):
        diagram_from_word("cup0 cap0", reverse=(1,))


def test_marker_decides_resolution():
    # equal markers give a tube between two spheres, opposite markers a torus
    from biquasile.diagram import resolve
    sphere = diagram_from_word("cup0 cup2 m1 m1 cap2 cap0")
    torus = diagram_from_word("cup0 cup2 m1 m1* cap2 cap0")
    circles = lambda d: d.region_count - 1  # noqa: E731  crossing-free resolutions
    chi = lambda d: circles(resolve(d, "+")) + circles(resolve(d, "-")) - d.marked_count  # noqa: E731
    assert chi(sphere) == 2
    assert chi(torus) == 0
