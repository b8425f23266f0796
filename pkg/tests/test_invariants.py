from biquasile import fixtures
from biquasile.algebra import alexander_biquasile
from biquasile.boltzmann import BoltzmannWeight
from biquasile.invariants import (cobordism_inclusion_check, compare, counting_invariant,
                                  invariant_table)


def test_counting_invariant_examples(X1):
    assert counting_invariant(fixtures.diagram("2_1"), X1) == 9
    assert counting_invariant(fixtures.diagram("unknot"), X1) == 9


def test_single_cell_table_matches_counting_invariant(X2):
    d = fixtures.diagram("8_1")
    t = invariant_table([d], [X2])
    assert t.values == ((counting_invariant(d, X2),),)
    assert t.lines() == [f"8_1 X2 {counting_invariant(d, X2)}"]


def test_table_render_and_parallel_agree(X1, X2, X3):
    ds = fixtures.load_corpus()
    serial = invariant_table(ds, [X1, X2, X3])
    parallel = invariant_table(ds, [X1, X2, X3], jobs=2)
    assert serial == parallel
    lines = serial.render().splitlines()
    assert len(lines) == 4 and lines[1].split()[0] == "X1"
    assert serial.cell("X1", "8_1") == 27


def test_compare_reflexive_and_symmetric(X1, X2):
    d1, d2 = fixtures.diagram("8_1"), fixtures.diagram("10_1")
    assert not compare(d1, d1, [X1, X2]).distinguished
    v12, v21 = compare(d1, d2, [X1]), compare(d2, d1, [X1])
    assert v12.distinguished and v21.distinguished
    assert v12.witnesses() == ["X1: 27 vs 9"]
    assert v21.witnesses() == ["X1: 9 vs 27"]
    assert v12.report().endswith("distinguished\n")


def test_compare_with_weights():
    X = fixtures.algebra("order2_xor")
    w = fixtures.weight("phi", X)
    v = compare(fixtures.diagram("hopf"), fixtures.diagram("torus"), [], [w])
    assert v.distinguished
    assert v.enhancements[0][1:] == ("4u+4", "4")


def test_inclusion_examples(X1):
    X = fixtures.algebra("order2_xor")
    w = fixtures.weight("phi", X)
    assert cobordism_inclusion_check(fixtures.diagram("L"), X, w)
    assert cobordism_inclusion_check(fixtures.diagram("hopf"), X, w)
    assert cobordism_inclusion_check(fixtures.diagram("torus"), X1, BoltzmannWeight(X1, 3))


def test_alexander_rows_distinguish_knotted_spheres():
    Z5 = alexander_biquasile(5, 1, 2, 3)
    assert counting_invariant(fixtures.diagram("10_1"), Z5) == 125
    assert counting_invariant(fixtures.diagram("unknot"), Z5) == 25
