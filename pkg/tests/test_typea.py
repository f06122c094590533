import itertools
import xml.etree.ElementTree as ET

import pytest

import oracles
from arcoxeter.arq import arq_from_cosets
from arcoxeter.chamber import chamber_weights
from arcoxeter.quiverform import Orientation, adapted_word, all_orientations, level_size, linear_orientation
from arcoxeter.rootsys import build_root_system
from arcoxeter.typea import (
    NotTypeAError,
    apply_perm_word,
    column_adjacent,
    column_to_weight,
    cycle_writing,
    dotted,
    level_columns,
    perm_of_word,
    render_wiring,
    weight_to_column,
    wiring_diagram,
    word_of_column,
)
from arcoxeter.weyl import coset_adjacent, word_to_element
from arcoxeter.words import ReducedWord, census

A3 = build_root_system("A3")
ADAPTED = (2, 1, 3, 2, 3, 1)


def test_column_weights():
    assert column_to_weight(A3, (3,)) == (0, -1, 1) == chamber_weights(ReducedWord(A3, ADAPTED)).weights[1]
    assert column_to_weight(A3, (1, 3)) == (1, -1, 1) == chamber_weights(ReducedWord(A3, ADAPTED)).weights[0]
    for i in A3.vertices:
        assert column_to_weight(A3, range(1, i + 1)) == A3.fundamental_weight(i)
    with pytest.raises(ValueError):
        column_to_weight(A3, (5,))


@pytest.mark.parametrize("n", range(1, 6))
def test_column_weight_round_trip(n):
    rs = build_root_system(f"A{n}")
    for i in rs.vertices:
        for col in itertools.combinations(range(1, n + 2), i):
            wt = column_to_weight(rs, col)
            assert wt == oracles.box_weight_column(col, n)
            assert weight_to_column(rs, wt, i) == col


def test_weight_to_column_rejects_foreign_weights():
    with pytest.raises(ValueError):
        weight_to_column(A3, (2, 0, 0), 1)


def test_column_adjacent_examples():
    assert column_adjacent((1, 2), (1, 2, 3))
    assert column_adjacent((3,), (1, 3))
    assert not column_adjacent((4,), (1, 3))
    with pytest.raises(ValueError):
        column_adjacent((1,), (1, 2, 3))


@pytest.mark.parametrize("n", [2, 3])
def test_column_inclusion_is_coset_adjacency(n):
    rs = build_root_system(f"A{n}")
    perms = list(itertools.permutations(range(1, n + 2)))
    elems = {p: word_to_element(rs, oracles.word_of_perm(p)) for p in perms}
    for p, q in itertools.product(perms, repeat=2):
        for i in range(1, n):
            col = tuple(sorted(p[:i]))
            col2 = tuple(sorted(q[:i + 1]))
            assert column_adjacent(col, col2) == coset_adjacent(elems[p], i, elems[q], i + 1)


def test_perm_helpers():
    assert perm_of_word((1,), 2) == (2, 1, 3)
    assert apply_perm_word((2, 1), (1,)) == (3,)
    for col in itertools.combinations(range(1, 5), 2):
        assert apply_perm_word(word_of_column(col, 3), (1, 2)) == col
        assert perm_of_word(word_of_column(col, 3), 3) == oracles.perm_of_word(word_of_column(col, 3), 4)


def test_cycle_example():
    q = Orientation.parse(A3, "1>2,3>2")
    cyc = cycle_writing(q)
    assert cyc.cycle == (2, 1, 3, 4)
    assert str(cyc) == "(2134)"
    assert cyc.offsets == {1: 4, 2: 3, 3: 3}
    assert [cyc.segment(cyc.offsets[i], i) for i in (1, 2, 3)] == [(4,), (3, 4), (2, 3, 4)]


@pytest.mark.parametrize("n", range(1, 7))
def test_linear_cycle(n):
    rs = build_root_system(f"A{n}")
    cyc = cycle_writing(linear_orientation(rs))
    # c^{-1} = s_n ... s_1 sends m to m - 1 and 1 to n + 1
    assert cyc.cycle == tuple(range(n, 0, -1)) + (n + 1,)


def test_level_columns_example():
    q = Orientation.parse(A3, "1>2,3>2")
    assert level_columns(q) == {1: [(3,), (4,)], 2: [(1, 3), (3, 4)], 3: [(1, 3, 4), (2, 3, 4)]}
    assert [dotted(c, 4) for c in level_columns(q)[1]] == ["(..3.)", "(...4)"]
    assert [dotted(c, 4) for c in level_columns(q)[3]] == ["(1.34)", "(.234)"]


@pytest.mark.parametrize("n", range(1, 7))
def test_level_columns_match_chamber_weights(n):
    rs = build_root_system(f"A{n}")
    for q in all_orientations(rs):
        cols = level_columns(q)
        seq = chamber_weights(ReducedWord(rs, adapted_word(q)))
        for i in rs.vertices:
            assert len(cols[i]) == level_size(q, i)
            assert [weight_to_column(rs, mu, i) for mu in seq.level(i)] == cols[i]
            assert cols[i][-1] == tuple(range(rs.star[i - 1] + 1, n + 2))


def test_type_a_only():
    d4 = build_root_system("D4")
    with pytest.raises(NotTypeAError):
        cycle_writing(next(all_orientations(d4)))
    with pytest.raises(NotTypeAError):
        wiring_diagram(ReducedWord(d4, (1,)))


def test_wiring_labels_example():
    wd = wiring_diagram(ReducedWord(A3, ADAPTED))
    assert wd.labels() == [(1, 3), (3,), (1, 3, 4), (3, 4), (2, 3, 4), (4,)]
    q = Orientation.parse(A3, "1>2,3>2")
    assert sorted(wd.labels()) == sorted(c for lv in level_columns(q).values() for c in lv)
    assert [z.level for z in wd.zones] == list(ADAPTED)


def test_wiring_small_cases():
    a1 = build_root_system("A1")
    wd = wiring_diagram(ReducedWord(a1, (1,)))
    assert wd.labels() == [(2,)]
    a2 = build_root_system("A2")
    wd = wiring_diagram(ReducedWord(a2, (1, 2, 1)))
    assert len(wd.crossings) == 3
    assert [c[0] for c in wd.crossings] == [1, 2, 1]
    assert wd.bands[0] == (1, 2, 3)
    assert wd.bands[-1] == (3, 2, 1)


@pytest.mark.parametrize("t", ["A3", "A4"])
def test_zone_labels_are_chamber_columns_for_every_class(t):
    rs = build_root_system(t)
    n = rs.rank
    for c in census(t).classes:
        word = ReducedWord(rs, c.normal_form)
        wd = wiring_diagram(word)
        mus = chamber_weights(word).weights
        labels = wd.labels()
        assert len(set(labels)) == len(labels)
        for k, (lab, mu) in enumerate(zip(labels, mus), start=1):
            assert oracles.box_weight_column(lab, n) == mu
            # band invariant: J_k lists w_k(1), ..., w_k(n+1)
            assert wd.bands[k] == oracles.perm_of_word(word.letters[:k], n + 1)
        assert wd.zone_arrows() == arq_from_cosets(word).arrows


def test_trivial_zones():
    wd = wiring_diagram(ReducedWord(A3, ADAPTED))
    assert [tuple(sorted(z.label)) for z in wd.trivial_zones] == [(), (1,), (1, 2), (1, 2, 3), (1, 2, 3, 4)]


def test_text_rendering_is_deterministic():
    wd = wiring_diagram(ReducedWord(A3, ADAPTED))
    text = render_wiring(wd, "text")
    assert text == render_wiring(wiring_diagram(ReducedWord(A3, ADAPTED)), "text")
    rows = text.splitlines()
    assert len(rows) == 7
    assert rows[0].startswith("1 ") and rows[0].endswith(" 4")
    assert rows[6].startswith("4 ") and rows[6].endswith(" 1")
    assert text.count(" X ") == 6
    for lab in ("13", "134", "234"):
        assert lab in text


def test_svg_rendering():
    wd = wiring_diagram(ReducedWord(A3, ADAPTED))
    svg = render_wiring(wd, "svg")
    assert svg == render_wiring(wd, "svg")
    root = ET.fromstring(svg)
    assert root.get("version") == "1.1"
    ns = {"s": "http://www.w3.org/2000/svg"}
    lines = root.findall(".//s:polyline", ns)
    assert len(lines) == 4
    for pl in lines:
        for pt in pl.get("points").split():
            x, y = pt.split(",")
            int(x), int(y)
    with pytest.raises(ValueError):
        render_wiring(wd, "png")
