import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from arcoxeter.chamber import chamber_weights
from arcoxeter.rootsys import build_root_system
from arcoxeter.weyl import longest_element, word_to_element
from arcoxeter.words import (
    CensusBudgetExceeded,
    CommClass,
    NotReducedError,
    ReducedWord,
    braid_neighbor_forms,
    braid_neighbors,
    census,
    class_members,
    class_size,
    is_convex,
    normal_form,
    normal_form_letters,
    parse_word,
    random_longest_word,
    reduced_words,
    root_order,
    two_move_closure,
)

A3 = build_root_system("A3")


def rw(t, letters):
    return ReducedWord(build_root_system(t), letters)


def test_root_order_examples():
    assert root_order(rw("A3", (2, 1, 3, 2, 3, 1))).roots == (
        (0, 1, 0), (1, 1, 0), (0, 1, 1), (1, 1, 1), (1, 0, 0), (0, 0, 1))
    assert root_order(rw("A3", (2, 1, 2, 3, 2, 1))).roots == (
        (0, 1, 0), (1, 1, 0), (1, 0, 0), (1, 1, 1), (0, 1, 1), (0, 0, 1))
    assert root_order(rw("A1", (1,))).roots == ((1,),)


def test_root_order_levels():
    order = root_order(rw("A3", (2, 1, 3, 2, 3, 1)))
    assert order.positions(2) == (1, 4)
    assert order.level(1) == ((1, 1, 0), (0, 0, 1))


def test_not_reduced_rejected():
    with pytest.raises(NotReducedError):
        rw("A3", (1, 2, 2))


def test_parse_word():
    assert parse_word("2,1,3") == (2, 1, 3)
    assert parse_word(" ") == ()
    with pytest.raises(ValueError):
        parse_word("2;1")


@pytest.mark.parametrize("t", ["A3", "A4", "D4"])
def test_every_reduced_word_enumerated(t):
    rs = build_root_system(t)
    assert sorted(reduced_words(rs)) == sorted(oracles.reduced_words_w0(t[0], int(t[1:])))


@pytest.mark.parametrize("t", ["A2", "A3", "A4", "D4", "E6"])
def test_random_orders_are_convex(t):
    rs = build_root_system(t)
    rng = np.random.default_rng(7)
    roots = set(rs.positive_roots)
    for _ in range(20):
        w = ReducedWord(rs, random_longest_word(rs, rng))
        order = root_order(w).roots
        assert sorted(order) == sorted(roots)
        assert is_convex(rs, order)
        assert oracles.convex(order, roots)


def test_convexity_examples():
    a2 = build_root_system("A2")
    assert not is_convex(a2, [(1, 0), (0, 1), (1, 1)])
    assert is_convex(a2, [(1, 0), (1, 1), (0, 1)])
    assert is_convex(build_root_system("A1"), [(1,)])


@settings(max_examples=200)
@given(st.sampled_from(["A3", "A4", "D4"]), st.data())
def test_convexity_matches_oracle_on_permuted_orders(t, data):
    rs = build_root_system(t)
    order = data.draw(st.permutations(list(rs.positive_roots)))
    assert is_convex(rs, order) == oracles.convex(order, set(rs.positive_roots))


def test_normal_form_examples():
    assert normal_form_letters(A3, (1, 3)) == normal_form_letters(A3, (3, 1))
    readings = [(2, 1, 3, 2, 1, 3), (2, 1, 3, 2, 3, 1), (2, 3, 1, 2, 1, 3), (2, 3, 1, 2, 3, 1)]
    assert len({normal_form(ReducedWord(A3, w)) for w in readings}) == 1
    assert normal_form(ReducedWord(A3, (2, 1, 3, 2, 3, 1))) == normal_form(ReducedWord(A3, (2, 3, 1, 2, 1, 3)))


def test_normal_form_is_layered_and_sorted():
    nf = normal_form(ReducedWord(A3, (2, 3, 1, 2, 3, 1))).normal_form
    assert nf == (2, 1, 3, 2, 1, 3)


@pytest.mark.parametrize("t", ["A3", "A4", "D4"])
def test_classes_partition_reduced_words(t):
    rs = build_root_system(t)
    words = oracles.reduced_words_w0(t[0], int(t[1:]))
    groups = oracles.commutation_classes(t[0], int(t[1:]), words)
    result = census(t)
    assert len(result) == len(groups)
    by_form = {}
    for g in groups:
        forms = {normal_form_letters(rs, w) for w in g}
        assert len(forms) == 1
        (f,) = forms
        by_form[f] = g
    assert set(by_form) == {c.normal_form for c in result.classes}
    for f, g in by_form.items():
        assert set(class_members(rs, f)) == g
        assert class_size(rs, f) == len(g)
        assert two_move_closure(rs, f) == g


@pytest.mark.parametrize("t", ["A3", "A4"])
def test_classes_give_distinct_convex_orders(t):
    rs = build_root_system(t)
    orders = set()
    for c in census(t).classes:
        # the partial order: pairs forced in every member's root order
        forced = None
        for w in class_members(rs, c):
            rk = {r: k for k, r in enumerate(root_order(ReducedWord(rs, w)).roots)}
            pairs = {(a, b) for a in rk for b in rk if rk[a] < rk[b]}
            forced = pairs if forced is None else forced & pairs
        orders.add(frozenset(forced))
    assert len(orders) == len(census(t))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(["A3", "A4", "A5", "D4", "D5", "E6"]), st.integers(0, 2**32 - 1), st.data())
def test_two_move_swaps_roots_and_weights(t, seed, data):
    rs = build_root_system(t)
    w = random_longest_word(rs, np.random.default_rng(seed))
    spots = [k for k in range(len(w) - 1) if w[k] != w[k + 1] and not rs.linked(w[k], w[k + 1])]
    if not spots:
        return
    k = data.draw(st.sampled_from(spots))
    v = w[:k] + (w[k + 1], w[k]) + w[k + 2:]
    a, b = ReducedWord(rs, w), ReducedWord(rs, v)
    ra, rb = root_order(a).roots, root_order(b).roots
    ma, mb = chamber_weights(a).weights, chamber_weights(b).weights
    swap = list(range(len(w)))
    swap[k], swap[k + 1] = k + 1, k
    assert rb == tuple(ra[j] for j in swap)
    assert mb == tuple(ma[j] for j in swap)
    assert normal_form(a) == normal_form(b)


def brute_braid_neighbors(rs, nf):
    """Apply 3-moves literally to every member word of the class."""
    out = set()
    for w in class_members(rs, nf):
        for k in range(len(w) - 2):
            a, b, c = w[k:k + 3]
            if a == c and a != b and rs.linked(a, b):
                out.add(normal_form_letters(rs, w[:k] + (b, a, b) + w[k + 3:]))
    return out


@pytest.mark.parametrize("t", ["A2", "A3", "A4", "D4"])
def test_braid_neighbors_match_word_level_brute_force(t):
    rs = build_root_system(t)
    for c in census(t).classes:
        assert braid_neighbor_forms(rs, c.normal_form) == brute_braid_neighbors(rs, c.normal_form)


def test_braid_neighbor_examples():
    a2 = build_root_system("A2")
    c = CommClass(normal_form_letters(a2, (1, 2, 1)))
    assert braid_neighbors(a2, c) == {CommClass((2, 1, 2))}
    a1 = build_root_system("A1")
    assert braid_neighbors(a1, CommClass((1,))) == set()
    nf = normal_form_letters(A3, (2, 1, 3, 2, 3, 1))
    assert len(braid_neighbor_forms(A3, nf)) == len(brute_braid_neighbors(A3, nf))


@pytest.mark.parametrize("t,expected", [("A1", 1), ("A2", 2), ("A3", 8), ("A4", 62), ("D4", 182)])
def test_census_counts(t, expected):
    assert len(census(t)) == expected


def test_census_classes_are_reduced_w0_words():
    rs = build_root_system("A4")
    w0 = longest_element(rs)
    for c in census("A4").classes:
        assert word_to_element(rs, c.normal_form) == w0
        assert normal_form_letters(rs, c.normal_form) == c.normal_form


def test_census_budget_raises_with_progress():
    with pytest.raises(CensusBudgetExceeded) as info:
        census("A5", max_classes=50)
    assert len(info.value.classes) == 51
    assert info.value.frontier > 0


def test_census_default_budget_blocks_a6():
    with pytest.raises(CensusBudgetExceeded):
        census("A6")


def test_census_timeout():
    with pytest.raises(CensusBudgetExceeded, match="exceeded"):
        census("D5", extended=True, timeout=0.0)


@pytest.mark.parametrize("t", ["A5", "A6", "D5"])
def test_extended_census_matches_normal_form_counter(t):
    # independent count of Cartier-Foata normal forms; for A6 this gives
    # 24698, the count of commutation classes of the longest element of S_7
    assert len(census(t, extended=True)) == oracles.count_classes(t[0], int(t[1:]))
