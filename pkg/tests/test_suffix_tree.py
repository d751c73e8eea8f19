import random

import pytest
from hypothesis import given, settings, strategies as st

from slidewin import BOTTOM, ROOT, ActivePoints, Locus, Occ, SlidingSuffixTree
from slidewin.oracle import brute_tree_nodes, occ_count

from conftest import all_strings


def build(s, capacity=None):
    t = SlidingSuffixTree(capacity or max(len(s), 1))
    for c in s:
        t.extend_right(c)
    return t


def slide_all(text, d):
    """Yield the tree after every append and delete of a width-d scan."""
    t = SlidingSuffixTree(d + 1)
    for c in text:
        t.extend_right(c)
        yield t
        if len(t) > d:
            t.delete_leftmost()
            yield t


def assert_matches(t):
    t.check()
    w = t.text.window_string()
    assert t.explicit_nodes() == brute_tree_nodes(w)
    lrs = max((k for k in range(len(w)) if occ_count(w, w[len(w) - k:]) >= 2), default=0)
    assert t.lrs_len == lrs
    assert t.string_at(t.primary_locus()) == w[len(w) - lrs:]


def test_banana_nodes():
    t = build(b"banana")
    assert t.explicit_nodes() == brute_tree_nodes(b"banana")
    assert t.string_at(t.primary_locus()) == b"ana"


def test_extend_from_empty():
    t = SlidingSuffixTree(3)
    loc = t.extend_right(ord("a"))
    assert loc == Locus(ROOT, 0)
    assert t.explicit_nodes() == {b"": "root", b"a": "leaf"}


def test_extend_aa_pp_on_leaf_edge():
    t = build(b"aa")
    loc = t.primary_locus()
    assert t.is_leaf(loc.node) and loc.h == 1
    assert t.string_at(loc) == b"a"


def test_overflow():
    t = build(b"ab", capacity=2)
    with pytest.raises(OverflowError):
        t.extend_right(ord("c"))


def test_delete_relabels_leaf():
    # "aba": pp = "a" lies on the leaf edge of the whole window; deleting
    # the leftmost 'a' leaves "ba" with lrs empty
    t = build(b"aba")
    t.delete_leftmost()
    assert t.text.window_string() == b"ba"
    assert t.lrs_len == 0
    assert_matches(t)


def test_delete_merges_parent():
    t = build(b"abab", capacity=5)
    t.delete_leftmost()
    assert t.text.window_string() == b"bab"
    assert_matches(t)
    assert t.live_nodes == len(t.explicit_nodes())


def test_delete_to_empty():
    t = build(b"ab")
    t.delete_leftmost()
    t.delete_leftmost()
    assert len(t) == 0 and t.live_nodes == 1
    t.extend_right(ord("c"))
    assert_matches(t)


def test_locate_and_walk():
    t = build(b"mississippi")
    loc = t.locate("issi")
    assert t.string_at(loc) == b"issi"
    assert t.locate("ssx") is None
    assert t.walk(Locus(BOTTOM), ord("z")) == Locus(ROOT, 0)


def test_suffix_jump_chain():
    t = build(b"mississippi")
    loc = t.locate("ssissi")
    seen = []
    while loc.node != BOTTOM:
        seen.append(t.string_at(loc))
        loc = t.suffix_jump(loc)
    assert seen == [b"ssissi", b"sissi", b"issi", b"ssi", b"si", b"i", b""]


def test_leaf_count_sibling():
    t = build(b"abcabd")
    ab = t.locate("ab")
    assert ab.h == 0
    assert t.leaf_count(ab.node) == 2 and t.has_two_leaves(ab.node)
    leaf = t.leaf_starting_at(1)
    assert t.start(t.sibling(leaf)) == 4
    assert t.leaf_count(ROOT) == 6
    with pytest.raises(ValueError):
        t.sibling(t.leaf_starting_at(3))  # parent is the root


def test_implicit_suffix_on_leaf_edge():
    t = build(b"abcab")
    leaf = t.leaf_starting_at(1)
    assert t.implicit_suffix_len_on_leaf_edge(leaf) == 2
    loc = t.lowest_implicit_suffix_on_leaf_edge(leaf)
    assert loc == Locus(leaf, 3) and t.string_at(loc) == b"ab"
    assert t.lowest_implicit_suffix_on_leaf_edge(t.leaf_starting_at(3)) is None


def test_to_dot():
    dot = build(b"abcabd").to_dot()
    assert dot.startswith("digraph") and "shape=box" in dot and "dashed" in dot


@pytest.mark.parametrize("alphabet,max_len", [(b"ab", 10), (b"abc", 6)])
def test_every_window_matches_brute_force(alphabet, max_len):
    for s in all_strings(alphabet, max_len):
        if len(s) != max_len:
            continue
        for d in range(1, max_len + 1):
            for t in slide_all(s, d):
                assert_matches(t)


@settings(max_examples=150, deadline=None)
@given(st.binary(min_size=1, max_size=60).map(lambda b: bytes(97 + x % 4 for x in b)),
       st.integers(1, 12))
def test_random_scans(text, d):
    for t in slide_all(text, d):
        assert_matches(t)


def test_node_bound_and_jump_counter():
    rng = random.Random(7)
    text = bytes(rng.choice(b"ab") for _ in range(3000))
    d = 40
    t = SlidingSuffixTree(d + 1)
    for c in text:
        t.extend_right(c)
        assert t.live_nodes <= 2 * (d + 1) + 2
        if len(t) > d:
            t.delete_leftmost()
    # amortised: the primary active point moves O(1) times per step
    assert t.n_jumps <= 4 * len(text)


def test_locus_at_leaf():
    t = build(b"abacada")
    leaf = t.leaf_starting_at(6)
    loc = Locus(leaf, 0)
    assert t.string_at(loc) == b"da"
    assert t.walk(loc, ord("a")) is None
    assert t.string_at(t.suffix_jump(loc)) == b"a"


def test_lrs_sequence_aab():
    t = SlidingSuffixTree(3)
    seq = []
    for c in b"aab":
        loc = t.extend_right(c)
        seq.append(t.locus_length(loc))
    assert seq == [0, 1, 0]


def test_hed_shared_with_longer_suffix():
    t = build(b"aabbabbab")
    ab, abbab = t.locate("ab"), t.locate("abbab")
    assert ab.node == abbab.node
    # three occurrences, two of them implicit suffixes on one leaf edge
    assert occ_count(t.text.window_string(), b"ab") == 3
    assert t.leaf_count(ab.node) == 1
    assert ActivePoints(t).occ_class(ab) == Occ.AT_LEAST3


def test_unary_string_single_leaf():
    t = build(b"aaaa")
    assert t.explicit_nodes() == {b"": "root", b"aaaa": "leaf"}
    leaf = t.leaf_starting_at(1)
    loc = t.lowest_implicit_suffix_on_leaf_edge(leaf)
    assert loc == Locus(leaf, 1) and t.string_at(loc) == b"aaa"
    for k in (1, 2, 3):
        assert t.locate(b"a" * k).node == leaf


def test_no_implicit_suffix_without_repeats():
    t = build(b"abc")
    for p in (1, 2, 3):
        assert t.lowest_implicit_suffix_on_leaf_edge(t.leaf_starting_at(p)) is None


def test_explicit_pp_gives_no_implicit_suffix():
    t = build(b"abcabd" + b"ab")  # lrs "ab" is the explicit node
    assert t.primary_locus().h == 0
    for p in range(1, 7):
        assert t.lowest_implicit_suffix_on_leaf_edge(t.leaf_starting_at(p)) is None


@pytest.mark.parametrize("before,after", [(b"aab", b"ab"), (b"aa", b"a")])
def test_delete_small(before, after):
    t = build(before)
    t.delete_leftmost()
    assert t.explicit_nodes() == build(after).explicit_nodes()


def test_walk_examples():
    t = build(b"abcab")
    a = t.walk(Locus(ROOT), ord("a"))
    assert t.string_at(a) == b"a"
    assert t.walk(Locus(ROOT), ord("z")) is None
    ab = t.walk(a, ord("b"))
    assert ab.node == t.leaf_starting_at(1) and ab.h == 3


def test_suffix_jump_examples():
    t = build(b"abcab")
    assert t.string_at(t.suffix_jump(t.locate("ab"))) == b"b"
    assert t.suffix_jump(t.locate("a")) == Locus(ROOT, 0)
    assert t.suffix_jump(Locus(ROOT)) == Locus(BOTTOM, 0)
    with pytest.raises(ValueError):
        t.suffix_jump(Locus(BOTTOM))


def test_leaf_count_examples():
    t = build(b"abacada")
    assert t.leaf_count(t.locate("a").node) == 3
    assert build(b"ab").leaf_count(ROOT) == 2
    t = build(b"aabab")
    assert t.sibling(t.leaf_starting_at(1)) == t.leaf_starting_at(2)
