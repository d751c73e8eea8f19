"""The reference definitions themselves, and the combinatorial facts the
engines rely on, checked by brute force."""
import itertools

import numpy as np
import pytest

from slidewin.oracle import (OracleReport, WindowOracle, brute_lrs_sqs_sqp, brute_maw,
                             brute_mus, brute_t3_len, brute_tree_nodes, occ_count,
                             occ_positions)

from conftest import all_strings


def test_occ_basics():
    assert occ_positions(b"aaaa", b"aa") == [1, 2, 3]
    assert occ_count(b"abc", b"") == 4
    assert occ_count(b"abc", b"abcd") == 0


@pytest.mark.parametrize("w,expected", [
    (b"abaab", {(2, 3), (3, 4)}),
    (b"aaaa", {(1, 4)}),
    (b"a", {(1, 1)}),
    (b"", set()),
])
def test_brute_mus_small(w, expected):
    assert brute_mus(w) == expected


def test_brute_mus_offset():
    assert brute_mus(b"ab", offset=5) == {(5, 5), (6, 6)}


def test_brute_maw_unary():
    assert brute_maw(b"aaa", b"a") == {b"aaaa"}
    assert brute_maw(b"aaa", b"ab") == {b"aaaa", b"b"}


def test_brute_lrs_sqs_sqp():
    assert brute_lrs_sqs_sqp(b"abcab") == (b"ab", b"b", b"a")
    assert brute_t3_len(b"aaaa") == 2
    assert brute_t3_len(b"ab") == 0


def test_brute_tree_nodes():
    assert brute_tree_nodes(b"abab") == {b"": "root", b"abab": "leaf", b"bab": "leaf"}


def test_report_str():
    r = OracleReport(window=b"ab", expected={"x": 1}, actual={"x": 2}, mismatch="x differs")
    assert not r.ok and "x differs" in str(r)
    assert OracleReport(window=b"ab").ok


def windows(n):
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a - 1, n + 1)]
    a, b = map(np.array, zip(*pairs))
    return pairs, a, b


@pytest.mark.parametrize("text", [b"abaababaab", b"aaaaaaa", b"abcacbacab", b"x",
                                  b"bbabbbabba"])
def test_window_oracle_matches_definitions(text):
    o = WindowOracle(text)
    pairs, a, b = windows(len(text))
    ends = o.mus_ends(a, b)
    lens = o.suffix_lengths(a, b)
    sqp = o.sqp(a, b)
    for r, (i, j) in enumerate(pairs):
        w = text[i - 1:j]
        got = {(s + 1, int(e)) for s, e in enumerate(ends[r]) if e}
        assert got == brute_mus(w, offset=i), (w, i)
        if not w:
            continue
        lrs, sqs, p = brute_lrs_sqs_sqp(w)
        assert tuple(lens[r]) == (len(lrs), brute_t3_len(w), len(sqs))
        occ = occ_positions(w, p)
        second = i + occ[1] - 1 if len(occ) == 2 else 0
        assert tuple(sqp[r]) == (len(p), len(occ), second)


# ---------------------------------------------------------------------------
# combinatorial facts, exhaustively over short binary and ternary strings

CORPUS = [w for w in itertools.chain(all_strings(b"ab", 9), all_strings(b"abc", 6)) if w]


def test_lrs_vs_sqs_equivalence():
    # a single letter is degenerate: the empty lrs occurs exactly twice
    for w in CORPUS:
        if len(w) < 2:
            continue
        lrs, sqs, _ = brute_lrs_sqs_sqp(w)
        a = len(lrs) >= len(sqs)
        b = occ_count(w, lrs) == 2
        c = occ_count(w, sqs) == 2
        assert a == b == c, w


def test_lrs_grows_by_at_most_one():
    for w in CORPUS:
        for c in b"ab":
            assert len(brute_lrs_sqs_sqp(w + bytes([c]))[0]) <= len(brute_lrs_sqs_sqp(w)[0]) + 1


def test_occurrences_grow_only_for_suffixes():
    for w in CORPUS[:400]:
        wc = w + b"a"
        for s in range(len(w)):
            for t in range(s + 1, len(w) + 1):
                x = w[s:t]
                diff = occ_count(wc, x) - occ_count(w, x)
                assert diff in (0, 1)
                assert (diff == 1) == wc.endswith(x)


def test_suffix_mus_is_one_longer_than_lrs():
    for w in CORPUS:
        lrs = brute_lrs_sqs_sqp(w)[0]
        for s, t in brute_mus(w):
            if t == len(w):
                assert s == len(w) - len(lrs)


def test_new_suffix_mus_rule():
    for w in CORPUS:
        for c in b"ab":
            wc = w + bytes([c])
            k = len(brute_lrs_sqs_sqp(wc)[0])
            is_mus = (len(wc) - k, len(wc)) in brute_mus(wc)
            run = wc[len(wc) - k - 1:] == bytes([c]) * (k + 1)
            assert is_mus == (run or k <= len(brute_lrs_sqs_sqp(w)[0])), wc


def test_removed_mus_is_sqs_occurring_twice():
    for w in CORPUS:
        for c in b"ab":
            wc = w + bytes([c])
            _, sqs, _ = brute_lrs_sqs_sqp(wc)
            gone = {(s, t) for s, t in brute_mus(w) - brute_mus(wc) if s < t}
            if gone:
                ((s, t),) = gone
                assert w[s - 1:t] == sqs and occ_count(wc, sqs) == 2


def test_spec_style_examples():
    assert occ_count(b"aaaa", b"aa") == 3 and occ_count(b"abcab", b"ab") == 2
    assert brute_mus(b"aaabcc") == {(1, 3), (4, 4), (5, 6)}
    assert brute_mus(b"abcaca") == {(2, 2), (4, 5)}
    assert brute_maw(b"abb", b"abc") == {b"c", b"aa", b"ba", b"bbb"}
    assert brute_maw(b"ab", b"ab") == {b"aa", b"bb", b"ba"}
    assert brute_maw(b"a", b"ab") == {b"b", b"aa"}
    assert brute_lrs_sqs_sqp(b"aaaa") == (b"aaa", b"aaa", b"aaa")
    assert brute_lrs_sqs_sqp(b"abc") == (b"", b"c", b"a")
