import pytest
from hypothesis import given, strategies as st

from slidewin.window_text import RingText, WindowError


def make(s, capacity=8):
    r = RingText(capacity)
    for c in s:
        r.push(c)
    return r


def test_push_from_empty():
    r = RingText(4)
    assert r.push(ord("a")) == 1
    assert r.window_string() == b"a"


def test_push_grows_window():
    r = make(b"ab")
    assert r.push(ord("c")) == 3
    assert (r.left, r.right, r.window_string()) == (1, 3, b"abc")


def test_push_overflow():
    r = make(b"abc", capacity=3)
    with pytest.raises(WindowError):
        r.push(ord("d"))


def test_pop_front():
    r = make(b"abc")
    assert r.pop_front() == 2
    assert r.window_string() == b"bc"


def test_pop_last_leaves_empty_window():
    r = make(b"xxxxa")
    for _ in range(4):
        r.pop_front()
    assert (r.left, r.right) == (5, 5)
    r.pop_front()
    assert (r.left, r.right, len(r)) == (6, 5, 0)
    assert r.window_string() == b""


def test_pop_empty():
    with pytest.raises(WindowError):
        RingText(2).pop_front()


def test_char_at():
    r = make(b"abc")
    assert r.char_at(2) == ord("b")
    with pytest.raises(WindowError):
        r.char_at(4)
    r.pop_front()
    with pytest.raises(WindowError):
        r.char_at(1)


@given(st.lists(st.one_of(st.binary(min_size=1, max_size=1), st.none()), max_size=200),
       st.integers(1, 6))
def test_matches_reference_copy(ops, cap):
    r = RingText(cap)
    stream = bytearray()
    left = 0
    for op in ops:
        if op is None:
            if len(r):
                r.pop_front()
                left += 1
        elif len(r) < cap - 1:
            r.push(op[0])
            stream += op
        assert r.window_string() == bytes(stream[left:])
        for p in range(r.left, r.right + 1):
            assert r.char_at(p) == stream[p - 1]
