"""Brute-force reference implementations.

Everything here is deliberately naive (quadratic or cubic scans over plain
slices) and shares no code with the engines it is used to check.
Positions are 1-based and inclusive, matching the engines.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


def occ_positions(text, pattern) -> list[int]:
    """1-based start positions of (possibly overlapping) occurrences."""
    m = len(pattern)
    if m == 0:
        return list(range(1, len(text) + 2))
    return [x + 1 for x in range(len(text) - m + 1) if text[x:x + m] == pattern]


def occ_count(text, pattern) -> int:
    """Number of occurrences of ``pattern`` in ``text``; the empty word occurs |text|+1 times."""
    m = len(pattern)
    if m == 0:
        return len(text) + 1
    count = 0
    for x in range(len(text) - m + 1):
        if text[x:x + m] == pattern:
            count += 1
    return count


def _substring_counts(w) -> dict:
    counts: dict = {}
    for s in range(len(w)):
        for t in range(s + 1, len(w) + 1):
            u = w[s:t]
            counts[u] = counts.get(u, 0) + 1
    return counts


def brute_mus(w, offset: int = 1) -> set[tuple[int, int]]:
    """All intervals [s, t] of ``w`` that are minimal unique substrings.

    ``offset`` is the global position of ``w[0]``.
    """
    counts = _substring_counts(w)
    n = len(w)

    def occ(s, t):  # 0-based half-open slice
        if t <= s:
            return n + 1
        return counts.get(w[s:t], 0)

    out = set()
    for s in range(n):
        for t in range(s + 1, n + 1):
            if occ(s, t) == 1 and occ(s + 1, t) >= 2 and occ(s, t - 1) >= 2:
                out.add((s + offset, t - 1 + offset))
    return out


def brute_maw(w, alphabet) -> set:
    """Minimal absent words of ``w`` over ``alphabet`` by exhaustive candidate testing."""
    is_bytes = isinstance(w, (bytes, bytearray))
    if is_bytes:
        letters = [bytes([c]) if isinstance(c, int) else bytes(c) for c in alphabet]
    else:
        letters = list(alphabet)
    present = set(_substring_counts(w))
    present.add(w[:0])
    for ch in (w[k:k + 1] for k in range(len(w))):
        if ch not in letters:
            raise ValueError(f"alphabet is missing character {ch!r}")
    out = set()
    for a in letters:
        if a not in present:
            out.add(a)
    for u in present:
        for a in letters:
            if a + u not in present:
                continue
            for b in letters:
                cand = a + u + b
                if cand not in present and u + b in present:
                    out.add(cand)
    return out


def brute_lrs_sqs_sqp(w):
    """(longest repeating suffix, shortest quasi-unique suffix, shortest quasi-unique prefix)."""
    n = len(w)
    lrs = w[:0]
    for k in range(n, -1, -1):
        if occ_count(w, w[n - k:]) >= 2:
            lrs = w[n - k:]
            break
    sqs = sqp = None
    for k in range(1, n + 1):
        if occ_count(w, w[n - k:]) <= 2:
            sqs = w[n - k:]
            break
    for k in range(1, n + 1):
        if occ_count(w, w[:k]) <= 2:
            sqp = w[:k]
            break
    return lrs, sqs, sqp


def brute_t3_len(w) -> int:
    """Length of the longest suffix occurring at least three times (0 if only the empty word)."""
    n = len(w)
    for k in range(n, 0, -1):
        if occ_count(w, w[n - k:]) >= 3:
            return k
    return 0


def brute_tree_nodes(w) -> dict:
    """Explicit nodes of the terminator-free suffix tree of ``w``, keyed by path string.

    Values are ``"root"``, ``"internal"`` (right-branching substrings) or
    ``"leaf"`` (suffixes occurring once).
    """
    n = len(w)
    nodes = {w[:0]: "root"}
    follow: dict = {}
    for s in range(n):
        for t in range(s + 1, n):
            follow.setdefault(w[s:t], set()).add(w[t:t + 1])
    for u, nxt in follow.items():
        if len(nxt) >= 2:
            nodes[u] = "internal"
    for s in range(n):
        suf = w[s:]
        if occ_count(w, suf) == 1:
            nodes[suf] = "leaf"
    return nodes


@dataclass
class OracleReport:
    """Outcome of comparing one window against the reference definitions."""

    window: Any = None
    expected: dict = field(default_factory=dict)
    actual: dict = field(default_factory=dict)
    mismatch: str = ""

    @property
    def ok(self) -> bool:
        return not self.mismatch

    def __str__(self):
        if self.ok:
            return f"window {self.window!r}: ok"
        return (f"window {self.window!r}: {self.mismatch}\n"
                f"  expected {self.expected}\n  actual   {self.actual}")


class WindowOracle:
    """Vectorised reference answers for many windows of one text.

    Everything is derived from the all-pairs longest-common-extension
    matrix ``lce[x, y]`` (length of the longest common prefix of T[x..] and
    T[y..]) by counting occurrences, so it shares nothing with the tree
    based engines.  Windows are given as 1-based inclusive arrays ``a``,
    ``b``; results are arrays with one row (or entry) per window.
    """

    def __init__(self, text):
        import numpy as np

        self.np = np
        t = np.frombuffer(bytes(text), dtype=np.uint8) if not isinstance(text, str) \
            else np.array([ord(c) for c in text], dtype=np.int64)
        n = self.n = len(t)
        lce = np.zeros((n + 1, n + 1), dtype=np.int32)
        for x in range(n - 1, -1, -1):
            lce[x, :n] = np.where(t[x] == t, lce[x + 1, 1:] + 1, 0)
        self.lce = lce[:n, :n]
        idx = np.arange(n)
        self._idx = idx
        # left[s, a] = max lce(s, x) over a <= x < s
        m = np.where(idx[None, :] < idx[:, None], self.lce, 0)
        self.left = np.maximum.accumulate(m[:, ::-1], axis=1)[:, ::-1]
        # right[s, b] = max over s < x <= b of min(lce(s, x), b - x + 1)
        right = np.zeros((n, n), dtype=np.int32)
        span = idx[:, None] - idx[None, :] + 1  # [b, x] -> b - x + 1
        for s in range(n):
            v = np.minimum(self.lce[s][None, :], span)
            v[:, :s + 1] = 0
            right[s] = np.maximum(v, 0).max(axis=1)
        self.right = right

    def _rows(self, a, b):
        np = self.np
        a = np.asarray(a, dtype=np.int64) - 1
        b = np.asarray(b, dtype=np.int64) - 1
        return a[:, None], b[:, None]

    def mus_ends(self, a, b):
        """``ends[r, s-1]`` = end of the MUS starting at s in window r, else 0."""
        np = self.np
        n = self.n
        A, B = self._rows(a, b)
        S = self._idx[None, :]
        inside = (S >= A) & (S <= B)
        Ac = np.clip(A, 0, n - 1)
        Bc = np.clip(B, 0, n - 1)
        lmax = np.maximum(np.minimum(self.left[S, Ac], B - S + 1), self.right[S, Bc])
        t = S + lmax  # end (0-based) of the shortest unique substring starting at s
        ok = inside & (t <= B)
        t_next = np.concatenate([t[:, 1:], np.full((t.shape[0], 1), n + 1)], axis=1)
        mus = ok & ((S == B) | (t_next > t))
        return np.where(mus, t + 1, 0)

    def _suffix_table(self):
        # sc[b, a, y] = #{x in [a, y] : lce(x, y) >= b - y + 1}: occurrences of
        # T[y..b] inside T[a..b]
        if getattr(self, "_sc", None) is None:
            np, n, idx = self.np, self.n, self._idx
            sc = np.zeros((n, n, n), dtype=np.int16)
            below = idx[:, None] <= idx[None, :]  # [x, y]: x <= y
            for b in range(n):
                g = (self.lce >= (b - idx + 1)[None, :]) & below
                sc[b] = np.cumsum(g[::-1], axis=0, dtype=np.int16)[::-1]
            self._sc = sc
        return self._sc

    def _prefix_table(self):
        # pc[a, k, e] = #{x in [a, e] : lce(a, x) >= k}
        if getattr(self, "_pc", None) is None:
            np, n, idx = self.np, self.n, self._idx
            ks = np.arange(n + 1)[:, None]
            pc = np.zeros((n, n + 1, n), dtype=np.int16)
            for a in range(n):
                g = (self.lce[a][None, :] >= ks) & (idx >= a)[None, :]
                pc[a] = np.cumsum(g, axis=1, dtype=np.int16)
            self._pc = pc
        return self._pc

    def suffix_lengths(self, a, b):
        """(len_lrs, len_t3, len_sqs) per window, by counting suffix occurrences."""
        np = self.np
        n = self.n
        A, B = self._rows(a, b)
        S = self._idx[None, :]
        inside = (S >= A) & (S <= B)
        sc = self._suffix_table()
        occ = sc[np.clip(B, 0, n - 1), np.clip(A, 0, n - 1), S]
        k = np.where(inside, B - S + 1, 0)
        lrs = np.where(inside & (occ >= 2), k, 0).max(axis=1)
        t3 = np.where(inside & (occ >= 3), k, 0).max(axis=1)
        sqs = np.where(inside & (occ <= 2), k, n + 1).min(axis=1)
        sqs = np.where(B[:, 0] >= A[:, 0], sqs, 0)
        return np.stack([lrs, t3, sqs], axis=1)

    def sqp(self, a, b):
        """(length, occ, second start or 0) of the shortest quasi-unique prefix."""
        np = self.np
        n = self.n
        A, B = self._rows(a, b)
        R = A.shape[0]
        K = self._idx[None, :] + 1  # candidate lengths 1..n
        fits = K <= B - A + 1
        pc = self._prefix_table()
        Ac = np.clip(A, 0, n - 1)
        occ = np.where(fits, pc[Ac, K, np.clip(B - K + 1, 0, n - 1)], n + 1)
        first = np.argmax(occ <= 2, axis=1)
        rows = np.arange(R)
        k = first + 1
        o = occ[rows, first]
        X = self._idx[None, :]
        hit = (self.lce[Ac[:, 0]] >= k[:, None]) & (X > A) & (X <= B - k[:, None] + 1)
        second = np.where(o == 2, np.argmax(hit, axis=1) + 1, 0)
        empty = B[:, 0] < A[:, 0]
        return np.stack([np.where(empty, 0, k), np.where(empty, 0, o),
                         np.where(empty, 0, second)], axis=1)
