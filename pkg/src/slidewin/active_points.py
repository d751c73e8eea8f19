"""Primary, secondary and tertiary active points over a sliding suffix tree.

* pp - locus of the longest repeating suffix (lrs); owned by the tree.
* tp - locus of the longest suffix occurring at least three times.
* sp - locus of the shortest quasi-unique suffix (sqs), one character
  longer than the tp string.

All three strings are suffixes of the current window, so a locus is carried
as (deepest explicit node, length) and the characters are read from the end
of the window.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .suffix_tree import ROOT, Locus, SlidingSuffixTree


class Occ(enum.IntEnum):
    EXACTLY1 = 1
    EXACTLY2 = 2
    AT_LEAST3 = 3


@dataclass(frozen=True)
class SqpInfo:
    """Shortest quasi-unique prefix of a window."""

    start: int
    end: int
    occ: int
    second: int | None = None  # start of the other occurrence when occ == 2

    @property
    def length(self) -> int:
        return self.end - self.start + 1


class ActivePoints:
    def __init__(self, tree: SlidingSuffixTree):
        self.tree = tree
        self.tp_node = ROOT
        self.len_t3 = 0
        self._sp = None  # (node, length) of the last rejected tp candidate, if any
        self.sqp_case = None  # which case the last sqp computation took
        self.n_steps = 0

    # ---------------------------------------------------------------- lengths

    @property
    def len_lrs(self) -> int:
        return self.tree.lrs_len

    @property
    def len_sqs(self) -> int:
        if len(self.tree) == 0:
            return 0
        return self.len_t3 + 1

    @property
    def pp(self) -> Locus:
        return self.tree.primary_locus()

    @property
    def tp(self) -> Locus:
        t = self.tree
        return t.to_locus(self.tp_node, self.len_t3, t.right - self.len_t3 + 1)

    @property
    def sp(self) -> Locus:
        """Locus of sqs.  Uses the remembered candidate when the last update
        produced one, otherwise descends from the root."""
        t = self.tree
        L = self.len_sqs
        if L == 0:
            raise ValueError("empty window has no sqs")
        start = t.right - L + 1
        if self._sp is not None and self._sp[1] == L:
            s = self._sp[0]
        else:
            s = t._canon(ROOT, L, start)
        return t.to_locus(s, L, start)

    # ------------------------------------------------------- classification

    def _occ(self, s, L) -> int:
        """Occurrence class (1, 2 or 3 = at least three) of the window suffix
        of length L whose deepest explicit ancestor is s."""
        t = self.tree
        right = t.text.right
        if L == 0:
            return 3 if right - t.text.left >= 1 else 2
        u = t._hed(s, L, right - L + 1)
        if t._children[u] is not None:
            return 3
        if L == right - t._pos[u] + 1:
            return 1
        if t.implicit_suffix_len_on_leaf_edge(u) > L:
            return 3
        return 2

    def occ_class(self, loc: Locus) -> Occ:
        """Occurrence class of the window suffix at ``loc`` (which must be a suffix)."""
        t = self.tree
        s, L, _ = t._from_locus(loc)
        return Occ(self._occ(s, L))

    # ------------------------------------------------------------- updates

    def _descend_to_t3(self, s, L):
        t = self.tree
        link = t._link
        right = t.text.right
        occ = self._occ
        prev = None
        while L > 0 and occ(s, L) != 3:
            prev = (s, L)
            if s != ROOT:
                s = link[s]
            L -= 1
            s = t._canon(s, L, right - L + 1)
            self.n_steps += 1
        self.tp_node, self.len_t3 = s, L
        self._sp = prev

    def advance_on_append(self):
        """Call after the tree has absorbed a new right character."""
        t = self.tree
        if t.text.right <= t.text.left:
            self.tp_node, self.len_t3, self._sp = ROOT, 0, None
            return self
        L = self.len_t3 + 1
        s = t._canon(self.tp_node, L, t.text.right - L + 1)
        self._descend_to_t3(s, L)
        return self

    def advance_on_delete(self):
        """Call after the tree has dropped its leftmost character."""
        t = self.tree
        if t.text.right <= t.text.left:
            self.tp_node, self.len_t3, self._sp = ROOT, 0, None
            return self
        s = self.tp_node
        if t.merged is not None and s == t.merged[0]:
            s = t.merged[1]
        L = self.len_t3
        s = t._canon(s, L, t.text.right - L + 1)
        self._descend_to_t3(s, L)
        return self

    # ----------------------------------------------------------------- sqp

    def compute_sqp(self) -> SqpInfo:
        """Shortest quasi-unique prefix of the current window in O(1)."""
        return SqpInfo(*self._sqp())

    def _sqp(self):
        """(start, end, occ, second start or None) of the sqp."""
        t = self.tree
        n = t.text.right - t.text.left + 1
        if n == 0:
            raise ValueError("empty window has no sqp")
        i, j = t.left, t.right
        if n == 1:
            self.sqp_case = "trivial"
            return (i, i, 1, None)
        leaf = t.leaf_starting_at(i)
        p = t.parent(leaf)
        dp = t._depth[p]
        s, L = t.pp_node, t.lrs_len
        u = t._hed(s, L, j - L + 1)
        if u == leaf:
            # the lrs is also a prefix, so every short prefix occurs at i and j-L+1
            if 2 * L - n > dp:
                self.sqp_case = "A(c)"
                return (i, i + 2 * L - n, 2, j - L + 1)
            self.sqp_case = "A(b)"
            return (i, i + dp, 2, j - L + 1)
        if p == ROOT or not t.has_two_leaves(p):
            self.sqp_case = "B"
            return (i, i + dp, 1, None)
        self.sqp_case = "C"
        other = t.sibling(leaf)
        second = t.start(other)
        if t.implicit_suffix_len_on_leaf_edge(other):
            return (i, i + dp, 1, None)
        # longest window suffix that is a prefix of str(p) and lies on (q, p]
        q = t.parent(p)
        dq = t._depth[q]
        x = 0
        if u == p:
            x = L
        elif t.is_leaf(u) and L:
            back = second - t.start(u)
            if back >= 0 and dq < L - back <= dp:
                x = L - back
        if x == dp:
            return (i, i + dp, 1, None)
        if x:
            return (i, i + x, 2, second)
        return (i, i + dq, 2, second)
