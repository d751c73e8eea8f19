"""Ukkonen suffix tree over a sliding window.

The tree holds every suffix of the window T[left..right] with no end
marker, so repeating suffixes may end in the middle of an edge.  Leaves are
open: their string always runs to the current right end.  Deleting the
leftmost character removes (or shortens) the leaf of the whole window.

Nodes are integer ids into parallel lists.  Node 0 is the auxiliary
bottom node, node 1 the root.  Every non-bottom node stores ``pos``: for a
leaf, the start of its suffix; for an internal node, the start of *some*
in-window occurrence of its path string.  The label of the edge into ``v``
is then ``T[pos(v) + depth(parent(v)) .. pos(v) + depth(v) - 1]``.  Internal
positions are kept fresh with a credit scheme: a node forwards the newest
position it has seen to its parent on every second update.

Inside the module a locus is carried as a pair ``(s, L)``: ``L`` is the
string length and ``s`` the deepest explicit node of depth <= L on its path.
The public :class:`Locus` uses the highest-explicit-descendant form
``(node, h)`` instead.
"""
from __future__ import annotations

from dataclasses import dataclass

from .window_text import RingText

BOTTOM = 0
ROOT = 1


@dataclass(frozen=True)
class Locus:
    """Position in the tree: ``node`` is the highest explicit descendant and
    ``h`` the number of characters between the position and ``node``.

    ``h == 0`` means the position is the explicit node itself.  Loci taken
    from a tree are invalidated by the next append or delete.
    """

    node: int
    h: int = 0

    @property
    def explicit(self) -> bool:
        return self.h == 0


class SlidingSuffixTree:
    """Suffix tree of T[left..right] with right-extension and left-deletion.

    ``capacity`` is the largest window length the tree will ever hold.
    """

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError("capacity must be positive")
        self.capacity = capacity
        self.text = RingText(capacity + 1)
        self._parent = [BOTTOM, BOTTOM]
        self._children: list = [None, {}]
        self._pos = [0, 0]
        self._depth = [-1, 0]
        self._link = [BOTTOM, BOTTOM]
        self._cred = [False, False]
        self._free: list[int] = []
        self._buf, self._cap = self.text.buf, self.text.capacity
        self._leaf_at = [0] * self._cap
        self.live_nodes = 1
        # primary active point: locus of the longest repeating suffix
        self.pp_node = ROOT
        self.lrs_len = 0
        # node removed by the last delete (merged into its parent), for callers
        # holding loci of their own
        self.merged = None
        # instrumentation
        self.n_jumps = 0
        self.n_edits = 0
        self.n_canon = 0
        self.n_credit = 0

    # ------------------------------------------------------------------ basics

    @property
    def left(self) -> int:
        return self.text.left

    @property
    def right(self) -> int:
        return self.text.right

    def __len__(self):
        return len(self.text)

    def is_leaf(self, v: int) -> bool:
        return self._children[v] is None

    def parent(self, v: int) -> int:
        return self._parent[v]

    def depth(self, v: int) -> int:
        if self._children[v] is None:
            return self.text.right - self._pos[v] + 1
        return self._depth[v]

    def start(self, leaf: int) -> int:
        """Start position of a leaf's suffix (any node: start of a live occurrence)."""
        return self._pos[leaf]

    def suffix_link(self, v: int) -> int:
        return self._link[v]

    def children(self, v: int) -> dict:
        return dict(self._children[v] or {})

    def leaf_starting_at(self, p: int) -> int:
        leaf = self._leaf_at[p % len(self._leaf_at)]
        if self._children[leaf] is not None or self._pos[leaf] != p:
            raise KeyError(p)
        return leaf

    def string_of(self, v: int) -> bytes:
        if v == ROOT:
            return b""
        return self.text.slice(self._pos[v], self._pos[v] + self.depth(v) - 1)

    def edge_label(self, v: int) -> bytes:
        u = self._parent[v]
        return self.text.slice(self._pos[v] + self._depth[u], self._pos[v] + self.depth(v) - 1)

    # ----------------------------------------------------------- node storage

    def _new_node(self, parent, pos, depth, leaf):
        if self._free:
            v = self._free.pop()
            self._parent[v] = parent
            self._children[v] = None if leaf else {}
            self._pos[v] = pos
            self._depth[v] = depth
            self._link[v] = BOTTOM
            self._cred[v] = False
        else:
            v = len(self._parent)
            self._parent.append(parent)
            self._children.append(None if leaf else {})
            self._pos.append(pos)
            self._depth.append(depth)
            self._link.append(BOTTOM)
            self._cred.append(False)
        self.live_nodes += 1
        return v

    def _release(self, v):
        self._children[v] = None
        self._parent[v] = -1
        self._free.append(v)
        self.live_nodes -= 1

    def _credit(self, v, s):
        parent, pos, cred = self._parent, self._pos, self._cred
        while v != ROOT:
            self.n_credit += 1
            if s > pos[v]:
                pos[v] = s
            if not cred[v]:
                cred[v] = True
                return
            cred[v] = False
            s = pos[v]
            v = parent[v]

    def _add_leaf(self, v, start, c):
        leaf = self._new_node(v, start, 0, True)
        self._children[v][c] = leaf
        self._leaf_at[start % self._cap] = leaf
        self.n_edits += 1
        if v != ROOT:
            self._credit(v, start)
        return leaf

    def _split(self, s, child, length):
        """Insert an internal node of string depth ``length`` on the edge s -> child."""
        buf, cap = self._buf, self._cap
        p = self._pos[child]
        w = self._new_node(s, p, length, False)
        self._children[s][buf[(p + self._depth[s]) % cap]] = w
        self._children[w][buf[(p + length) % cap]] = child
        self._parent[child] = w
        self.n_edits += 1
        return w

    def _canon(self, s, length, start):
        """Deepest explicit node of depth <= length on the path of T[start..start+length-1]."""
        depth, children = self._depth, self._children
        buf, cap = self._buf, self._cap
        while length > depth[s]:
            child = children[s][buf[(start + depth[s]) % cap]]
            if children[child] is None or depth[child] > length:
                break
            s = child
            self.n_canon += 1
        return s

    def _hed(self, s, length, start):
        if length == self._depth[s]:
            return s
        return self._children[s][self._buf[(start + self._depth[s]) % self._cap]]

    # ------------------------------------------------------------- mutation

    def extend_right(self, c: int) -> Locus:
        """Append byte ``c``; returns the locus of the new longest repeating suffix."""
        self._extend(c)
        return self.primary_locus()

    def delete_leftmost(self) -> Locus:
        """Drop T[left]; returns the locus of the (possibly shorter) longest repeating suffix."""
        self._delete()
        return self.primary_locus()

    def _extend(self, c):
        T = self.text
        if T.right - T.left + 1 >= self.capacity:
            raise OverflowError(f"window already holds {self.capacity} characters")
        p = T.push(c)
        buf, cap = self._buf, self._cap
        children, depth, link, pos = self._children, self._depth, self._link, self._pos
        canon = self._canon
        s, L = self.pp_node, self.lrs_len
        need = 0
        while True:
            ds = depth[s]
            if L == ds:
                if c in children[s]:
                    if need:
                        link[need] = s
                    L += 1
                    s = canon(s, L, p - L + 1)
                    break
                self._add_leaf(s, p - L, c)
                if need:
                    link[need] = s
                    need = 0
                if s == ROOT:
                    break
                s = link[s]
                L -= 1
                self.n_jumps += 1
                s = canon(s, L, p - L)
            else:
                child = children[s][buf[(p - L + ds) % cap]]
                if buf[(pos[child] + L) % cap] == c:
                    # a pending node would need an implicit link target; Ukkonen
                    # guarantees this never happens
                    assert not need
                    L += 1
                    s = canon(s, L, p - L + 1)
                    break
                w = self._split(s, child, L)
                self._add_leaf(w, p - L, c)
                if need:
                    link[need] = w
                need = w
                if s != ROOT:
                    s = link[s]
                    self.n_jumps += 1
                L -= 1
                s = canon(s, L, p - L)
        self.pp_node, self.lrs_len = s, L

    def _delete(self):
        T = self.text
        i, j = T.left, T.right
        if j < i:
            raise IndexError("delete from empty window")
        buf, cap = self._buf, self._cap
        children, depth, pos, parent = self._children, self._depth, self._pos, self._parent
        leaf = self._leaf_at[i % cap]
        v = parent[leaf]
        s, L = self.pp_node, self.lrs_len
        self.merged = None
        if L > depth[s] and children[s][buf[(j - L + 1 + depth[s]) % cap]] == leaf:
            # the longest repeating suffix is a prefix of the window: it becomes
            # unique, so the window's leaf is cut back to it instead of removed
            start = j - L + 1
            pos[leaf] = start
            self._leaf_at[start % cap] = leaf
            self.n_edits += 1
            if v != ROOT:
                self._credit(v, start)
            if s != ROOT:
                s = self._link[s]
                self.n_jumps += 1
            L -= 1
            s = self._canon(s, L, j - L + 1)
        else:
            kids = children[v]
            del kids[buf[(i + depth[v]) % cap]]
            self._release(leaf)
            self.n_edits += 1
            if v != ROOT and len(kids) == 1:
                (c,) = kids.values()
                u = parent[v]
                children[u][buf[(pos[c] + depth[u]) % cap]] = c
                parent[c] = u
                if self._cred[v]:
                    self._credit(u, max(pos[v], pos[c]))
                self._release(v)
                self.n_edits += 1
                self.merged = (v, u)
                if s == v:
                    s = u
            elif v != ROOT and pos[v] == i:
                # the only occurrence this node remembered is being evicted
                self._credit(v, max(pos[x] for x in kids.values()))
        T.pop_front()
        self.pp_node, self.lrs_len = s, L

    # --------------------------------------------------------------- queries

    def primary_locus(self) -> Locus:
        s, L = self.pp_node, self.lrs_len
        u = self._hed(s, L, self.text.right - L + 1)
        return Locus(u, self.depth(u) - L)

    def to_locus(self, s, length, start) -> Locus:
        u = self._hed(s, length, start)
        return Locus(u, self.depth(u) - length)

    def _from_locus(self, loc: Locus):
        """Internal (s, L, start) form of a public locus."""
        u, h = loc.node, loc.h
        L = self.depth(u) - h
        s = u if h == 0 and self._children[u] is not None else self._parent[u]
        return s, L, self._pos[u]

    def string_at(self, loc: Locus) -> bytes:
        if loc.node == BOTTOM:
            raise ValueError("bottom has no string")
        s, L, start = self._from_locus(loc)
        return self.text.slice(start, start + L - 1)

    def locus_length(self, loc: Locus) -> int:
        if loc.node == BOTTOM:
            return -1
        return self.depth(loc.node) - loc.h

    def walk(self, loc: Locus, c: int):
        """Locus of str(loc)+c, or None if that string does not occur in the window."""
        if loc.node == BOTTOM:
            return Locus(ROOT, 0)
        s, L, start = self._from_locus(loc)
        if L == self._depth[s] and self._children[s] is not None:
            child = self._children[s].get(c)
            if child is None:
                return None
        else:
            if loc.h == 0:  # at a leaf: nothing below
                return None
            child = loc.node
            if self.text.char_at(self._pos[child] + L) != c:
                return None
        return Locus(child, self.depth(child) - L - 1)

    def suffix_jump(self, loc: Locus) -> Locus:
        """Locus of str(loc) with its first character removed (root jumps to bottom)."""
        if loc.node == BOTTOM:
            raise ValueError("bottom has no suffix")
        if loc.node == ROOT:
            return Locus(BOTTOM, 0)
        s, L, start = self._from_locus(loc)
        if s != ROOT:
            s = self._link[s]
        if s != ROOT and self._depth[s] > L - 1:
            s = ROOT
        s = self._canon(s, L - 1, start + 1)
        return self.to_locus(s, L - 1, start + 1)

    def locate(self, pattern) -> Locus | None:
        """Locus of ``pattern`` (bytes or str) if it occurs in the window."""
        if isinstance(pattern, str):
            pattern = pattern.encode("latin-1")
        loc = Locus(ROOT, 0)
        for c in pattern:
            loc = self.walk(loc, c)
            if loc is None:
                return None
        return loc

    def implicit_suffix_len_on_leaf_edge(self, leaf: int) -> int:
        """Length of the longest suffix whose locus lies strictly inside the
        edge (parent(leaf), leaf), or 0 if there is none.  O(1)."""
        s, L = self.pp_node, self.lrs_len
        if L == 0:
            return 0
        u = self._hed(s, L, self.text.right - L + 1)
        if self._children[u] is not None:
            return 0
        x = L - (self._pos[leaf] - self._pos[u])
        if self._pos[leaf] >= self._pos[u] and x > self._depth[self._parent[leaf]]:
            return x
        return 0

    def lowest_implicit_suffix_on_leaf_edge(self, leaf: int) -> Locus | None:
        if self._children[leaf] is not None:
            raise ValueError(f"node {leaf} is not a leaf")
        x = self.implicit_suffix_len_on_leaf_edge(leaf)
        if not x:
            return None
        return Locus(leaf, self.depth(leaf) - x)

    def leaf_count(self, v: int) -> int:
        if self._children[v] is None:
            return 1
        count, stack = 0, [v]
        while stack:
            x = stack.pop()
            kids = self._children[x]
            if kids is None:
                count += 1
            else:
                stack.extend(kids.values())
        return count

    def has_two_leaves(self, v: int) -> bool:
        """True iff subtree(v) holds exactly two leaves (v internal)."""
        kids = self._children[v]
        if kids is None or len(kids) != 2:
            return False
        return all(self._children[x] is None for x in kids.values())

    def sibling(self, leaf: int) -> int:
        kids = self._children[self._parent[leaf]]
        if len(kids) != 2:
            raise ValueError(f"parent of {leaf} has {len(kids)} children, sibling undefined")
        a, b = kids.values()
        return b if a == leaf else a

    # --------------------------------------------------------------- walking

    def nodes(self):
        """All live node ids below bottom, parents before children."""
        out, stack = [], [ROOT]
        while stack:
            v = stack.pop()
            out.append(v)
            kids = self._children[v]
            if kids:
                stack.extend(kids[k] for k in sorted(kids, reverse=True))
        return out

    def explicit_nodes(self) -> dict:
        """Map path string -> 'root' | 'internal' | 'leaf' for every explicit node."""
        out = {}
        for v in self.nodes():
            kind = "root" if v == ROOT else ("leaf" if self._children[v] is None else "internal")
            out[self.string_of(v)] = kind
        return out

    def check(self):
        """Assert the structural invariants; used by the test-suite."""
        T = self.text
        left, right = T.left, T.right
        n = 0
        for v in self.nodes():
            n += 1
            if v == ROOT:
                continue
            u = self._parent[v]
            d = self.depth(v)
            p = self._pos[v]
            assert left <= p and p + d - 1 <= right, f"node {v} label [{p}, {p + d - 1}] outside window"
            assert self._children[u][T.char_at(p + self._depth[u])] == v, f"bad child key for {v}"
            assert d > self._depth[u]
            if self._children[v] is None:
                assert p + d - 1 == right
                assert self._leaf_at[p % len(self._leaf_at)] == v
            else:
                assert len(self._children[v]) >= 2, f"unary internal node {v}"
                w = self._link[v]
                assert self.string_of(w) == self.string_of(v)[1:], f"bad suffix link {v}->{w}"
        assert n == self.live_nodes
        assert n <= 2 * len(T) + 2
        assert self.lrs_len == 0 or self.lrs_len < len(T)

    def to_dot(self, name: str = "stree") -> str:
        """Graphviz rendering; leaves are boxes, suffix links dashed."""

        def esc(b: bytes) -> str:
            return b.decode("latin-1").encode("unicode_escape").decode("ascii").replace('"', '\\"')

        lines = [f"digraph {name} {{", "  node [shape=circle];",
                 f'  {ROOT} [label="root"];']
        for v in self.nodes():
            if v == ROOT:
                continue
            if self._children[v] is None:
                lines.append(f'  {v} [shape=box, label="{v}:{self._pos[v]}"];')
            else:
                lines.append(f'  {v} [label="{v}"];')
            lines.append(f'  {self._parent[v]} -> {v} [label="{esc(self.edge_label(v))}"];')
        for v in self.nodes():
            if v != ROOT and self._children[v] is not None:
                lines.append(f"  {v} -> {self._link[v]} [style=dashed, constraint=false];")
        lines.append("}")
        return "\n".join(lines) + "\n"
