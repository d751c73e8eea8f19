"""Minimal unique substrings of a sliding window.

The MUS set is kept in two circular arrays: ``S2E`` maps a start position to
the end of the MUS starting there, ``E2S`` maps an end to its start.  MUSs
never nest, so each position starts and ends at most one MUS.

Each append changes at most four MUSs: the new suffix MUS, the removal of
the MUS equal to the old sqs occurrence, and up to two extensions of it.
Each delete is the mirror image driven by the shortest quasi-unique prefix.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .active_points import ActivePoints
from .suffix_tree import SlidingSuffixTree


class MusIndex:
    """S2E/E2S arrays over positions modulo ``width``; 0 means nil."""

    def __init__(self, width: int):
        self.width = width
        self.S2E = [0] * width
        self.E2S = [0] * width
        self.count = 0

    def _k(self, p):
        return (p - 1) % self.width

    def end_of(self, s: int) -> int:
        """End of the MUS starting at ``s`` or 0."""
        return self.S2E[(s - 1) % self.width]

    def start_of(self, e: int) -> int:
        return self.E2S[(e - 1) % self.width]

    def add(self, s, e):
        a, b = self._k(s), self._k(e)
        assert not self.S2E[a] and not self.E2S[b], f"MUS slot taken adding [{s},{e}]"
        self.S2E[a] = e
        self.E2S[b] = s
        self.count += 1

    def remove(self, s, e):
        a, b = self._k(s), self._k(e)
        assert self.S2E[a] == e and self.E2S[b] == s, f"[{s},{e}] is not a MUS"
        self.S2E[a] = 0
        self.E2S[b] = 0
        self.count -= 1

    def intervals(self, left, right) -> list[tuple[int, int]]:
        out = []
        for s in range(left, right + 1):
            e = self.S2E[(s - 1) % self.width]
            if e:
                out.append((s, e))
        return out


@dataclass(slots=True)
class MusEvent:
    """Net MUS change of one step: appended, deleted, or a whole slide."""

    op: str
    pos: int  # right end of the window after the step
    added: list = field(default_factory=list)
    removed: list = field(default_factory=list)

    @property
    def delta(self) -> int:
        return len(self.added) + len(self.removed)

    @property
    def net(self) -> int:
        return len(self.added) - len(self.removed)

    def changes(self) -> list[tuple[str, tuple[int, int]]]:
        """Per-interval view: removals first, then additions, each sorted."""
        return ([("removed", x) for x in sorted(self.removed)] +
                [("added", x) for x in sorted(self.added)])

    def record(self, zero_based: bool = False) -> dict:
        k = 1 if zero_based else 0
        return {"pos": self.pos - k, "op": self.op,
                "added": [[s - k, t - k] for s, t in self.added],
                "removed": [[s - k, t - k] for s, t in self.removed]}

    def to_json(self, zero_based: bool = False) -> str:
        return json.dumps(self.record(zero_based), separators=(",", ":"))


def _net(op, pos, added, removed) -> MusEvent:
    if added and removed:
        a, r = set(added), set(removed)
        added, removed = a - r, r - a
    return MusEvent(op, pos, sorted(added), sorted(removed))


def compose(op, first: MusEvent, second: MusEvent) -> MusEvent:
    """Net effect of two consecutive steps."""
    added, removed = set(first.added), set(first.removed)
    for x in second.removed:
        if x in added:
            added.discard(x)
        else:
            removed.add(x)
    for x in second.added:
        if x in removed:
            removed.discard(x)
        else:
            added.add(x)
    return MusEvent(op, second.pos, sorted(added), sorted(removed))


class MusEngine:
    """Maintains MUS(T[left..right]) for windows of up to ``d`` characters.

    A slide appends before it deletes, so internally the window may briefly
    hold ``d + 1`` characters.
    """

    def __init__(self, d: int):
        if d < 1:
            raise ValueError("window width must be at least 1")
        self.d = d
        self.tree = SlidingSuffixTree(d + 1)
        self.points = ActivePoints(self.tree)
        self.index = MusIndex(d + 1)
        self._last = -1
        self._run = 0

    @property
    def left(self):
        return self.tree.left

    @property
    def right(self):
        return self.tree.right

    def __len__(self):
        return len(self.tree)

    def window(self) -> bytes:
        return self.tree.text.window_string()

    def mus_set(self) -> list[tuple[int, int]]:
        return self.index.intervals(self.tree.left, self.tree.right)

    def apply_append(self, c: int) -> MusEvent:
        tree, idx = self.tree, self.index
        if len(tree.text) > self.d:
            raise OverflowError("window is full; delete before appending")
        old_lrs = tree.lrs_len
        self._run = self._run + 1 if c == self._last else 1
        self._last = c
        tree._extend(c)
        self.points.advance_on_append()
        p = tree.right
        k = tree.lrs_len
        added, removed = [], []
        ls = self.points.len_sqs
        twice = k >= ls
        if twice:
            # sqs occurs twice: its older occurrence ends inside the other lrs copy
            u = tree._hed(tree.pp_node, k, p - k + 1)
            pl = tree._pos[u]
            q = pl + k - 1
            ps = q - ls + 1
            idx.remove(ps, q)
            removed.append((ps, q))
        if k <= old_lrs or self._run >= k + 1:
            idx.add(p - k, p)
            added.append((p - k, p))
        if twice:
            if not idx.start_of(q + 1):
                idx.add(ps, q + 1)
                added.append((ps, q + 1))
            if pl - 1 >= tree.text.left and not idx.end_of(pl - 1):
                idx.add(pl - 1, q)
                added.append((pl - 1, q))
        return _net("append", p, added, removed)

    def apply_delete(self) -> MusEvent:
        tree, idx = self.tree, self.index
        _, sqp_end, sqp_occ, s = self.points._sqp()
        i = tree.text.left
        tree._delete()
        self.points.advance_on_delete()
        added, removed = [], []
        e = idx.end_of(i)
        if e:
            idx.remove(i, e)
            removed.append((i, e))
        if sqp_occ == 2:
            t = s + sqp_end - i
            e = idx.end_of(s)
            if e:
                idx.remove(s, e)
                removed.append((s, e))
            b = idx.start_of(t)
            if b:
                idx.remove(b, t)
                removed.append((b, t))
            idx.add(s, t)
            added.append((s, t))
        return _net("delete", tree.right, added, removed)

    def slide(self, c: int) -> tuple[MusEvent, MusEvent]:
        """Append ``c`` then drop the leftmost character."""
        a = self.apply_append(c)
        return a, self.apply_delete()

    def counters(self) -> dict:
        t = self.tree
        return {"suffix_jumps": t.n_jumps + self.points.n_steps, "edits": t.n_edits,
                "canon_steps": t.n_canon, "credit_steps": t.n_credit, "nodes": t.live_nodes}


def run_steps(stream, d: int):
    """Yield ``(append_event, delete_event_or_None)`` for every input byte."""
    eng = MusEngine(d)
    for c in stream:
        a = eng.apply_append(c)
        dl = eng.apply_delete() if len(eng) > d else None
        yield a, dl


def run_sliding(stream, d: int, engine: MusEngine | None = None):
    """One MusEvent per window of width ``d``.

    The first event (op ``append``) carries the whole MUS set of the first
    full window, or of the entire stream when it is shorter than ``d``.
    Every later event (op ``slide``) is the net change of one slide.
    """
    eng = engine if engine is not None else MusEngine(d)
    first = None
    for c in stream:
        if len(eng) < d:
            ev = eng.apply_append(c)
            first = ev if first is None else compose("append", first, ev)
            if len(eng) == d:
                yield first
            continue
        a, dl = eng.slide(c)
        yield compose("slide", a, dl)
    if first is not None and len(eng) < d:
        yield first
