"""Minimal absent words of windows and how they change per slide.

MAW sets are recomputed per window from a suffix automaton; this is meant
for desk-scale inputs where the interest is in the size of the changes, not
in maintaining them fast.

Words are ``bytes`` (or ``str`` when the input is a ``str``).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field


class BoundViolation(AssertionError):
    pass


class SuffixAutomaton:
    """Minimal DFA of the substrings of ``w``.

    ``first[q]`` is the end (0-based) of the leftmost occurrence of the
    strings in state q; ``length[q]`` the longest of them.
    """

    def __init__(self, w):
        self.w = w
        self.next: list[dict] = [{}]
        self.link = [-1]
        self.length = [0]
        self.first = [-1]
        last = 0
        for i, c in enumerate(w):
            last = self._extend(last, c, i)

    def _extend(self, last, c, i):
        nxt, link, length, first = self.next, self.link, self.length, self.first
        cur = len(length)
        nxt.append({})
        link.append(0)
        length.append(length[last] + 1)
        first.append(i)
        p = last
        while p != -1 and c not in nxt[p]:
            nxt[p][c] = cur
            p = link[p]
        if p != -1:
            q = nxt[p][c]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = len(length)
                nxt.append(dict(nxt[q]))
                link.append(link[q])
                length.append(length[p] + 1)
                first.append(first[q])
                while p != -1 and nxt[p].get(c) == q:
                    nxt[p][c] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        return cur

    def shortest(self, q):
        """Shortest string of state q (as a slice of w)."""
        if q == 0:
            return self.w[:0]
        m = self.length[self.link[q]] + 1
        e = self.first[q]
        return self.w[e - m + 1:e + 1]


def _letters(w, alphabet):
    if isinstance(w, str):
        letters = sorted(set(alphabet))
        wrap = lambda c: c  # noqa: E731
    else:
        letters = sorted(c if isinstance(c, int) else c[0] for c in alphabet)
        wrap = lambda c: bytes([c])  # noqa: E731
    present = set(w)
    missing = present - set(letters)
    if missing:
        raise ValueError(f"alphabet lacks characters {sorted(missing)!r}")
    return letters, wrap


def maw_set(w, alphabet) -> set:
    """All minimal absent words of ``w`` over ``alphabet``."""
    letters, wrap = _letters(w, alphabet)
    sa = SuffixAutomaton(w)
    out = set()
    root = sa.next[0]
    for a in letters:
        if a not in root:
            out.add(wrap(a))
    for q in range(1, len(sa.length)):
        here, up = sa.next[q], sa.next[sa.link[q]]
        if len(here) == len(up):
            continue  # same out-letters as the link state: nothing absent here
        u = None
        for a in up:
            if a not in here:
                if u is None:
                    u = sa.shortest(q)
                out.add(u + wrap(a))
    return out


def distinct(w) -> int:
    return len(set(w))


@dataclass
class MawDiff:
    """MAW change of one step.

    On an append the typed words are the added ones; on a delete they are
    the removed ones (the mirror image).  ``types`` counts Type 1/2/3.
    """

    op: str
    added: set = field(default_factory=set)
    removed: set = field(default_factory=set)
    types: tuple = (0, 0, 0)
    sigma_prime: int = 0
    d: int = 0
    t3_ends: list = field(default_factory=list)

    @property
    def delta(self) -> int:
        return len(self.added) + len(self.removed)

    @property
    def bound(self) -> int:
        return self.sigma_prime + self.d + 1

    def violations(self) -> list[str]:
        out = []
        single = self.removed if self.op == "append" else self.added
        if len(single) != 1:
            out.append(f"{len(single)} words on the single side, expected 1")
        if self.d == 0:
            return out  # the size bounds speak about non-empty windows
        n1, n2, n3 = self.types
        if n1 > 1:
            out.append(f"Type 1 count {n1} > 1")
        if n2 > self.sigma_prime:
            out.append(f"Type 2 count {n2} > sigma' = {self.sigma_prime}")
        if n3 > max(self.d - 1, 0):
            out.append(f"Type 3 count {n3} > d - 1 = {self.d - 1}")
        if self.delta > self.bound:
            out.append(f"|delta| {self.delta} > {self.bound}")
        if len(set(self.t3_ends)) != len(self.t3_ends):
            out.append("Type 3 leftmost-occurrence ends collide")
        if self.d in self.t3_ends:
            out.append("Type 3 leftmost occurrence ends at the window end")
        return out

    def record(self, pos: int) -> dict:
        return {"pos": pos, "op": self.op,
                "removed": [_show(x) for x in sorted(self.removed)],
                "added": [_show(x) for x in sorted(self.added)],
                "types": list(self.types), "bound": self.bound, "delta": self.delta}


def _show(x):
    return x if isinstance(x, str) else x.decode("latin-1")


def diff_append(w, c, alphabet, check: bool = False) -> MawDiff:
    """MAW(w) versus MAW(wc).  Types: 1 = w'[..-1] and w'[2..] both absent
    from w, 2 = only the prefix absent, 3 = only the suffix absent."""
    wc = w + c if not isinstance(c, int) else w + bytes([c])
    old, new = maw_set(w, alphabet), maw_set(wc, alphabet)
    added, removed = new - old, old - new
    n1 = n2 = n3 = 0
    ends = []
    for x in added:
        pre, suf = x[:-1] not in w, x[1:] not in w
        if pre and suf:
            n1 += 1
        elif pre:
            n2 += 1
        elif suf:
            n3 += 1
            ends.append(w.find(x[:-1]) + len(x) - 1)
    diff = MawDiff("append", added, removed, (n1, n2, n3), distinct(w), len(w), ends)
    if check:
        bad = diff.violations()
        if bad:
            raise BoundViolation(f"append {c!r} to {w!r}: " + "; ".join(bad))
    return diff


def diff_delete(w, alphabet, check: bool = False) -> MawDiff:
    """MAW(w) versus MAW(w[2..]).  Types mirror the append case on the
    removed words: 2 = only the suffix absent from w[2..], 3 = only the prefix."""
    if len(w) < 1:
        raise ValueError("cannot delete from an empty window")
    v = w[1:]
    old, new = maw_set(w, alphabet), maw_set(v, alphabet)
    added, removed = new - old, old - new
    n1 = n2 = n3 = 0
    ends = []
    for x in removed:
        pre, suf = x[:-1] not in v, x[1:] not in v
        if pre and suf:
            n1 += 1
        elif suf:
            n2 += 1
        elif pre:
            n3 += 1
            # rightmost occurrence of x[2..], measured from the right end so
            # it plays the role of the leftmost-occurrence end of the mirror
            ends.append(len(v) - v.rfind(x[1:]))
    diff = MawDiff("delete", added, removed, (n1, n2, n3), distinct(v), len(v), ends)
    if check:
        bad = diff.violations()
        if bad:
            raise BoundViolation(f"delete left of {w!r}: " + "; ".join(bad))
    return diff


# ------------------------------------------------------------------ slides

@dataclass
class SlideStats:
    """Per-slide symmetric-difference sizes and their total S(T, d)."""

    d: int
    deltas: list = field(default_factory=list)
    bounds: list = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.deltas)

    @property
    def max_slide(self) -> int:
        return max(self.deltas, default=0)

    def violations(self) -> list[str]:
        return [f"slide {k + 1}: |delta| {x} > {b}"
                for k, (x, b) in enumerate(zip(self.deltas, self.bounds)) if x > b]

    def summary(self) -> dict:
        return {"summary": True, "d": self.d, "slides": len(self.deltas),
                "S": self.total, "max_slide": self.max_slide}


def default_alphabet(text):
    return sorted(set(text))


def slide_diffs(text, d: int, alphabet=None):
    """Yield ``(pos, added, removed, bound)`` for every slide of a width-``d``
    window; ``pos`` is the right end of the new window (1-based).

    ``bound`` composes the append and delete bounds:
    (sigma'_old + d + 1) + (sigma'_new + d + 1).
    """
    if alphabet is None:
        alphabet = default_alphabet(text)
    prev = maw_set(text[:d], alphabet)
    for j in range(d, len(text)):
        old_w, new_w = text[j - d:j], text[j - d + 1:j + 1]
        cur = maw_set(new_w, alphabet)
        bound = (distinct(old_w) + d + 1) + (distinct(new_w) + d + 1)
        yield j + 1, cur - prev, prev - cur, bound
        prev = cur


def total_changes(text, d: int, alphabet=None) -> SlideStats:
    """S(T, d): summed |MAW(old window) delta MAW(new window)| over all slides."""
    if d < 1 or d >= len(text):
        raise ValueError(f"need 1 <= d < |T| (d={d}, |T|={len(text)})")
    stats = SlideStats(d)
    for _, added, removed, bound in slide_diffs(text, d, alphabet):
        stats.deltas.append(len(added) + len(removed))
        stats.bounds.append(bound)
    return stats


def scan_records(text, d: int, alphabet=None, steps: bool = False):
    """JSON-ready records for a MAW scan, ending with a summary record.

    With ``steps`` every append (including the growth phase) and every delete
    is reported with its own bound; otherwise one record per slide.
    """
    if alphabet is None:
        alphabet = default_alphabet(text)
    stats = SlideStats(d)
    if steps:
        for j in range(len(text)):
            lo = max(0, j - d)
            diff = diff_append(text[lo:j], text[j:j + 1], alphabet)
            yield diff.record(j + 1)
            if j >= d:
                dl = diff_delete(text[lo:j + 1], alphabet)
                yield dl.record(j + 1)
                stats.deltas.append(len(set(diff.added ^ diff.removed) ^ (dl.added ^ dl.removed)))
                stats.bounds.append(diff.bound + dl.bound)
    else:
        for pos, added, removed, bound in slide_diffs(text, d, alphabet):
            stats.deltas.append(len(added) + len(removed))
            stats.bounds.append(bound)
            yield {"pos": pos, "removed": [_show(x) for x in sorted(removed)],
                   "added": [_show(x) for x in sorted(added)], "bound": bound,
                   "delta": len(added) + len(removed)}
    yield stats.summary()


def to_json(rec) -> str:
    return json.dumps(rec, separators=(",", ":"), sort_keys=False)


# -------------------------------------------------------------- generators

def _letter(k: int) -> bytes:
    if not 0 <= k < 256:
        raise ValueError("alphabet exhausted (at most 256 letters)")
    return bytes([ord("a") + k]) if k < 26 else bytes([k])


def gen_tight_append(sigma_prime: int, d: int) -> tuple[bytes, bytes]:
    """(z, alpha) with |MAW(z alpha) delta MAW(z)| = sigma' + d + 1 over
    sigma' + 1 letters: z = a1 .. a_{s'-1} a_{s'}^{d - s' + 1}, alpha = a_{s'+1}."""
    if not 1 <= sigma_prime <= d:
        raise ValueError("need 1 <= sigma' <= d")
    if sigma_prime >= 255:
        raise ValueError("alphabet exhausted")
    z = b"".join(_letter(k) for k in range(sigma_prime - 1))
    z += _letter(sigma_prime - 1) * (d - sigma_prime + 1)
    return z, _letter(sigma_prime)


def gen_tight_total_small_sigma(sigma: int, d: int, n: int) -> bytes:
    """Period U = a1 x^{k-1} a2 x^{k-1} .. a_{s-1} x^{k-1} with x = a_s and
    (k-1)(s-1) <= d < k(s-1), repeated and cut to length n.  sigma = 2 gives (ab)^*."""
    if sigma == 2:
        if not 2 <= d < n:
            raise ValueError("need 2 <= d < n")
        return (b"ab" * (n // 2 + 1))[:n]
    if not 3 <= sigma <= d < n:
        raise ValueError("need 3 <= sigma <= d < n")
    if sigma > 255:
        raise ValueError("alphabet exhausted")
    k = d // (sigma - 1) + 1
    alpha = _letter(sigma - 1)
    U = b"".join(_letter(x) + alpha * (k - 1) for x in range(sigma - 1))
    e, m = divmod(n, len(U))
    return U * e + U[:m]


def gen_tight_total_large_sigma(d: int, n: int) -> bytes:
    """(a1 a2 .. a_{d+1})^e cut to length n; needs d + 1 distinct letters."""
    if d >= 255:
        raise ValueError("alphabet exhausted: need d + 1 <= 255 letters")
    if not 1 <= d < n:
        raise ValueError("need 1 <= d < n")
    period = b"".join(_letter(k) for k in range(d + 1))
    e, m = divmod(n, d + 1)
    return period * e + period[:m]
