"""Oracle-backed checking of the engines over string corpora.

Shared by ``slidewin verify`` and the test-suite.  A run feeds one text
through a :class:`MusEngine` of width d and compares, after every append and
every delete, the MUS set, the step's events, the suffix lengths and the
shortest quasi-unique prefix with :class:`WindowOracle`.
"""
from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field

from .mus_engine import MusEngine
from .oracle import OracleReport, WindowOracle


@dataclass
class CorpusStats:
    runs: int = 0
    steps: int = 0
    slides: int = 0
    max_step_delta: int = 0
    min_step_net: int = 0
    max_step_net: int = 0
    max_slide_delta: int = 0
    violations: list = field(default_factory=list)
    sqp_cases: Counter = field(default_factory=Counter)

    def merge_step(self, delta, net):
        if delta > self.max_step_delta:
            self.max_step_delta = delta
        if net < self.min_step_net:
            self.min_step_net = net
        if net > self.max_step_net:
            self.max_step_net = net


class FaultyMusEngine(MusEngine):
    """Deliberately broken engine (drops the left extension of the removed
    sqs occurrence) used to show that verification catches faults."""

    def apply_append(self, c):
        ev = super().apply_append(c)
        for s, t in list(ev.added):
            if t != self.right and s < self.right - self.tree.lrs_len - 1 and (s, t + 1) not in ev.added:
                if self.index.end_of(s) == t and not any(x == s for x, _ in ev.removed):
                    self.index.remove(s, t)
                    ev.added.remove((s, t))
                    break
        return ev


def _np():
    import numpy as np
    return np


def check_run(text: bytes, d: int, oracle: WindowOracle | None = None,
              stats: CorpusStats | None = None, engine_cls=MusEngine) -> OracleReport | None:
    """Run ``text`` through a width-``d`` engine; None when everything matches."""
    np = _np()
    n = len(text)
    if n == 0:
        return None
    if oracle is None:
        oracle = WindowOracle(text)
    eng = engine_cls(d)
    pts = eng.points
    lo, hi, ops = [], [], []
    changes = []  # (row, start, end-or-0)
    ev_rows = []
    lens, sqps, cases = [], [], []
    def record(ev):
        r = len(lo)
        lo.append(eng.left)
        hi.append(eng.right)
        ops.append(ev.op)
        ev_rows.append(ev)
        for s, _ in ev.removed:
            changes.append((r, s, 0))
        for s, t in ev.added:
            changes.append((r, s, t))
        lens.append((pts.len_lrs, pts.len_t3, pts.len_sqs))
        st, en, occ, sec = pts._sqp()
        sqps.append((en - st + 1, occ, sec or 0))
        cases.append(pts.sqp_case)

    for c in text:
        record(eng.apply_append(c))
        if len(eng) > d:
            record(eng.apply_delete())
    R = len(lo)
    a = np.array(lo)
    b = np.array(hi)
    expected = oracle.mus_ends(a, b)

    # the engine's MUS matrix, rebuilt from its events alone
    C = np.full((R + 1, n), -1, dtype=np.int64)
    C[0] = 0
    # removals first so a start that is removed and re-added keeps the new end
    for r, s, t in changes:
        if t == 0:
            C[r + 1, s - 1] = 0
    for r, s, t in changes:
        if t:
            C[r + 1, s - 1] = t
    idx = np.where(C >= 0, np.arange(R + 1)[:, None], 0)
    idx = np.maximum.accumulate(idx, axis=0)
    got = np.take_along_axis(C, idx, axis=0)[1:]

    def report(r, what, exp, act):
        w = text[lo[r] - 1:hi[r]]
        return OracleReport(window=(text, d, r + 1, ops[r], lo[r], hi[r], w),
                            expected={what: exp}, actual={what: act},
                            mismatch=f"{what} differs after step {r + 1} ({ops[r]}) on window [{lo[r]}, {hi[r]}] = {w!r}")

    bad = np.nonzero((got != expected).any(axis=1))[0]
    if len(bad):
        r = int(bad[0])
        return report(r, "MUS set", _intervals(expected[r]), _intervals(got[r]))
    # every event must be a genuine change, and the events must cover all changes
    prev = np.vstack([np.zeros((1, n), dtype=expected.dtype), expected[:-1]])
    n_changes = (prev != 0).astype(int) * (prev != expected) + (expected != 0).astype(int) * (prev != expected)
    per_row = n_changes.sum(axis=1)
    for r, ev in enumerate(ev_rows):
        if ev.delta != per_row[r]:
            return report(r, "event count", int(per_row[r]), ev.delta)
        for s, t in ev.added:
            if prev[r, s - 1] == t:
                return report(r, "added event", "absent before", (s, t))
        for s, t in ev.removed:
            if expected[r, s - 1] == t or prev[r, s - 1] != t:
                return report(r, "removed event", "present before, absent after", (s, t))
    exp_len = oracle.suffix_lengths(a, b)
    got_len = np.array(lens)
    bad = np.nonzero((exp_len != got_len).any(axis=1))[0]
    if len(bad):
        r = int(bad[0])
        return report(r, "(lrs, t3, sqs)", tuple(map(int, exp_len[r])), tuple(got_len[r]))
    exp_sqp = oracle.sqp(a, b)
    got_sqp = np.array(sqps)
    bad = np.nonzero((exp_sqp != got_sqp).any(axis=1))[0]
    if len(bad):
        r = int(bad[0])
        return report(r, "sqp (length, occ, second)", tuple(map(int, exp_sqp[r])), tuple(got_sqp[r]))

    if stats is not None:
        stats.runs += 1
        stats.steps += R
        stats.sqp_cases.update(cases)
        for r, ev in enumerate(ev_rows):
            # the delete bound counts |MUS(longer)| - |MUS(shorter)|
            net = ev.net if ev.op == "append" else -ev.net
            stats.merge_step(ev.delta, net)
            if ev.delta > 4 or not -1 <= net <= 2:
                stats.violations.append((text, d, r + 1, ev.op, ev.delta, ev.net))
            if ev.op == "delete":
                # a full slide: window r-2 -> window r
                before = prev[r - 1]
                after = expected[r]
                sd = int(((before != after) & (before != 0)).sum() + ((before != after) & (after != 0)).sum())
                stats.slides += 1
                if sd > stats.max_slide_delta:
                    stats.max_slide_delta = sd
                if sd > 8:
                    stats.violations.append((text, d, r + 1, "slide", sd, None))
    return None


def _intervals(row):
    return sorted((s + 1, int(t)) for s, t in enumerate(row) if t)


def binary_corpus(max_len: int):
    """All strings over {a, b} of length ``max_len``; engine runs are online,
    so their runs cover every shorter string as a prefix."""
    for tup in itertools.product(b"ab", repeat=max_len):
        yield bytes(tup)


def random_corpus(count: int, max_len: int, seed: int, sigmas=(2, 3, 4, 5)):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        sigma = rng.choice(sigmas)
        n = rng.randint(1, max_len)
        out.append(bytes(rng.choice(b"abcde"[:sigma]) for _ in range(n)))
    return out


@dataclass
class CorpusResult:
    report: OracleReport | None
    stats: CorpusStats

    def __bool__(self):
        return self.report is None


def verify_texts(texts, stats=None, engine_cls=MusEngine) -> CorpusResult:
    stats = stats if stats is not None else CorpusStats()
    for text in texts:
        oracle = WindowOracle(text)
        for d in range(1, len(text) + 1):
            rep = check_run(text, d, oracle, stats, engine_cls)
            if rep is not None:
                return CorpusResult(rep, stats)
    return CorpusResult(None, stats)


def verify_mus_corpus(max_len=12, n_random=50, max_random_len=60, seed=0, fault=False):
    """Exhaustive binary corpus then a seeded random corpus; first mismatch or None."""
    engine_cls = FaultyMusEngine if fault else MusEngine
    res = verify_texts(binary_corpus(max_len), engine_cls=engine_cls)
    if res.report is None and n_random:
        res = verify_texts(random_corpus(n_random, max_random_len, seed), res.stats, engine_cls)
    return res.report


def verify_tight_grid(max_d: int = 8):
    """Replay the tight-append grid; returns (all equal, printable lines)."""
    from .maw_engine import diff_append, gen_tight_append

    ok, lines = True, []
    for sp in range(1, max_d + 1):
        for d in range(sp, max_d + 1):
            z, alpha = gen_tight_append(sp, d)
            diff = diff_append(z, alpha, set(z + alpha))
            bound = sp + d + 1
            hit = diff.delta == bound
            ok &= hit
            lines.append(f"sigma'={sp} d={d} z={z.decode()} alpha={alpha.decode()} "
                         f"|delta|={diff.delta} bound={bound} {'tight' if hit else 'NOT tight'}")
    return ok, lines
