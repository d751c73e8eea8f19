"""Sliding-window string indexes: minimal unique substrings maintained with a
sliding suffix tree, and minimal absent word change statistics."""

from .active_points import ActivePoints, Occ, SqpInfo
from .maw_engine import (MawDiff, SlideStats, SuffixAutomaton, diff_append, diff_delete,
                         gen_tight_append, gen_tight_total_large_sigma,
                         gen_tight_total_small_sigma, maw_set, total_changes)
from .mus_engine import MusEngine, MusEvent, MusIndex, run_sliding, run_steps
from .suffix_tree import BOTTOM, ROOT, Locus, SlidingSuffixTree
from .window_text import RingText, WindowError

__all__ = [
    "ActivePoints", "Occ", "SqpInfo",
    "MawDiff", "SlideStats", "SuffixAutomaton", "diff_append", "diff_delete",
    "gen_tight_append", "gen_tight_total_large_sigma", "gen_tight_total_small_sigma",
    "maw_set", "total_changes",
    "MusEngine", "MusEvent", "MusIndex", "run_sliding", "run_steps",
    "BOTTOM", "ROOT", "Locus", "SlidingSuffixTree",
    "RingText", "WindowError",
]
__version__ = "0.1.0"
