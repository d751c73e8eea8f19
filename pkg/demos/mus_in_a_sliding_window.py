"""
Minimal unique substrings of a sliding window
=============================================

A minimal unique substring (MUS) of a window occurs exactly once in it,
while both of its one-shorter affixes occur at least twice.  MUSs never
nest, so a window of length d has at most d of them and they can be stored
as start/end pairs.

This walk-through slides a window of width 6 over a short binary string and
prints what changes at every step.
"""

from slidewin import MusEngine, run_sliding
from slidewin.oracle import brute_mus

text = b"abaababaabaab"
d = 6

# run_sliding yields the full MUS set of the first window, then the net
# change of each slide
events = list(run_sliding(text, d))
first = events[0]
print("first window", text[:d].decode(), "MUS", first.added)

current = set(first.added)
for ev in events[1:]:
    current = (current - set(ev.removed)) | set(ev.added)
    window = text[ev.pos - d:ev.pos]
    shown = ", ".join(window[s - (ev.pos - d) - 1:t - (ev.pos - d)].decode()
                      for s, t in sorted(current))
    print(f"{ev.pos:3d} {window.decode()}  +{ev.added} -{ev.removed}  -> {shown}")
    # every set agrees with the definition evaluated from scratch
    assert current == brute_mus(window, offset=ev.pos - d + 1)

###############################################################################
# One append changes at most four MUSs.  The classic worst case appends 'b'
# to "aaabcc": "b" stops being unique and three longer MUSs appear.

eng = MusEngine(8)
for c in b"aaabcc":
    eng.apply_append(c)
ev = eng.apply_append(ord("b"))
print("\naaabcc + b:", "added", ev.added, "removed", ev.removed,
      f"|delta|={ev.delta} net={ev.net:+d}")

###############################################################################
# Deleting from the left is driven by the shortest prefix occurring at most
# twice.  Here the longer window has two MUSs more than the shorter one.

eng = MusEngine(7)
for c in b"ababbba":
    eng.apply_append(c)
print("\nbefore delete:", eng.window().decode(), eng.mus_set())
ev = eng.apply_delete()
print("after delete: ", eng.window().decode(), eng.mus_set(), "removed", ev.removed)
