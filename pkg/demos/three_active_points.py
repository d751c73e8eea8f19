"""
Three active points
===================

The MUS updates only need three suffixes of the window, each tracked as a
position in the suffix tree:

* the longest repeating suffix (lrs),
* the longest suffix occurring at least three times,
* the shortest suffix occurring at most twice (sqs), one character longer.

Deleting on the left also needs the shortest prefix occurring at most twice
(sqp).  It is read off the leaf of the whole window in constant time, with
four different situations depending on where the lrs sits.
"""

from slidewin import ActivePoints, SlidingSuffixTree
from slidewin.oracle import brute_lrs_sqs_sqp


def grow(word):
    tree = SlidingSuffixTree(len(word))
    points = ActivePoints(tree)
    for c in word:
        tree.extend_right(c)
        points.advance_on_append()
    return tree, points


for word in [b"abcab", b"aaaa", b"abacada", b"aabab", b"axaya"]:
    tree, pts = grow(word)
    info = pts.compute_sqp()
    lrs, sqs, sqp = brute_lrs_sqs_sqp(word)
    print(f"{word.decode():8s} lrs={tree.string_at(pts.pp).decode()!r:6} "
          f"sqs={tree.string_at(pts.sp).decode()!r:6} "
          f"sqp={word[:info.length].decode()!r:6} occ={info.occ} case {pts.sqp_case}")
    assert (lrs, sqs, sqp) == (tree.string_at(pts.pp), tree.string_at(pts.sp),
                               word[:info.length])

###############################################################################
# "axaya" is the window where the parent of the whole-window leaf is itself
# the lrs.  The prefix "a" occurs three times, so the answer is "ax".

###############################################################################
# The points survive deletions too.  Sliding keeps them correct at every step.

tree = SlidingSuffixTree(5)
pts = ActivePoints(tree)
for c in b"abaabbabaab":
    tree.extend_right(c)
    pts.advance_on_append()
    if len(tree) > 4:
        tree.delete_leftmost()
        pts.advance_on_delete()
    w = tree.text.window_string()
    print(w.decode(), "lrs", pts.len_lrs, "t3", pts.len_t3, "sqs", pts.len_sqs)
