"""
Looking at the sliding suffix tree
==================================

The tree has no end marker, so suffixes that occur more than once stay
implicit: they sit inside an edge or end at an internal node.  ``to_dot``
prints Graphviz source; leaves are boxes labelled ``id:start`` and suffix
links are dashed.
"""

import sys

from slidewin import SlidingSuffixTree

tree = SlidingSuffixTree(8)
for c in b"abcabd":
    tree.extend_right(c)
print(tree.explicit_nodes())

###############################################################################
# Drop the leftmost character.  The leaf of "abcabd" disappears, and "ab"
# becomes unary and is merged into its remaining child.

tree.delete_leftmost()
print(tree.explicit_nodes())
tree.check()

out = sys.argv[1] if len(sys.argv) > 1 else None
dot = tree.to_dot("bcabd")
if out:
    with open(out, "w") as fh:
        fh.write(dot)
else:
    print(dot)
