"""
How many minimal absent words change per slide
==============================================

A minimal absent word (MAW) is absent from the window while both of its
one-shorter affixes are present.  Appending one letter to a window of length
d with sigma' distinct letters removes exactly one MAW and adds at most
sigma' + d of them.
"""

from slidewin import diff_append, gen_tight_append, gen_tight_total_large_sigma, total_changes

z, alpha = gen_tight_append(2, 3)
diff = diff_append(z, alpha, z + alpha)
print(f"z={z.decode()} + {alpha.decode()}: removed {sorted(diff.removed)}")
print(f"  added {sorted(diff.added)}  types {diff.types}  |delta|={diff.delta} "
      f"bound {diff.bound}")

###############################################################################
# The construction needs two distinct letters before the run.  With one
# letter the window a^d only gains "alpha alpha" and "alpha a" and loses
# "alpha", whatever d is.

for d in range(1, 6):
    z, alpha = gen_tight_append(1, d)
    print(f"sigma'=1 d={d}: |delta|={diff_append(z, alpha, z + alpha).delta} "
          f"bound {1 + d + 1}")

###############################################################################
# Summed over a whole text, S(T, d) grows like d * n on periodic texts over
# d + 1 letters.

for n in (8, 12, 16, 20):
    text = gen_tight_total_large_sigma(3, n)
    stats = total_changes(text, 3)
    print(f"n={n:2d} {text.decode():20s} S={stats.total:4d}  d(n-d)={3 * (n - 3)}")
