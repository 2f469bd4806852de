"""Print the tiling algebra and its string modules for one tree.

Shows the quiver (vertices = interior edges, arrows from corner
adjacency), the relations, the algebra dimension, and every
indecomposable with its word and dimension vector.  Then the full hom
table, which for these algebras is all 0s and 1s off the diagonal.
"""

import pathlib
import sys

from treestab import (
    algebra_dimension,
    hom_dim,
    indecomposables,
    load_tree,
    string_word,
    tiling_algebra,
)

FIX = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

name = sys.argv[1] if len(sys.argv) > 1 else "cyc3"
tree = load_tree(str(FIX / (name + ".tree")))

alg = tiling_algebra(tree)
print("quiver on %d vertices (interior edges)" % tree.n)
for a in alg.arrows:
    print("  %s|%s -> %s|%s   (pivot %s)"
          % (a.source + a.target + (a.vertex,)))
for r in alg.relations:
    print("  relation through %s|%s" % r)
print("algebra dimension:", algebra_dimension(tree))
print()

mods = indecomposables(tree)
print("%d indecomposable string modules" % len(mods))
for m in mods:
    print("  dim %s  %s" % (m.dim_vector, string_word(tree, m.segment)))
print()

if mods:
    width = max(len("-".join(m.segment.vertices)) for m in mods)
    print("hom table (rows = source):")
    for m in mods:
        row = " ".join(str(hom_dim(tree, m, k)) for k in mods)
        print("  %-*s  %s" % (width, "-".join(m.segment.vertices), row))
