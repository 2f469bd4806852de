"""g-vectors against c-vectors: the pairing identity, facet by facet.

Every facet gives two bases of Z^n indexed by its colored arcs, and the
pairing matrix <g_i, c_j> had better be the identity.  Checked here the
slow visible way, printing the matrices.
"""

import pathlib
import sys

from treestab import c_vector, facets, g_vector, kreweras_theta, load_tree
from treestab.gc_vectors import pairing_matrix, segment_of

FIX = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

name = sys.argv[1] if len(sys.argv) > 1 else "a2"
tree = load_tree(str(FIX / (name + ".tree")))

for i, e in enumerate(tree.interior_edges):
    print("edge %d: %s-%s" % (i, e[0], e[1]))
print()

bad = 0
for f in facets(tree):
    print("facet %d, theta = %s" % (f.index, kreweras_theta(f)))
    for d in f.colored:
        seg = segment_of(f, d)
        print("  %-5s %s~%s  g=%s  c=%s"
              % (f.color[d], d.leaves[0], d.leaves[1],
                 g_vector(tree, d), c_vector(f, d)))
    m = pairing_matrix(f)
    ok = all(m[i][j] == (1 if i == j else 0)
             for i in range(len(m)) for j in range(len(m)))
    print("  pairing:", m, "identity" if ok else "NOT IDENTITY")
    bad += not ok

print()
print("%d facets checked, %d pairing failures" % (len(facets(tree)), bad))
assert bad == 0
