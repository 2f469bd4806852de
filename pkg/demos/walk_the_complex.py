"""Walk one tree through the whole combinatorial layer.

Usage: python3 walk_the_complex.py [name]   (default a2)
"""

import pathlib
import sys

from treestab import arcs, facets, flip_neighbors, load_tree

FIX = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

name = sys.argv[1] if len(sys.argv) > 1 else "a2"
tree = load_tree(str(FIX / (name + ".tree")))

print("tree %s: %d leaves, %d interior vertices, %d interior edges"
      % (name, len(tree.leaves), len(tree.interior_vertices), tree.n))
print("boundary order:", " ".join(tree.boundary_leaves))
print()

print("%d faces" % len(tree.faces))
for face in tree.faces:
    print("  face %d: gap %s|%s, wall %s"
          % ((face.index,) + face.gap + (" ".join(face.vertices),)))
print()

segs = tree.all_segments
print("%d segments (extreme paths between interior vertices)" % len(segs))
for s in segs:
    print("  %s" % "-".join(s.vertices))
print()

all_arcs = arcs(tree)
bnd = [d for d in all_arcs if d.is_boundary]
print("%d arcs, %d of them boundary" % (len(all_arcs), len(bnd)))

fs = facets(tree)
print("%d facets, each with %d colored arcs"
      % (len(fs), len(tree.interior_vertices) - 1))
for f in fs[:6]:
    tags = ", ".join("%s~%s %s" % (d.leaves + (f.color[d],))
                     for d in f.colored)
    print("  facet %d: %s" % (f.index, tags or "(all boundary)"))
if len(fs) > 6:
    print("  ...")

# the flip graph is (n-1)-regular: drop a colored arc, one other fits
print()
for f in fs[:3]:
    nbrs = flip_neighbors(f, fs)
    print("facet %d flips to %s" % (f.index, sorted(g.index for g in nbrs)))
