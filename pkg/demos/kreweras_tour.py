"""Noncrossing tree partitions and their Kreweras complements.

Lists the lattice, the complement map with its orbit structure, and one
torsion pair read off a partition in the middle of the lattice.
"""

import pathlib
import sys

from treestab import load_tree
from treestab.partitions import (
    kreweras_complement,
    kreweras_orbits,
    ncp_poset,
    noncrossing_partitions,
    torsion_pair,
)

FIX = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

name = sys.argv[1] if len(sys.argv) > 1 else "deg45"
tree = load_tree(str(FIX / (name + ".tree")))

parts = noncrossing_partitions(tree)
print("%d noncrossing partitions of %d interior vertices"
      % (len(parts), len(tree.interior_vertices)))

poset = ncp_poset(tree)
print("poset: %d elements, %d cover relations, lattice=%s"
      % (len(poset), len(poset.covers()), poset.is_lattice()))
print()

print("Kreweras complement: orbit lengths", kreweras_orbits(tree))
for p in parts:
    print("  %s  ->  %s" % (p, kreweras_complement(tree, p)))
print()

# pick the first partition that is neither the finest nor the coarsest
mid = next(p for p in parts if 1 < len(p.blocks) < len(
    tree.interior_vertices))
tors, free = torsion_pair(tree, mid)
print("torsion pair for %s" % mid)
print("  T:", ", ".join("-".join(m.segment.vertices)
                        for m in tors) or "(empty)")
print("  F:", ", ".join("-".join(m.segment.vertices)
                        for m in free) or "(empty)")
