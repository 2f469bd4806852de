"""Every noncrossing partition splits the module category in two.

For each partition B: torsion part from the green segments of the
Kreweras complement, torsion-free part from the red segments of B, and
every indecomposable decomposes uniquely across the pair.  Printed as a
table of splittings for one chosen partition.
"""

import pathlib
import sys

from treestab import indecomposables, load_tree, string_word
from treestab.partitions import (
    noncrossing_partitions,
    torsion_decompose,
    torsion_pair,
)

FIX = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

name = sys.argv[1] if len(sys.argv) > 1 else "caterpillar4"
which = int(sys.argv[2]) if len(sys.argv) > 2 else 3
tree = load_tree(str(FIX / (name + ".tree")))

parts = noncrossing_partitions(tree)
part = parts[which % len(parts)]
tors, free = torsion_pair(tree, part)
print("partition %s" % part)
print("  torsion:      %s" % (", ".join(
    "-".join(m.segment.vertices) for m in tors) or "(none)"))
print("  torsion-free: %s" % (", ".join(
    "-".join(m.segment.vertices) for m in free) or "(none)"))
print()

for m in indecomposables(tree):
    t, f = torsion_decompose(tree, part, m)
    def show(x):
        return "+".join("-".join(s.segment.vertices)
                        for s in x.summands) if x else "0"
    print("  %-28s = %s  >->  %s" % (string_word(tree, m.segment), show(t),
                                     show(f)))
print()
print("(each line: module = torsion submodule >-> torsion-free quotient)")
