"""Throw random integer weights at a tree and watch what they cut out.

Whatever the weight, the semistable modules always form one of the
finitely many wide subcategories, and rescaling the weight never moves
it.  Prints the distinct subcategories hit by the sample.
"""

import argparse
import pathlib
import random

from treestab import load_tree
from treestab.semistable import check_semistable_wide, semistable_modules

FIX = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

ap = argparse.ArgumentParser()
ap.add_argument("name", nargs="?", default="cyc3")
ap.add_argument("--samples", type=int, default=100)
ap.add_argument("--seed", type=int, default=0)
ap.add_argument("--bound", type=int, default=10)
args = ap.parse_args()

tree = load_tree(str(FIX / (args.name + ".tree")))

ran, distinct = check_semistable_wide(
    tree, samples=args.samples, seed=args.seed, bound=args.bound)
print("%s: %d random weights in [-%d, %d]^%d hit %d distinct wide "
      "subcategories" % (args.name, ran, args.bound, args.bound,
                         tree.n, distinct))
print()

rng = random.Random(args.seed)
seen = {}
for _ in range(args.samples):
    theta = tuple(rng.randint(-args.bound, args.bound)
                  for _ in range(tree.n))
    key = frozenset(m.segment for m in semistable_modules(tree, theta))
    seen.setdefault(key, theta)

for key, theta in sorted(seen.items(),
                         key=lambda kv: (len(kv[0]), kv[1])):
    names = sorted("-".join(s.vertices) for s in key)
    print("  theta=%-24s {%s}" % (theta, ", ".join(names)))
