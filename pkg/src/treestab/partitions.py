"""Noncrossing tree partitions, their Kreweras complement, and the
torsion pairs they label.

A facet of the noncrossing complex marks every corner once, and its
colored arcs carry segments.  Gluing the red segments' endpoints
partitions the interior vertices; same for green.  Both maps are
bijections onto the noncrossing partitions, and green-after-red
inverse is the Kreweras complement.  Red and green segments together
form a spanning tree on the interior vertices, which is what makes the
torsion-pair bookkeeping finite and checkable.
"""

from __future__ import annotations

from weakref import WeakKeyDictionary

from . import gc_vectors, nc_complex, string_modules
from .tree_core import Segment, compose


class TreePartition:
    """Set partition of the interior vertices, canonically ordered."""

    def __init__(self, blocks):
        cleaned = sorted(tuple(sorted(b)) for b in blocks if b)
        seen = set()
        for b in cleaned:
            for v in b:
                if v in seen:
                    raise ValueError("vertex %r in two blocks" % (v,))
                seen.add(v)
        self.blocks = tuple(cleaned)

    def block_of(self, v):
        for b in self.blocks:
            if v in b:
                return b
        raise KeyError(v)

    def __eq__(self, other):
        return isinstance(other, TreePartition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return "/".join("{%s}" % ",".join(b) for b in self.blocks)


def refinement_leq(p, q):
    """Whether p refines q: every block of p sits inside a block of q."""
    return all(any(set(bp) <= set(bq) for bq in q.blocks) for bp in p.blocks)


def _endpoint_partition(tree, segments):
    parent = {v: v for v in tree.interior_vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for s in segments:
        a, b = s.endpoints
        parent[find(a)] = find(b)
    blocks = {}
    for v in tree.interior_vertices:
        blocks.setdefault(find(v), []).append(v)
    return TreePartition(blocks.values())


def block_segments(tree, block):
    """Segments a partition block requires: endpoint pairs inside the
    block whose tree path meets the block only at the ends.  Such a
    pair must be joined by a segment; anything else means the block is
    not realizable and the input was not a noncrossing partition."""
    block = set(block)
    out = set()
    for a in sorted(block):
        for b in sorted(block):
            if b <= a:
                continue
            path = tree.path_between(a, b)
            if any(v in block for v in path[1:-1]):
                continue
            if not tree.is_extreme_path(path):
                raise ValueError(
                    "block %r needs a curve from %r to %r but no segment "
                    "joins them" % (sorted(block), a, b))
            out.add(Segment.canonical(path))
    return out


def partition_segments(tree, partition):
    """Union of block_segments over all blocks."""
    out = set()
    for b in partition.blocks:
        out |= block_segments(tree, b)
    return out


def red_partition(facet):
    """Interior vertices glued along the facet's red segments."""
    tree = facet.tree
    reds = [facet.segment[d] for d in facet.reds()]
    part = _endpoint_partition(tree, reds)
    for s in reds:
        block = set(part.block_of(s.vertices[0]))
        inner = set(s.vertices[1:-1])
        assert not (inner & block), \
            "red segment %r not minimal in its block" % (s,)
    return part


def green_partition(facet):
    """Interior vertices glued along the facet's green segments."""
    tree = facet.tree
    greens = [facet.segment[d] for d in facet.greens()]
    part = _endpoint_partition(tree, greens)
    for s in greens:
        block = set(part.block_of(s.vertices[0]))
        inner = set(s.vertices[1:-1])
        assert not (inner & block), \
            "green segment %r not minimal in its block" % (s,)
    return part


_ncp_cache = WeakKeyDictionary()


def _ncp_table(tree):
    if tree not in _ncp_cache:
        table = []
        for facet in nc_complex.facets(tree):
            table.append((red_partition(facet), green_partition(facet),
                          facet))
        reds = [r for r, _, _ in table]
        assert len(set(reds)) == len(reds), \
            "red partitions repeat across facets"
        _ncp_cache[tree] = table
    return _ncp_cache[tree]


def noncrossing_partitions(tree):
    """All noncrossing partitions, in facet order; one per facet."""
    return [r for r, _, _ in _ncp_table(tree)]


def facet_of_partition(tree, partition):
    for r, _, facet in _ncp_table(tree):
        if r == partition:
            return facet
    raise ValueError("%r is not a noncrossing partition of this tree"
                     % (partition,))


def kreweras_complement(tree, partition):
    """Green partition of the facet whose red partition this is."""
    for r, g, _ in _ncp_table(tree):
        if r == partition:
            return g
    raise ValueError("%r is not a noncrossing partition of this tree"
                     % (partition,))


def kreweras_orbits(tree):
    """Cycle lengths of the Kreweras map on noncrossing partitions.
    Reported, not constrained: the map need not have small order."""
    ncps = noncrossing_partitions(tree)
    index = {p: i for i, p in enumerate(ncps)}
    succ = [index[kreweras_complement(tree, p)] for p in ncps]
    seen = [False] * len(ncps)
    orbits = []
    for i in range(len(ncps)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = succ[j]
            length += 1
        orbits.append(length)
    return sorted(orbits, reverse=True)


# -- red-green trees -----------------------------------------------------


class RedGreenTree:
    """Spanning structure on the interior vertices whose edge set is
    the disjoint union of the partition's red segments and its
    Kreweras complement's green segments.  Always a tree."""

    def __init__(self, tree, partition):
        self.tree = tree
        self.partition = partition
        self.complement = kreweras_complement(tree, partition)
        self.red_segments = sorted(partition_segments(tree, partition),
                                   key=lambda s: s.vertices)
        self.green_segments = sorted(
            partition_segments(tree, self.complement),
            key=lambda s: s.vertices)
        overlap = set(self.red_segments) & set(self.green_segments)
        assert not overlap, "segment on both sides: %r" % (overlap,)
        self.adjacency = {v: [] for v in tree.interior_vertices}
        edges = 0
        for color, segs in (("red", self.red_segments),
                            ("green", self.green_segments)):
            for s in segs:
                a, b = s.endpoints
                self.adjacency[a].append((b, s, color))
                self.adjacency[b].append((a, s, color))
                edges += 1
        vs = tree.interior_vertices
        assert edges == len(vs) - 1, \
            "red and green segments miss the tree count"
        # connectivity makes it a tree
        seen = {vs[0]}
        stack = [vs[0]]
        while stack:
            v = stack.pop()
            for u, _, _ in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        assert len(seen) == len(vs), "red-green graph is disconnected"

    def tree_path(self, v, u):
        """Segments along the unique path from v to u, each tagged with
        its color."""
        prev = {v: None}
        stack = [v]
        while stack:
            w = stack.pop()
            if w == u:
                break
            for x, s, color in self.adjacency[w]:
                if x not in prev:
                    prev[x] = (w, s, color)
                    stack.append(x)
        if u not in prev:
            raise KeyError("no path from %r to %r" % (v, u))
        out = []
        w = u
        while prev[w] is not None:
            w2, s, color = prev[w]
            out.append((s, color))
            w = w2
        return list(reversed(out))


def redgreen_tree(tree, partition):
    return RedGreenTree(tree, partition)


# -- biclosed sets and closure -------------------------------------------


def segment_closure(tree, segments):
    """Smallest composition-closed superset."""
    closed = set(segments)
    grew = True
    while grew:
        grew = False
        pairs = [(s, t) for s in closed for t in closed if s != t]
        for s, t in pairs:
            c = compose(tree, s, t)
            if c is not None and c not in closed:
                closed.add(c)
                grew = True
    return closed


def is_closed(tree, segments):
    segments = set(segments)
    for s in segments:
        for t in segments:
            if s == t:
                continue
            c = compose(tree, s, t)
            if c is not None and c not in segments:
                return False
    return True


def is_biclosed(tree, segments):
    """Closed under composition, with composition-closed complement."""
    segments = set(segments)
    rest = set(tree.all_segments) - segments
    return is_closed(tree, segments) and is_closed(tree, rest)


def join_biclosed(tree, b1, b2):
    """Join in the biclosed-set order: closure of the union.  The
    result is checked to be biclosed again."""
    joined = segment_closure(tree, set(b1) | set(b2))
    assert is_biclosed(tree, joined), "join left the biclosed family"
    return joined


# -- torsion pairs -------------------------------------------------------


def wide_from_partition(tree, partition):
    """Module set of the composition closure of the partition's
    segments; the subcategory the main theorem pairs with a Kreweras
    stability condition."""
    segs = segment_closure(tree, partition_segments(tree, partition))
    return {string_modules.string_module(tree, s) for s in segs}


def torsion_pair(tree, partition):
    """(T, F) for a noncrossing partition: T joins the quotient-closed
    sets of the complement's green segments, F joins the sub-closed
    sets of the red segments.  Hom(T, F) vanishes and the pair covers
    every simple."""
    complement = kreweras_complement(tree, partition)
    tsegs = set()
    for s in partition_segments(tree, complement):
        tsegs |= gc_vectors.quotient_segments(tree, s)
    if tsegs:
        tsegs = segment_closure(tree, tsegs)
    fsegs = set()
    for s in partition_segments(tree, partition):
        fsegs |= gc_vectors.submodule_segments(tree, s)
    if fsegs:
        fsegs = segment_closure(tree, fsegs)
    T = {string_modules.string_module(tree, s) for s in tsegs}
    F = {string_modules.string_module(tree, s) for s in fsegs}
    for X in T:
        for Y in F:
            assert string_modules.hom_dim(tree, X, Y) == 0, \
                "torsion class maps onto its own free class: %r -> %r" % (X, Y)
    simples = {s for s in tree.all_segments if len(s) == 1}
    covered = {m.segment for m in T} | {m.segment for m in F}
    assert simples <= covered, "simple module outside both classes"
    return T, F


def torsion_decompose(tree, partition, module):
    """Canonical sequence of an indecomposable under the partition's
    torsion pair: the submodule in T with quotient in F.  Exactly one
    submodule qualifies."""
    T, F = torsion_pair(tree, partition)
    tsegs = {m.segment for m in T}
    fsegs = {m.segment for m in F}
    hits = []
    for sub in string_modules.all_submodules(tree, module):
        if any(m.segment not in tsegs for m in sub):
            continue
        quot = string_modules.quotient_by(tree, module, sub)
        if any(m.segment not in fsegs for m in quot):
            continue
        hits.append((sub, quot))
    assert len(hits) == 1, \
        "torsion decomposition of %r not unique: %r" % (module, hits)
    sub, quot = hits[0]
    total = tuple(a + b for a, b in zip(sub.dim_vector(tree),
                                        quot.dim_vector(tree)))
    assert total == module.dim_vector, "dimension mismatch in decomposition"
    return hits[0]


# -- posets --------------------------------------------------------------


class Poset:
    """Finite poset with explicit relation matrix."""

    def __init__(self, elements, leq):
        self.elements = list(elements)
        k = len(self.elements)
        self.matrix = [[bool(leq(self.elements[i], self.elements[j]))
                        for j in range(k)] for i in range(k)]
        for i in range(k):
            assert self.matrix[i][i], "order must be reflexive"
            for j in range(k):
                if i != j and self.matrix[i][j] and self.matrix[j][i]:
                    raise ValueError("elements %d and %d are order-equal"
                                     % (i, j))

    def __len__(self):
        return len(self.elements)

    def leq(self, i, j):
        return self.matrix[i][j]

    def covers(self):
        """Pairs (i, j) with i covered by j."""
        k = len(self.elements)
        out = []
        for i in range(k):
            for j in range(k):
                if i == j or not self.matrix[i][j]:
                    continue
                if any(m != i and m != j and self.matrix[i][m]
                       and self.matrix[m][j] for m in range(k)):
                    continue
                out.append((i, j))
        return out

    def _bound_ids(self, i, j, upper):
        k = len(self.elements)
        if upper:
            bounds = [m for m in range(k)
                      if self.matrix[i][m] and self.matrix[j][m]]
            least = [m for m in bounds
                     if all(self.matrix[m][x] for x in bounds)]
        else:
            bounds = [m for m in range(k)
                      if self.matrix[m][i] and self.matrix[m][j]]
            least = [m for m in bounds
                     if all(self.matrix[x][m] for x in bounds)]
        return least

    def is_lattice(self):
        k = len(self.elements)
        for i in range(k):
            for j in range(i + 1, k):
                if len(self._bound_ids(i, j, True)) != 1:
                    return False
                if len(self._bound_ids(i, j, False)) != 1:
                    return False
        return True

    def isomorphic_by(self, other, mapping):
        """Whether the index map i -> mapping[i] is an order
        isomorphism onto `other`."""
        k = len(self.elements)
        if len(other.elements) != k or sorted(mapping) != list(range(k)):
            return False
        for i in range(k):
            for j in range(k):
                if self.matrix[i][j] != other.matrix[mapping[i]][mapping[j]]:
                    return False
        return True


def ncp_poset(tree):
    """Noncrossing partitions under refinement."""
    return Poset(noncrossing_partitions(tree), refinement_leq)
