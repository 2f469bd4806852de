"""Integer vectors attached to arcs and segments.

Everything lives in Z^n with one coordinate per interior edge, in the
tree's canonical (lexicographic) edge order.  The g-vector of an arc
reads off how the arc turns at the two ends of each interior edge it
uses; the c-vector of a colored arc in a facet is a signed indicator of
the segment between its marked corners.  Per facet the two families are
dual bases, which `pairing_matrix` asserts outright.

The sub-path families C_s and K_s defined here drive both the module
theory (indecomposable submodules and quotients) and the stability
checks.
"""

from __future__ import annotations

import warnings

from .tree_core import ConventionError, Segment, turn


def zero_vector(tree):
    return tuple(0 for _ in range(tree.n))


def add_vectors(u, v):
    return tuple(a + b for a, b in zip(u, v))


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def indicator(tree, edges):
    vec = [0] * tree.n
    for e in edges:
        vec[tree.edge_index[e]] = 1
    return tuple(vec)


def g_vector(tree, arc):
    """Entry per interior edge (x, y) traversed by the arc: +1 when the
    arc turns left at x and right at y, -1 when right at x and left at
    y, 0 when it turns the same way at both ends or avoids the edge.
    Independent of traversal orientation."""
    path = list(arc.path)
    vec = [0] * tree.n
    turns = {path[i]: turn(tree, path, i) for i in range(1, len(path) - 1)}
    for i in range(len(path) - 1):
        e = tuple(sorted((path[i], path[i + 1])))
        if e not in tree.edge_index:
            continue
        t1, t2 = turns[path[i]], turns[path[i + 1]]
        if t1 == "left" and t2 == "right":
            vec[tree.edge_index[e]] = 1
        elif t1 == "right" and t2 == "left":
            vec[tree.edge_index[e]] = -1
    return tuple(vec)


def zigzag(tree, arc):
    """The signed support of the g-vector, as (plus edges, minus edges)."""
    g = g_vector(tree, arc)
    plus = frozenset(e for e, i in tree.edge_index.items() if g[i] == 1)
    minus = frozenset(e for e, i in tree.edge_index.items() if g[i] == -1)
    return plus, minus


def segment_of(facet, arc):
    """The segment joining the two marked corners of a colored arc."""
    if arc.is_boundary:
        raise ValueError("boundary arcs carry no segment")
    return facet.segment[arc]


def c_vector(facet, arc):
    """Signed indicator of segment_of(facet, arc): positive for green
    arcs, negative for red.  Facet-dependent, unlike the g-vector."""
    seg = segment_of(facet, arc)
    sign = 1 if facet.color[arc] == "green" else -1
    vec = [0] * facet.tree.n
    for e in seg.edges():
        vec[facet.tree.edge_index[e]] = sign
    return tuple(vec)


def pairing_matrix(facet):
    """Gram matrix <g(row), c(col)> over the facet's colored arcs.

    Asserted to be the identity; a failure is a convention bug and
    names the offending pair."""
    tree = facet.tree
    colored = facet.colored
    gs = [g_vector(tree, d) for d in colored]
    cs = [c_vector(facet, d) for d in colored]
    matrix = [[dot(g, c) for c in cs] for g in gs]
    for i, drow in enumerate(colored):
        for j, dcol in enumerate(colored):
            want = 1 if i == j else 0
            if matrix[i][j] != want:
                raise ConventionError(
                    "pairing <g(%r), c(%r)> = %d, expected %d"
                    % (drow, dcol, matrix[i][j], want))
    return matrix


def kreweras_theta(facet):
    """Sum of the g-vectors of the facet's green arcs."""
    theta = zero_vector(facet.tree)
    for d in facet.greens():
        theta = add_vectors(theta, g_vector(facet.tree, d))
    return theta


def _subpaths_with_turns(tree, vertices, start_turn, end_turn):
    turns = {vertices[i]: turn(tree, list(vertices), i)
             for i in range(1, len(vertices) - 1)}
    t = len(vertices) - 1
    out = set()
    for i in range(t):
        if i > 0 and turns[vertices[i]] != start_turn:
            continue
        for j in range(i + 1, t + 1):
            if j < t and turns[vertices[j]] != end_turn:
                continue
            out.add(Segment.canonical(vertices[i:j + 1]))
    return out


def submodule_segments(tree, seg):
    """C_s: sub-paths of s (oriented v_0..v_t) that start where s turns
    right and end where s turns left, endpoints of s always allowed.
    Contains s itself; indexes the indecomposable submodules of the
    string module of s.  Orientation of s does not matter; computed for
    both orientations defensively."""
    forward = _subpaths_with_turns(tree, seg.vertices, "right", "left")
    backward = _subpaths_with_turns(tree, tuple(reversed(seg.vertices)),
                                    "right", "left")
    if forward != backward:
        warnings.warn("C_s differs between orientations of %r" % (seg,))
        return forward | backward
    return forward


def quotient_segments(tree, seg):
    """K_s: mirror of C_s with left and right swapped; indexes the
    indecomposable quotients."""
    forward = _subpaths_with_turns(tree, seg.vertices, "left", "right")
    backward = _subpaths_with_turns(tree, tuple(reversed(seg.vertices)),
                                    "left", "right")
    if forward != backward:
        warnings.warn("K_s differs between orientations of %r" % (seg,))
        return forward | backward
    return forward


def zigzag_dominance_check(facet, arc):
    """Counting property of the proof machinery.

    For a red arc whose segment s has at least two edges, in a facet
    with at least one green arc:

      (a) every proper member t of C_s admits a green arc whose zigzag
          meets t and has exactly one more minus-edge than plus-edge
          inside t (the witness may depend on t: it keeps the end of s
          that t keeps);
      (b) no green arc ever has more plus- than minus-edges inside any
          member of C_s.

    (a) is deliberately quantified per sub-segment.  The one-witness-
    for-all-t variant is false in general: a four-edge red segment over
    a degree-5 vertex splits its proper sub-segments between two green
    arcs, one per kept end."""
    tree = facet.tree
    greens = facet.greens()
    if not greens:
        raise ValueError("facet has no green arc")
    if facet.color.get(arc) != "red":
        raise ValueError("arc is not red in this facet")
    seg = facet.segment[arc]
    if len(seg) < 2:
        raise ValueError("segment of the red arc has fewer than two edges")
    cset = submodule_segments(tree, seg)
    proper = [t for t in cset if t != seg]

    def counts(delta, t):
        plus, minus = zigzag(tree, delta)
        edges = t.edge_set()
        return len(plus & edges), len(minus & edges)

    for delta in greens:
        for t in cset:
            p, m = counts(delta, t)
            if m < p:
                return False
    for t in proper:
        for delta in greens:
            p, m = counts(delta, t)
            if p + m > 0 and m == p + 1:
                break
        else:
            return False
    return True
