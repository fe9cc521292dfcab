"""
Verifying a labeling and reflecting it
======================================

A total labeling of a graph with p vertices and q edges assigns the
numbers 1 .. p+q, one per vertex and edge, with no repeats.  It is edge
magic when every edge makes the same sum with its two endpoints, and
that common sum is called the valence.
"""

# the 4-cycle: vertices 1..4, edges around the ring
from edgemagic import mk_cycle, valence_of, is_super_edge_magic, TotalLabeling

cycle = mk_cycle(4)
print("graph:", cycle.p, "vertices,", cycle.q, "edges")

# one labeling per position: vertex labels first, then edge labels in
# edge order
f = TotalLabeling((1, 6, 2, 3), (5, 4, 7, 8))
print("valence of f:", valence_of(cycle, f))

# a labeling that is not magic answers None
g = TotalLabeling((1, 2, 3, 4), (5, 6, 7, 8))
print("valence of g:", valence_of(cycle, g))

# super edge magic asks for the vertex labels to be exactly 1..p; f uses
# the label 6 on a vertex, so it fails the stronger test
print("f super:", is_super_edge_magic(cycle, f))

# every magic labeling has a mirror image: replace each label x by
# p+q+1-x.  The mirror is again magic and its valence reflects through
# the midpoint of the label range
from edgemagic import complement

fbar = complement(cycle, f)
print("mirror vertex labels:", fbar.vertex_labels)
print("mirror valence:", valence_of(cycle, fbar), "=", 3 * (cycle.p + cycle.q + 1), "-", 12)

# a vertex labeling with consecutive endpoint sums extends uniquely to a
# super edge magic labeling; the path on three vertices shows it
from edgemagic import Graph, extend_vertex_labeling, induced_sums

path = Graph(3, ((1, 2), (2, 3)))
print("endpoint sums of (1, 3, 2):", induced_sums(path, (1, 3, 2)))
h = extend_vertex_labeling(path, (1, 3, 2))
print("extension:", h.vertex_labels, h.edge_labels, "valence", is_super_edge_magic(path, h))
