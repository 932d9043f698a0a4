#!/usr/bin/env python3
# Building distant graphs of projective lines, three ways.
#
# A point of the projective line over a finite ring R is a unimodular
# pair (a, b) up to unit scaling; two points are adjacent ("distant")
# when the pair matrix is invertible.  This walk-through constructs the
# graphs for commutative rings, local rings, and matrix rings, and shows
# that the structural constructions agree with the brute-force oracle.

from ringline import (
    Graph,
    blowup,
    complement,
    disjoint_union,
    local_graph,
    matrix_ring_graph,
    spec_graph,
    to_dot,
    verify_isomorphism,
    zn_crt_map,
    zn_local_decomposition,
    zn_projective_line,
)

# %% The smallest case: over a field F_q every pair of distinct points is
# distant, so the line is a complete graph on q+1 vertices.

for q in (2, 3, 4, 5):
    g = matrix_ring_graph(1, q)
    print(f"P(F_{q}): {g.n} vertices, complete: {g.edge_count() == g.n * (g.n - 1) // 2}")

# %% Z/n, enumerated directly from unimodular pairs.  The degree of every
# vertex equals n itself (the points distant to (1,0) are the (r,1)).

for n in (4, 6, 12):
    g = zn_projective_line(n)
    print(f"P(Z/{n}): {g.n} vertices, {g.regular_degree()}-regular, labels like {g.labels[:3]}")

# %% A local ring contributes a complete multipartite graph: q+1 parts of
# size |J|.  Three constructions give the same graph: a blow-up of
# K_{q+1}, the complement of disjoint complete graphs, and the oracle.

octahedron = local_graph(4, 2)
print("local_graph(4,2) == blowup(K_3, 2):", octahedron == blowup(Graph.complete(3), 2))
print(
    "local_graph(4,2) == complement of 3 disjoint K_2:",
    octahedron == complement(disjoint_union([Graph.complete(2)] * 3)),
)

# %% Direct sums of rings become tensor products of graphs.  The explicit
# Chinese-remainder vertex map realizes the isomorphism.

for n in (6, 12, 30):
    oracle = zn_projective_line(n)
    structural = spec_graph(zn_local_decomposition(n))
    mapping = zn_crt_map(n)
    print(f"P(Z/{n}) ~ tensor of local factors:", verify_isomorphism(oracle, structural, mapping))

# %% Matrix rings: points are m-dimensional subspaces of F_q^{2m} in
# reduced row-echelon form, adjacent when the subspaces meet trivially.

g = matrix_ring_graph(2, 2)
print(f"P(M_2(2)): {g.n} vertices, {g.regular_degree()}-regular, {g.edge_count()} edges")
print("first three vertex labels:", g.labels[:3])

# %% Graphs export to DOT for external tooling.

print(to_dot(matrix_ring_graph(1, 2)))
