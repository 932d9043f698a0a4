#!/usr/bin/env python3
# Closed-form counting polynomials, checked against the graphs.
#
# The vital statistics of P(M_m(q)) are polynomials in q: the Gaussian
# binomial [2m,m]_q counts points, q^(m^2) is the degree, the |GL_m(q)|
# product is the codegree, and inclusion-exclusion turns these into the
# sizes of common neighbourhoods (capkN).  Every identity is exercised
# numerically against a brute-force graph.

from ringline import (
    RingSpec,
    Local,
    c_extension_poly,
    cap1N_matrix,
    cap2N_matrix,
    cap_k_N_from_extensions,
    cap_n_N_comm,
    comm_clique_count,
    comm_clique_count_vertex_sets,
    count_cliques,
    find_clique,
    gl_order,
    incexc_Wprime,
    matrix_codegree,
    matrix_degree,
    matrix_ring_graph,
    neighborhood_intersection_count,
    qbinom,
    zn_local_decomposition,
    zn_projective_line,
)

# %% The point-count polynomials.

for m in range(4):
    print(f"[{2*m},{m}]_q =", qbinom(2 * m, m))

# %% Degree, codegree, and the capN polynomials for m = 2, evaluated and
# compared with the 35-vertex graph at q = 2.

g = matrix_ring_graph(2, 2)
print("degree:", matrix_degree(2), "-> at q=2:", matrix_degree(2)(2), "==", g.regular_degree())
print("codegree:", matrix_codegree(2), "-> at q=2:", matrix_codegree(2)(2), "==", gl_order(2, 2))
print("cap1N:", cap1N_matrix(2), "-> at q=2:", cap1N_matrix(2)(2),
      "==", neighborhood_intersection_count(g, [0]))
edge = find_clique(g, 2)
print("cap2N:", cap2N_matrix(2), "-> at q=2:", cap2N_matrix(2)(2),
      "==", neighborhood_intersection_count(g, edge))

# %% The 4-clique extension polynomial C_{m,3}, in both printed forms
# (they are asserted equal internally), hits the graph exactly.

print("C_{2,3} =", c_extension_poly(2, 3))
tri = find_clique(g, 3)
print("triangle extensions in P(M_2(2)):", c_extension_poly(2, 3)(2))
print("cap3N at q=2 via inclusion-exclusion:", cap_k_N_from_extensions([35, 16, 6, 2], 3),
      "== oracle:", neighborhood_intersection_count(g, tri))

# %% The weighted inclusion-exclusion machine: zero-capture weights give
# back the order of GL_m(q).

for m in (2, 3):
    for q in (2, 3):
        weights = [q ** (m * (m - i)) for i in range(m + 1)]
        print(f"W'_{m},0 at q={q}:", incexc_Wprime(m, 0, weights, q), "=", gl_order(m, q))

# %% Commutative rings.  The extension counts and capnN sums hold as
# printed; the k-clique product formula needs a matching factor
# (k!)^(s-1) for s summands, which the corrected variant provides.

spec = zn_local_decomposition(6)
g6 = zn_projective_line(6)
counts = count_cliques(g6, 3).as_list()
print("P(Z/6) census:", counts)
print("printed product formula at k=2:", comm_clique_count(spec, 2))
print("corrected vertex-set count at k=2:", comm_clique_count_vertex_sets(spec, 2))
print("cap2N formula:", cap_n_N_comm(spec, 2),
      "== oracle:", neighborhood_intersection_count(g6, find_clique(g6, 2)))

# %% Radical blow-ups only rescale: a ring with |J| = 2 over the same
# quotient doubles every neighbourhood count.

doubled = RingSpec([Local(4, 2)])
print("Z/4 cap1N:", cap_n_N_comm(doubled, 1), "(twice the field value)")
