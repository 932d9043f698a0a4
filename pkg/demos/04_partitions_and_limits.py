#!/usr/bin/env python3
# Partition parity counts behind the polynomial coefficients, and the
# q -> 1 limit.
#
# The top coefficients of the clique-extension polynomials C_{m,k}(q)
# are, in disguise, signed counts of two-colored distinct partitions.
# This demo expands the series, enumerates the partitions, and checks
# the identities both ways, then looks at the combinatorial shadow of
# the whole theory at q = 1.

from math import comb

from ringline import (
    TwoDistinctPartition,
    coeffs_theorem_check,
    dist2p_bijection,
    distcoeff_check,
    enumerate_D2,
    enumerate_partitions,
    f1_graph,
    lacunary_identity_check,
    lacunary_sum,
    oeis_prefix,
    parity_count,
    qbinom,
    qseries_product,
)

# %% The four expansions of prod (1 - q^i)^(k-1) driving the coefficient
# tables; generated, never hard-coded.

for tag in ("A000041", "A000007", "A010815", "A002107"):
    print(tag, oeis_prefix(tag))

# %% Two-colored distinct partitions.  D2(h, k) fixes k red rows; its
# signed count is a coefficient of the k-clique extension polynomial.

for h, k in [(4, 1), (4, 2), (6, 2)]:
    family = enumerate_D2(h, k)
    print(f"D2({h},{k}): {len(family)} partitions, parity count {parity_count(family)}")

# %% The cell-removal bijection: strip one cell from every red row.

x = TwoDistinctPartition(red=(3, 1), white=(2,))
print("remove a cell from each red row:", x, "->", dist2p_bijection(x))

# %% The coefficient identities, machine-checked over a grid.

print("series/polynomial identity, m <= 5, k <= 3:",
      all(coeffs_theorem_check(m, k) for m in range(6) for k in range(4)))
print("parity-count identity, h <= m <= 6:",
      all(distcoeff_check(m, k, h) for m in range(7) for k in range(m + 1) for h in range(m + 1)))

# %% Partition numbers from the inverse product, against enumeration.

print("p(h) for h <= 10:", qseries_product(-1, 10))
print("by enumeration:  ", [len(enumerate_partitions(h)) for h in range(11)])

# %% Alternating lacunary binomial sums vanish mod p; this is what makes
# every cap5N a multiple of 30.

print("sum over C(4, 3j+1):", lacunary_sum(4, 3, 1), "= 0 mod 3")
print("identity holds to n, p <= 13:", lacunary_identity_check(13, 13))

# %% At q = 1 the line over the m x m "matrix ring" degenerates to a
# perfect matching on C(2m, m) vertices, the limit of the q-binomial.

for m in range(1, 6):
    g = f1_graph(m)
    print(f"m={m}: {g.n} vertices (C({2*m},{m}) = {comb(2*m, m)}),",
          f"1-regular: {g.regular_degree() == 1},",
          f"[2m,m]_q at q=1: {qbinom(2*m, m)(1)}")
