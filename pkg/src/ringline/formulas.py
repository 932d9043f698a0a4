"""Closed-form counting expressions, exact in the indeterminate q.

Everything here is arbitrary-precision: polynomials are IntPoly, values
are Python ints.  The Gaussian binomials are built by the q-Pascal
recurrence, never by rational division.
"""

from __future__ import annotations

import functools
from math import comb, factorial
from typing import Sequence

from .linalg import gl_order
from .polynomials import IntPoly, poly_product
from .rings import Local, MatrixRing, RingSpec


@functools.lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> IntPoly:
    """Gaussian binomial [n, k]_q: the subspace-counting polynomial."""
    if k < 0 or k > n:
        raise ValueError(f"k={k} out of range for n={n}")
    if k == 0 or k == n:
        return IntPoly.one()
    return qbinom(n - 1, k - 1) + IntPoly.monomial(k) * qbinom(n - 1, k)


def _one_minus_q_to(t: int) -> IntPoly:
    return IntPoly.one() - IntPoly.monomial(t)


# ---------------------------------------------------------------------------
# commutative specs
# ---------------------------------------------------------------------------


def _local_qs(spec: RingSpec) -> list[int]:
    if not spec.is_commutative():
        raise ValueError("spec has matrix-ring summands; commutative formulas do not apply")
    return [s.q for s in spec.summands if isinstance(s, Local)]


def comm_clique_count(spec: RingSpec, k: int) -> int:
    """|J|^k * prod_i C(q_i+1, k), the printed product formula.

    This multiplies per-summand clique counts.  For a single local
    summand it is the number of k-vertex cliques of the distant graph;
    for s > 1 summands the true vertex-set count of the tensor graph is
    (k!)^(s-1) times larger, because the per-factor cliques can be
    matched up in k! ways (see comm_clique_count_vertex_sets).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    qs = _local_qs(spec)
    out = spec.radical_order**k
    for q in qs:
        out *= comb(q + 1, k)
    return out


def comm_clique_count_vertex_sets(spec: RingSpec, k: int) -> int:
    """Exact number of k-vertex cliques of the distant graph:
    |J|^k * (k!)^(s-1) * prod_i C(q_i+1, k) for s local summands."""
    qs = _local_qs(spec)
    scale = factorial(k) ** max(0, len(qs) - 1)
    return scale * comm_clique_count(spec, k)


def comm_extension_count(spec: RingSpec, k: int) -> int:
    """|J| * prod_i (q_i + 1 - k): extensions of any k-clique to a
    (k+1)-clique.  Meaningful whenever a k-clique exists."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = spec.radical_order
    for q in _local_qs(spec):
        out *= q + 1 - k
    return out


def comm_max_clique(spec: RingSpec) -> int:
    qs = _local_qs(spec)
    if not qs:
        raise ValueError("trivial ring: a clique of every order exists")
    return min(qs) + 1


def general_max_clique(spec: RingSpec) -> int:
    """min over summands of q^m + 1 (local summands count as m = 1)."""
    tops = []
    for s in spec.summands:
        if isinstance(s, Local):
            tops.append(s.q + 1)
        elif s.m >= 1:
            tops.append(s.q**s.m + 1)
    if not tops:
        raise ValueError("trivial ring: a clique of every order exists")
    return min(tops)


def comm_clique_exists(spec: RingSpec, k: int) -> bool:
    return k <= comm_max_clique(spec)


def cap_n_N_comm(spec: RingSpec, n: int) -> int:
    """|J| * sum_k (-1)^k C(n,k) prod_i (q_i+1-k): size of the common
    neighbourhood (non-distant sets) of n mutually distant points.

    The value is about an actual configuration only when an n-clique
    exists (comm_clique_exists); the alternating sum itself is always
    defined."""
    if n < 0:
        raise ValueError("n must be >= 0")
    qs = _local_qs(spec)
    total = 0
    for k in range(n + 1):
        term = comb(n, k)
        for q in qs:
            term *= q + 1 - k
        total += -term if k % 2 else term
    return spec.radical_order * total


# ---------------------------------------------------------------------------
# matrix rings
# ---------------------------------------------------------------------------


def matrix_point_count(m: int) -> IntPoly:
    """[2m, m]_q: number of points of the m x m matrix-ring line."""
    return qbinom(2 * m, m)


def matrix_degree(m: int) -> IntPoly:
    """q^(m^2): neighbours of a point (the ring order)."""
    return IntPoly.monomial(m * m)


def matrix_codegree(m: int) -> IntPoly:
    """prod_{k<m} (q^m - q^k): common neighbours of an edge (= |GL_m|)."""
    return poly_product(IntPoly.monomial(m) - IntPoly.monomial(k) for k in range(m))


def cap1N_matrix(m: int) -> IntPoly:
    return matrix_point_count(m) - matrix_degree(m)


def cap2N_matrix(m: int) -> IntPoly:
    return matrix_point_count(m) - 2 * matrix_degree(m) + matrix_codegree(m)


def _semisimple_parts(spec: RingSpec) -> list[tuple[int, int]]:
    parts = []
    for s in spec.summands:
        if isinstance(s, MatrixRing):
            parts.append((s.m, s.q))
        elif s.J_order == 1:
            parts.append((1, s.q))
        else:
            raise ValueError(
                "spec is not semisimple; reduce by the radical and rescale with radical_scale"
            )
    return parts


def cap1N_product(spec: RingSpec) -> int:
    """Points minus degree for a sum of matrix rings, radical-scaled."""
    parts = _semisimple_parts(spec)
    points = 1
    degree = 1
    for m, q in parts:
        points *= matrix_point_count(m)(q)
        degree *= q ** (m * m)
    return radical_scale(points - degree, spec.radical_multiplier)


def cap2N_product(spec: RingSpec) -> int:
    """Inclusion-exclusion over point count, degree and codegree products."""
    parts = _semisimple_parts(spec)
    points = 1
    degree = 1
    codegree = 1
    for m, q in parts:
        points *= matrix_point_count(m)(q)
        degree *= q ** (m * m)
        codegree *= gl_order(m, q)
    return radical_scale(points - 2 * degree + codegree, spec.radical_multiplier)


def incexc_Wprime(m: int, k: int, W: Sequence[int], q: int) -> int:
    """Alternating q-weighted sum turning capture counts into exact counts.

    W[j] is the number of elements capturing a fixed j-dimensional
    subspace of an m-dimensional space; the result is the number
    capturing a k-subspace and nothing larger:
    sum_i (-1)^i [m-k, i]_q q^(i(i-1)/2) W[k+i].
    """
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    if len(W) < m + 1:
        raise ValueError(f"W must supply dimensions 0..{m}")
    total = 0
    for i in range(m - k + 1):
        term = qbinom(m - k, i)(q) * q ** (i * (i - 1) // 2) * W[k + i]
        total += -term if i % 2 else term
    return total


def c_extension_poly(m: int, k: int) -> IntPoly:
    """C_{m,k}(q): ways to extend a k-clique of the matrix-ring line,
    as a polynomial in q.  Closed forms exist only for k <= 3:

      k=0  [2m, m]_q          (points)
      k=1  q^(m^2)            (degree)
      k=2  prod (q^m - q^k)   (codegree)
      k=3  (-1)^m q^(m(m-1)/2) sum_i prod_{j<=m-i-1} (1 - q^(m-j))

    For k > 3 the cliques split into classes with different extension
    counts, so no single polynomial exists; use extension_profile.
    The k=3 sum is cross-checked against its nested product form.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > 3:
        raise ValueError("no closed formula for k > 3; use extension_profile")
    if k == 0:
        return matrix_point_count(m)
    if k == 1:
        return matrix_degree(m)
    if k == 2:
        return matrix_codegree(m)
    total = IntPoly.zero()
    for i in range(m + 1):
        total = total + poly_product(_one_minus_q_to(m - j) for j in range(m - i))
    nested = IntPoly.one()
    for t in range(1, m + 1):
        nested = _one_minus_q_to(t) * nested + 1
    if total != nested:
        raise AssertionError("sum and nested forms of the 4-clique count disagree")
    sign = -1 if m % 2 else 1
    return sign * IntPoly.monomial(m * (m - 1) // 2) * total


def cap_k_N_from_extensions(extension_values: Sequence[int], k: int) -> int:
    """sum_i (-1)^i C(k,i) * extension_values[i].

    extension_values[i] is the number of common neighbours of an
    i-clique.  The summand is indexed by i: the printed form of this
    identity shows C_{m,k} inside the sum, but the inclusion-exclusion
    it abbreviates uses the i-indexed counts, exactly as in the
    commutative case.
    """
    if len(extension_values) < k + 1:
        raise ValueError(f"need extension counts for i = 0..{k}")
    total = 0
    for i in range(k + 1):
        term = comb(k, i) * extension_values[i]
        total += -term if i % 2 else term
    return total


def radical_scale(value: int, J_order: int) -> int:
    """Rescale a reduced-ring count by the radical order |J|."""
    if J_order < 1:
        raise ValueError("radical order must be >= 1")
    return value * J_order
