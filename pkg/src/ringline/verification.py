"""Acceptance-criterion runners.

Each criterion is a function returning (ok, detail); run_criterion wraps
it with wall-clock timing and enforces the stated runtime limit where
one exists.  cmd_verify and the test suite both drive these, so the
pass/fail lines printed by either come from the same code.

Criteria 6 and 7 check the printed product-formula claims verbatim.
Those claims are provably wrong for multi-summand rings (vertex-set
clique counts of a tensor product carry a k! matching factor per extra
factor), so the two runners report exactly which sub-checks fail and
which corrected forms hold; see the package README.
"""

from __future__ import annotations

import functools
import os
import time
from dataclasses import dataclass
from itertools import combinations_with_replacement, product as iproduct
from math import comb, factorial

from .fields import gf_of
from .formulas import (
    c_extension_poly,
    cap1N_matrix,
    cap2N_matrix,
    cap_n_N_comm,
    comm_clique_count,
    comm_clique_count_vertex_sets,
    comm_extension_count,
    comm_max_clique,
    qbinom,
)
from .graphs import (
    Graph,
    count_cliques,
    extension_count,
    extension_profile,
    find_clique,
    max_clique_order,
    neighborhood_intersection_count,
    tensor_product,
    verify_isomorphism,
)
from .identities import capN_divisibility_check, lacunary_identity_check
from .linalg import MatrixGF, gl_order, identity, mat_det, mat_sub
from .partitions import (
    coeffs_theorem_check,
    distcoeff_check,
    dist2p_bijection,
    enumerate_D2,
)
from .rings import (
    f1_graph,
    local_graph,
    matrix_ring_graph,
    point_from_pair,
    spec_graph,
    spread_clique,
    zn_crt_map,
    zn_local_decomposition,
    zn_projective_line,
)
from . import fixtures
from . import tables
from .formulas import incexc_Wprime

COMMUTATIVE_ORDERS = [4, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24, 25, 27, 30, 32]

TIME_LIMITS = {1: 10.0, 2: 30.0, 5: 120.0, 6: 60.0, 9: 30.0, 11: 30.0}


@dataclass
class CriterionResult:
    number: int
    name: str
    ok: bool
    detail: str
    elapsed: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} criterion {self.number} ({self.name}) [{self.elapsed:.2f}s]: {self.detail}"


@functools.lru_cache(maxsize=None)
def _mrg(m: int, q: int) -> Graph:
    return matrix_ring_graph(m, q)


@functools.lru_cache(maxsize=None)
def _oracle(n: int) -> Graph:
    return zn_projective_line(n)


def _criterion_1() -> tuple[bool, str]:
    pairs = [(1, 2), (1, 3), (1, 4), (1, 5), (1, 7), (2, 2), (2, 3)]
    seen = {}
    for m, q in pairs:
        got = _mrg(m, q).n
        expect = qbinom(2 * m, m)(q)
        if got != expect:
            return False, f"P(M_{m}({q})) has {got} points, polynomial says {expect}"
        seen[(m, q)] = got
    if seen[(2, 2)] != 35 or seen[(2, 3)] != 130:
        return False, f"fixed values off: {seen[(2, 2)]}, {seen[(2, 3)]}"
    return True, f"vertex counts match [2m,m]_q on {len(pairs)} cases (35 and 130 included)"


def _criterion_2() -> tuple[bool, str]:
    for q in (2, 3):
        g = _mrg(2, q)
        want_deg = q**4
        if g.regular_degree() != want_deg:
            return False, f"q={q}: degrees {sorted(set(g.degrees()))} != {want_deg}"
        want_codeg = gl_order(2, q)
        for u, v in g.edges():
            if (g.adj[u] & g.adj[v]).bit_count() != want_codeg:
                return False, f"q={q}: edge ({u},{v}) codegree != {want_codeg}"
    return True, "degree q^4 and codegree |GL_2(q)| hold on every vertex/edge, q in {2,3}"


def _criterion_3() -> tuple[bool, str]:
    for q in (2, 3):
        g = _mrg(2, q)
        want1 = cap1N_matrix(2)(q)
        want2 = cap2N_matrix(2)(q)
        for v in range(g.n):
            if neighborhood_intersection_count(g, [v]) != want1:
                return False, f"q={q}: cap1N at vertex {v} != {want1}"
        for u, v in g.edges():
            if neighborhood_intersection_count(g, [u, v]) != want2:
                return False, f"q={q}: cap2N at edge ({u},{v}) != {want2}"
    return True, "cap1N=q^3+2q^2+q+1 and cap2N=q^2+2q+1 verified vertexwise/edgewise, q in {2,3}"


def _standard_triangle(m: int, q: int) -> list[str]:
    F = gf_of(q)
    eye = identity(F, m)
    zero = MatrixGF(F, tuple((0,) * m for _ in range(m)))
    return [
        point_from_pair(eye, zero).label,
        point_from_pair(zero, eye).label,
        point_from_pair(eye, eye).label,
    ]


def _criterion_4() -> tuple[bool, str]:
    values = {}
    for q in (2, 3):
        g = _mrg(2, q)
        tri = [g.index_of(lbl) for lbl in _standard_triangle(2, q)]
        got = extension_count(g, tri)
        want = c_extension_poly(2, 3)(q)
        if got != want:
            return False, f"q={q}: triangle extension {got} != C_23({q}) = {want}"
        # independent oracle: matrices with no eigenvalue 0 or 1
        F = gf_of(q)
        m_all = 0
        good = 0
        for entries in iproduct(range(q), repeat=4):
            mat = MatrixGF(F, (entries[0:2], entries[2:4]))
            m_all += 1
            if mat_det(mat) != 0 and mat_det(mat_sub(mat, identity(F, 2))) != 0:
                good += 1
        if good != got:
            return False, f"q={q}: eigenvalue oracle over {m_all} matrices gives {good} != {got}"
        values[q] = got
    if values != {2: 2, 3: 27}:
        return False, f"values {values} != {{2: 2, 3: 27}}"
    return True, "triangle extensions equal C_23(q) (2 and 27), confirmed by the eigenvalue oracle"


def _criterion_5() -> tuple[bool, str]:
    for q in (2, 3):
        got = max_clique_order(_mrg(2, q))
        if got != q * q + 1:
            return False, f"max clique of P(M_2({q})) is {got}, not {q * q + 1}"
    for m, q in [(2, 2), (2, 3), (2, 5), (3, 2)]:
        pts = spread_clique(m, q)  # verifies pairwise distantness internally
        if len(pts) != q**m + 1:
            return False, f"spread clique ({m},{q}) has {len(pts)} points"
    return True, "max cliques q^2+1 by search; spread cliques verified at (2,2),(2,3),(2,5),(3,2)"


def _criterion_6() -> tuple[bool, str]:
    printed_failures: list[str] = []
    corrected_ok = True
    for n in COMMUTATIVE_ORDERS:
        g = _oracle(n)
        spec = zn_local_decomposition(n)
        h = spec_graph(spec)
        if not verify_isomorphism(g, h, zn_crt_map(n)):
            return False, f"n={n}: CRT map is not an isomorphism"
        maxc = comm_max_clique(spec)
        if max_clique_order(g) != maxc:
            return False, f"n={n}: max clique search disagrees with min(q_i)+1"
        census = count_cliques(g, maxc + 1)
        for k in range(maxc + 2):
            got = census.counts[k]
            if got != comm_clique_count(spec, k):
                printed_failures.append(
                    f"n={n},k={k}: census {got} != printed formula {comm_clique_count(spec, k)}"
                )
            if got != comm_clique_count_vertex_sets(spec, k):
                corrected_ok = False
        for k in range(maxc + 1):
            prof = extension_profile(g, k)
            want = comm_extension_count(spec, k)
            if set(prof) != {want}:
                return False, f"n={n},k={k}: extension profile {prof} not uniformly {want}"
        for nn in range(1, maxc + 1):
            clique = find_clique(g, nn)
            got = neighborhood_intersection_count(g, clique)
            if got != cap_n_N_comm(spec, nn):
                return False, f"n={n}: cap{nn}N oracle {got} != formula"
    base = (
        "CRT isomorphisms, uniform extension counts, capnN values and max-clique "
        f"orders all verified on {len(COMMUTATIVE_ORDERS)} rings"
    )
    if printed_failures:
        return False, (
            base
            + f"; printed k-clique product formula fails {len(printed_failures)} times "
            + f"(first: {printed_failures[0]}); corrected (k!)^(s-1) form matches everywhere: "
            + str(corrected_ok)
        )
    return True, base + "; k-clique counts match"


def _criterion_7() -> tuple[bool, str]:
    factors = {
        "K3": Graph.complete(3),
        "K4": Graph.complete(4),
        "octahedron": local_graph(4, 2),
        "P(M_2(2))": _mrg(2, 2),
    }
    counts = {name: count_cliques(g, 6).counts for name, g in factors.items()}
    mismatches: list[str] = []
    scaled_ok = True
    for (na, a), (nb, b) in combinations_with_replacement(factors.items(), 2):
        got = count_cliques(tensor_product(a, b), 6, node_budget=10_000_000).counts
        for k in range(7):
            plain = counts[na][k] * counts[nb][k]
            if got[k] != plain:
                mismatches.append(f"{na}x{nb},k={k}: {got[k]} != {plain}")
            if got[k] != factorial(k) * plain:
                scaled_ok = False
    if mismatches:
        return False, (
            f"plain product formula fails {len(mismatches)} times over 10 factor pairs "
            f"(first: {mismatches[0]}); k!-scaled law N_k(AxB) = k! N_k(A) N_k(B) holds "
            f"everywhere: {scaled_ok}"
        )
    return True, "census of every tensor pair equals the product of factor censuses"


def _criterion_8() -> tuple[bool, str]:
    for m in range(5):
        for q in (2, 3, 4, 5):
            weights = [q ** (m * (m - i)) for i in range(m + 1)]
            got = incexc_Wprime(m, 0, weights, q)
            if got != gl_order(m, q):
                return False, f"m={m},q={q}: {got} != |GL| = {gl_order(m, q)}"
    return True, "zero-capture weights reproduce |GL_m(q)| for m <= 4, q in {2,3,4,5}"


_C_TABLE = """extension-count coefficients
q^m2  q^m2-1  q^m2-2  q^m2-3  q^m2-4
C[m,0]: 1 1 2 3 5
C[m,1]: 1 0 0 0 0
C[m,2]: 1 -1 -1 0 0
C[m,3]: 1 -2 -1 2 1"""

_CAPKN_TABLE = """capkN coefficients
q^m2  q^m2-1  q^m2-2  q^m2-3  q^m2-4
cap1N: 0 1 2 3 5
cap2N: 0 0 1 3 5
cap3N: 0 0 0 1 4"""


def _criterion_9() -> tuple[bool, str]:
    for m in range(6):
        for k in range(4):
            if not coeffs_theorem_check(m, k):
                return False, f"coefficient identity fails at m={m}, k={k}"
    for m in range(7):
        for k in range(m + 1):
            for h in range(m + 1):
                if not distcoeff_check(m, k, h):
                    return False, f"parity-count identity fails at m={m}, k={k}, h={h}"
    for h in range(15):
        for k in range(7):
            src = enumerate_D2(h, k)
            image = [dist2p_bijection(x) for x in src]
            if len(set(image)) != len(image):
                return False, f"cell-removal map not injective on D2({h},{k})"
            if k >= 1 and h >= k:
                target = set(enumerate_D2(h - k, k)) | set(enumerate_D2(h - k, k - 1))
                if set(image) != target:
                    return False, f"cell-removal map not onto the union at h={h}, k={k}"
            elif k >= 1 and src:
                return False, f"D2({h},{k}) should be empty when h < k"
    if tables.c_coefficient_table_text() != _C_TABLE:
        return False, "extension-count coefficient table is not byte-identical"
    if tables.capkN_coefficient_table_text() != _CAPKN_TABLE:
        return False, "capkN coefficient table is not byte-identical"
    return True, (
        "coefficient identities (m <= 5), parity-count identities (m <= 6), "
        "cell-removal bijections (h <= 14) and both coefficient tables check out"
    )


def _criterion_10() -> tuple[bool, str]:
    if not lacunary_identity_check(13, 13):
        return False, "lacunary binomial identity fails below (13, 13)"
    for n in COMMUTATIVE_ORDERS:
        spec = zn_local_decomposition(n)
        for nn in range(1, 8):
            if not capN_divisibility_check(spec, nn):
                return False, f"divisibility fails for Z/{n}, n={nn}"
        if cap_n_N_comm(spec, 5) % 30:
            return False, f"cap5N not a multiple of 30 for Z/{n}"
    return True, "lacunary identity to (13,13); p | capnN for n <= 7 and cap5N = 0 mod 30 on all rings"


def _criterion_11() -> tuple[bool, str]:
    b = fixtures.verify_appendix_B()
    if b["class_sizes"] != (4, 4, 1) or b["extension_count_via_C"] != 8:
        return False, f"triangle-extension fixture report off: {b}"
    c = fixtures.verify_appendix_C()
    if c["pairwise_checks"] != 190 or c["extension_candidates"] != 0:
        return False, f"inextensible-clique fixture report off: {c}"
    return True, (
        "classes (4,4,1) with extension counts {C:8, A/B:4} and two maximal 8-cliques; "
        "20-set pairwise distant 190/190 and extended by 0 of 480 candidates"
    )


def _criterion_12() -> tuple[bool, str]:
    for m in range(1, 6):
        g = f1_graph(m)
        want = comb(2 * m, m)
        if g.n != want:
            return False, f"m={m}: {g.n} vertices != C(2m,m) = {want}"
        if g.regular_degree() != 1:
            return False, f"m={m}: graph is not 1-regular"
        if qbinom(2 * m, m)(1) != want:
            return False, f"m={m}: [2m,m]_q at q=1 differs from C(2m,m)"
    return True, "binomial point counts, perfect matchings, and q=1 limits agree for m <= 5"


def _census_suite(workers: int) -> list:
    out = []
    for n in (6, 12, 30):
        g = _oracle(n)
        out.append(count_cliques(g, 4, workers=workers).as_list())
        out.append(extension_profile(g, 2, workers=workers))
    g = _mrg(2, 2)
    out.append(count_cliques(g, 6, workers=workers).as_list())
    out.append(extension_profile(g, 3, workers=workers))
    return out


def _criterion_13() -> tuple[bool, str]:
    wide = max(2, os.cpu_count() or 1)
    serial = _census_suite(1)
    parallel = _census_suite(wide)
    if serial != parallel:
        return False, f"outputs differ between 1 worker and {wide} workers"
    return True, f"census suite outputs identical with 1 worker and {wide} workers"


CRITERIA = {
    1: ("point counts", _criterion_1),
    2: ("degree and codegree", _criterion_2),
    3: ("cap1N and cap2N", _criterion_3),
    4: ("4-clique extension", _criterion_4),
    5: ("maximal cliques", _criterion_5),
    6: ("commutative suite", _criterion_6),
    7: ("tensor multiplicativity", _criterion_7),
    8: ("inclusion-exclusion weights", _criterion_8),
    9: ("coefficient theorems", _criterion_9),
    10: ("divisibility identities", _criterion_10),
    11: ("matrix fixtures", _criterion_11),
    12: ("q -> 1 limit", _criterion_12),
    13: ("census determinism", _criterion_13),
}

SUITES = {
    "matrix": [1, 2, 3, 4, 5, 8],
    "commutative": [6, 7, 13],
    "partitions": [9, 12],
    "identities": [10],
    "fixtures": [11],
    "all": list(range(1, 14)),
}


def run_criterion(number: int) -> CriterionResult:
    name, func = CRITERIA[number]
    start = time.perf_counter()
    try:
        ok, detail = func()
    except Exception as exc:  # surface engine errors as failures, not crashes
        elapsed = time.perf_counter() - start
        return CriterionResult(number, name, False, f"raised {type(exc).__name__}: {exc}", elapsed)
    elapsed = time.perf_counter() - start
    limit = TIME_LIMITS.get(number)
    if ok and limit is not None and elapsed > limit:
        ok = False
        detail += f"; exceeded the {limit:.0f}s runtime limit"
    return CriterionResult(number, name, ok, detail, elapsed)


def run_suite(suite: str) -> list[CriterionResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {sorted(SUITES)}")
    return [run_criterion(n) for n in SUITES[suite]]
