"""Bundled matrix fixtures and their verification procedures.

The two JSON files hold hand-transcribed matrix data as row-major digit
strings, checksummed at transcription time; verification never
regenerates them.  The checks use only the field/matrix layer and the
graph engine, so they are an independent exercise of both.
"""

from __future__ import annotations

import hashlib
import json
from itertools import combinations
from pathlib import Path

from ..errors import FixtureMismatch
from ..fields import gf_of
from ..graphs import extension_count, is_clique, is_inextensible
from ..linalg import MatrixGF, enumerate_gl, mat_det, mat_sub
from ..rings import unit_difference_graph

_DIR = Path(__file__).parent


def _load(name: str) -> dict:
    payload = json.loads((_DIR / name).read_text())
    expected = payload.get("sha256")
    body = {k: v for k, v in payload.items() if k != "sha256"}
    digest = hashlib.sha256(
        json.dumps(body, sort_keys=True, separators=(",", ":")).encode()
    ).hexdigest()
    if digest != expected:
        raise FixtureMismatch(f"{name}: checksum mismatch (corrupted transcription?)")
    return payload


def _parse_matrix(label: str, q: int, size: int) -> MatrixGF:
    if len(label) != size * size:
        raise FixtureMismatch(f"matrix digit string {label!r} is not {size}x{size}")
    F = gf_of(q)
    digits = [int(ch) for ch in label]
    if any(d >= q for d in digits):
        raise FixtureMismatch(f"matrix {label!r} has entries outside GF({q})")
    rows = tuple(tuple(digits[i * size : (i + 1) * size]) for i in range(size))
    return MatrixGF(F, rows)


def load_appendix_b() -> dict:
    payload = _load("appendix_b.json")
    q, size = payload["q"], payload["size"]
    return {
        name: [_parse_matrix(s, q, size) for s in labels]
        for name, labels in payload["sets"].items()
    } | {"q": q, "labels": payload["sets"]}


def load_appendix_c() -> dict:
    payload = _load("appendix_c.json")
    q, size = payload["q"], payload["size"]
    return {
        "q": q,
        "matrices": [_parse_matrix(s, q, size) for s in payload["matrices"]],
        "labels": payload["matrices"],
    }


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise FixtureMismatch(message)


def verify_appendix_B() -> dict:
    """Check the triangle-extension fixture inside the GL_2(3)
    unit-difference graph and report its class structure.

    Confirms: exactly 9 common extensions of the fixed triangle, equal
    as a set to A u B u C; A and B internally distant; the C element
    distant to all of A u B; no A-B adjacency; extension counts 8
    through C and 4 through any A or B element; the two resulting
    8-element cliques are maximal.  Any failure raises FixtureMismatch.
    """
    data = load_appendix_b()
    labels = data["labels"]
    g = unit_difference_graph(2, 3)
    tri = [g.index_of(s) for s in labels["triangle"]]
    a_idx = [g.index_of(s) for s in labels["A"]]
    b_idx = [g.index_of(s) for s in labels["B"]]
    c_idx = [g.index_of(s) for s in labels["C"]]

    _require(is_clique(g, tri), "triangle is not a clique")
    common = (1 << g.n) - 1
    for v in tri:
        common &= g.adj[v]
    found = {g.labels[v] for v in range(g.n) if common >> v & 1}  # type: ignore[index]
    listed = set(labels["A"]) | set(labels["B"]) | set(labels["C"])
    _require(len(found) == 9, f"triangle has {len(found)} extensions, not 9")
    _require(found == listed, "extension set differs from the listed classes")

    class_sizes = (len(a_idx), len(b_idx), len(c_idx))
    _require(class_sizes == (4, 4, 1), f"class sizes {class_sizes} != (4, 4, 1)")
    _require(is_clique(g, a_idx), "A is not internally distant")
    _require(is_clique(g, b_idx), "B is not internally distant")
    for v in a_idx + b_idx:
        _require(g.has_edge(c_idx[0], v), "C element not distant to all of A u B")
    cross = sum(1 for u in a_idx for v in b_idx if g.has_edge(u, v))
    _require(cross == 0, f"{cross} unexpected A-B adjacencies")

    ext_via_c = extension_count(g, tri + c_idx)
    _require(ext_via_c == 8, f"extension count via C is {ext_via_c}, not 8")
    for v in a_idx + b_idx:
        ext = extension_count(g, tri + [v])
        _require(ext == 4, f"extension count via an A/B element is {ext}, not 4")

    maximal_sizes = []
    for block in (a_idx, b_idx):
        clique = tri + block + c_idx
        _require(is_inextensible(g, clique), "expected 8-clique is not maximal")
        maximal_sizes.append(len(clique))
    _require(maximal_sizes == [8, 8], f"maximal clique sizes {maximal_sizes}")

    return {
        "class_sizes": class_sizes,
        "extensions_of_triangle": len(found),
        "extension_count_via_C": ext_via_c,
        "extension_count_via_A_or_B": 4,
        "cross_AB_adjacencies": cross,
        "maximal_clique_sizes": maximal_sizes,
        "ok": True,
    }


def verify_appendix_C() -> dict:
    """Check the 20-element set in GL_2(5): all invertible, all 190
    pairwise differences invertible, and no element of GL_2(5) extends
    it, although 20 is below the 24-element ceiling for cliques of the
    unit-difference graph.  Any failure raises FixtureMismatch.
    """
    data = load_appendix_c()
    mats = data["matrices"]
    q = data["q"]
    _require(len(mats) == 20, f"{len(mats)} matrices, expected 20")
    for m in mats:
        _require(mat_det(m) != 0, "fixture matrix is not invertible")

    pair_checks = 0
    for m1, m2 in combinations(mats, 2):
        _require(mat_det(mat_sub(m1, m2)) != 0, "pair with singular difference")
        pair_checks += 1
    _require(pair_checks == 190, f"{pair_checks} pairwise checks, expected 190")

    candidates = enumerate_gl(2, q)
    extenders = 0
    for x in candidates:
        if all(mat_det(mat_sub(x, m)) != 0 for m in mats):
            extenders += 1
    _require(extenders == 0, f"{extenders} of {len(candidates)} candidates extend the set")

    bound = q**2 - 1
    _require(len(mats) < bound, "set is not submaximal")
    return {
        "clique_size": 20,
        "pairwise_checks": pair_checks,
        "extension_candidates": extenders,
        "candidates_tested": len(candidates),
        "max_possible_clique": bound,
        "ok": True,
    }
