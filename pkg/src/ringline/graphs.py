"""Finite simple graphs as bitset adjacency rows, plus the loop graph T.

Vertices are 0..n-1; row v is a Python int whose bit u is set when
u ~ v.  Graphs are immutable after construction and safe to share
across workers.  T, the single vertex with a loop, is the identity of
the tensor product and is rejected by every other combinator.

The census engine is an ordered backtracking search: cliques are
enumerated exactly once, in increasing vertex order, with one budget
"node" charged per clique visited.  Exceeding the budget raises; there
are no silent partial answers.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .config import CENSUS_NODE_BUDGET, VERTEX_BOUND
from .errors import BoundExceeded, BudgetExceeded


class Graph:
    __slots__ = ("n", "adj", "is_T", "labels")

    def __init__(
        self,
        n: int,
        adj: Sequence[int],
        labels: Sequence[str] | None = None,
        is_T: bool = False,
    ):
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError("adjacency row count mismatch")
        if is_T:
            if n != 1 or adj != (1,):
                raise ValueError("T is the single vertex with one loop")
        else:
            mask = (1 << n) - 1
            for v, row in enumerate(adj):
                if row & ~mask:
                    raise ValueError(f"row {v} has bits outside the vertex range")
                if row >> v & 1:
                    raise ValueError(f"loop at vertex {v}")
            for v, row in enumerate(adj):
                bits = row
                while bits:
                    u = (bits & -bits).bit_length() - 1
                    bits &= bits - 1
                    if not adj[u] >> v & 1:
                        raise ValueError(f"asymmetric edge {v}->{u}")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("label count mismatch")
        self.n = n
        self.adj = adj
        self.is_T = is_T
        self.labels = labels

    @classmethod
    def T(cls) -> "Graph":
        return cls(1, (1,), labels=("T",), is_T=True)

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)], [str(v) for v in range(n)])

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n, [str(v) for v in range(n)])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            bits = self.adj[v] >> (v + 1) << (v + 1)
            while bits:
                u = (bits & -bits).bit_length() - 1
                bits &= bits - 1
                yield (v, u)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def regular_degree(self) -> int | None:
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def index_of(self, label: str) -> int:
        if self.labels is None:
            raise ValueError("graph has no labels")
        return self.labels.index(label)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.adj, self.is_T) == (other.n, other.adj, other.is_T)

    def __hash__(self) -> int:
        return hash((self.n, self.adj, self.is_T))

    def __repr__(self) -> str:
        if self.is_T:
            return "Graph.T()"
        return f"Graph(n={self.n}, edges={self.edge_count()})"


# ---------------------------------------------------------------------------
# graph algebra
# ---------------------------------------------------------------------------


def tensor_product(a: Graph, b: Graph, vertex_bound: int = VERTEX_BOUND) -> Graph:
    """Vertex pairs, adjacent when both coordinates are adjacent.

    T is the identity: its loop pairs with every edge of the other
    factor, so the product is the other factor unchanged.
    """
    if a.is_T:
        return b
    if b.is_T:
        return a
    n = a.n * b.n
    if n > vertex_bound:
        raise BoundExceeded(f"tensor product has {n} vertices, bound {vertex_bound}")
    rows = []
    for va in range(a.n):
        abits = a.adj[va]
        for vb in range(b.n):
            row = 0
            bits = abits
            while bits:
                ua = (bits & -bits).bit_length() - 1
                bits &= bits - 1
                row |= b.adj[vb] << (ua * b.n)
            rows.append(row)
    labels = None
    if a.labels is not None and b.labels is not None:
        labels = [f"{la}|{lb}" for la in a.labels for lb in b.labels]
    return Graph(n, rows, labels)


def blowup(g: Graph, t: int, vertex_bound: int = VERTEX_BOUND) -> Graph:
    """Replace each vertex by t mutually non-adjacent copies."""
    if t < 1:
        raise ValueError("blow-up factor must be positive")
    if t == 1:
        return g
    if g.is_T:
        raise ValueError("cannot blow up T")
    n = g.n * t
    if n > vertex_bound:
        raise BoundExceeded(f"blow-up has {n} vertices, bound {vertex_bound}")
    spread_rows: list[int] = []
    for v in range(g.n):
        row = 0
        bits = g.adj[v]
        while bits:
            u = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            row |= ((1 << t) - 1) << (u * t)
        spread_rows.append(row)
    rows = [spread_rows[v] for v in range(g.n) for _ in range(t)]
    labels = None
    if g.labels is not None:
        labels = [f"{lab}#{i}" for lab in g.labels for i in range(t)]
    return Graph(n, rows, labels)


def complement(g: Graph) -> Graph:
    if g.is_T:
        raise ValueError("complement of T is undefined here")
    full = (1 << g.n) - 1
    rows = [(full ^ g.adj[v]) & ~(1 << v) for v in range(g.n)]
    return Graph(g.n, rows, g.labels)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    if any(g.is_T for g in graphs):
        raise ValueError("disjoint union of T is undefined here")
    n = sum(g.n for g in graphs)
    rows = []
    offset = 0
    have_labels = all(g.labels is not None for g in graphs)
    labels: list[str] | None = [] if have_labels else None
    for i, g in enumerate(graphs):
        for v in range(g.n):
            rows.append(g.adj[v] << offset)
        if labels is not None:
            labels.extend(f"{i}/{lab}" for lab in g.labels)  # type: ignore[union-attr]
        offset += g.n
    return Graph(n, rows, labels)


# ---------------------------------------------------------------------------
# clique census
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CliqueCensus:
    """Exact per-size clique counts; counts[0] = 1 is the empty clique."""

    counts: dict[int, int]
    kmax: int
    nodes: int = 0

    def as_list(self) -> list[int]:
        return [self.counts[k] for k in range(self.kmax + 1)]


def _census_roots(adj: Sequence[int], kmax: int, roots: Sequence[int], budget: int):
    """Counts of cliques whose minimum vertex lies in roots, plus node count."""
    counts = [0] * (kmax + 1)
    nodes = 0

    def rec(cand: int, size: int) -> None:
        nonlocal nodes
        while cand:
            lsb = cand & -cand
            v = lsb.bit_length() - 1
            cand ^= lsb
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"census exceeded {budget} nodes")
            counts[size + 1] += 1
            if size + 1 < kmax:
                sub = cand & adj[v]
                if sub:
                    rec(sub, size + 1)

    for r in roots:
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"census exceeded {budget} nodes")
        if kmax >= 1:
            counts[1] += 1
            if kmax >= 2:
                above = adj[r] >> (r + 1) << (r + 1)
                if above:
                    rec(above, 1)
    return counts, nodes


def _census_task(args):
    adj, kmax, roots, budget = args
    return _census_roots(adj, kmax, roots, budget)


def _split_round_robin(items: Sequence[int], parts: int) -> list[list[int]]:
    chunks: list[list[int]] = [[] for _ in range(parts)]
    for i, item in enumerate(items):
        chunks[i % parts].append(item)
    return [c for c in chunks if c]


def count_cliques(
    g: Graph,
    kmax: int,
    node_budget: int | None = None,
    workers: int = 1,
) -> CliqueCensus:
    """Exact number of k-cliques for 0 <= k <= kmax.

    For T there is one clique of every size.  The count is independent
    of the worker split: each worker owns the cliques whose minimum
    vertex falls in its share of the roots, and the totals are summed.
    """
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    budget = CENSUS_NODE_BUDGET if node_budget is None else node_budget
    if g.is_T:
        return CliqueCensus({k: 1 for k in range(kmax + 1)}, kmax, 0)
    roots = list(range(g.n))
    if workers <= 1 or g.n < 2 or kmax < 2:
        counts, nodes = _census_roots(g.adj, kmax, roots, budget)
    else:
        chunks = _split_round_robin(roots, workers)
        counts = [0] * (kmax + 1)
        nodes = 0
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            for part, part_nodes in pool.map(
                _census_task, [(g.adj, kmax, chunk, budget) for chunk in chunks]
            ):
                counts = [a + b for a, b in zip(counts, part)]
                nodes += part_nodes
        if nodes > budget:
            raise BudgetExceeded(f"census exceeded {budget} nodes")
    counts[0] = 1
    return CliqueCensus({k: counts[k] for k in range(kmax + 1)}, kmax, nodes)


# ---------------------------------------------------------------------------
# cliques, extensions, profiles
# ---------------------------------------------------------------------------


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        return False
    for i, v in enumerate(vs):
        for u in vs[i + 1 :]:
            if not g.has_edge(v, u):
                return False
    return True


def _common_neighbors(g: Graph, vertices: Iterable[int]) -> int:
    acc = (1 << g.n) - 1
    for v in vertices:
        acc &= g.adj[v]
    return acc


def extension_count(g: Graph, clique: Iterable[int]) -> int:
    """Number of vertices adjacent to every member of the clique."""
    vs = list(clique)
    if not is_clique(g, vs):
        raise ValueError("input vertex set is not a clique")
    return _common_neighbors(g, vs).bit_count()


def is_inextensible(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return is_clique(g, vs) and _common_neighbors(g, vs).bit_count() == 0


def neighborhood_intersection_count(g: Graph, vertices: Iterable[int]) -> int:
    """Points non-adjacent to all the given vertices (vertices included)."""
    full = (1 << g.n) - 1
    acc = full
    for v in vertices:
        acc &= full ^ g.adj[v]
    return acc.bit_count()


def _profile_roots(
    adj: Sequence[int], target: int, cand: int, common: int, roots: Sequence[int], budget: int
):
    hist: Counter[int] = Counter()
    nodes = 0

    def rec(cand: int, common: int, size: int) -> None:
        nonlocal nodes
        while cand:
            lsb = cand & -cand
            v = lsb.bit_length() - 1
            cand ^= lsb
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"profile exceeded {budget} nodes")
            next_common = common & adj[v]
            if size + 1 == target:
                hist[next_common.bit_count()] += 1
            else:
                sub = cand & adj[v]
                if sub:
                    rec(sub, next_common, size + 1)

    for r in roots:
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"profile exceeded {budget} nodes")
        next_common = common & adj[r]
        if target == 1:
            hist[next_common.bit_count()] += 1
        else:
            above = cand & adj[r] & (-1 << (r + 1))
            if above:
                rec(above, next_common, 1)
    return hist, nodes


def _profile_task(args):
    adj, target, cand, common, roots, budget = args
    return _profile_roots(adj, target, cand, common, roots, budget)


def extension_profile(
    g: Graph,
    k: int,
    containing: Iterable[int] = (),
    node_budget: int | None = None,
    workers: int = 1,
) -> dict[int, int]:
    """Histogram {extension count: number of k-cliques with that count}.

    With `containing`, only k-cliques through that clique are profiled.
    The histogram keys are sorted, so the output is canonical.
    """
    if g.is_T:
        raise ValueError("extension profile of T is undefined")
    base = list(containing)
    if not is_clique(g, base):
        raise ValueError("containing set is not a clique")
    if k < len(base):
        raise ValueError("k smaller than the fixed clique")
    budget = CENSUS_NODE_BUDGET if node_budget is None else node_budget
    common = _common_neighbors(g, base)
    target = k - len(base)
    if target == 0:
        return {common.bit_count(): 1}
    roots = []
    bits = common
    while bits:
        v = (bits & -bits).bit_length() - 1
        bits &= bits - 1
        roots.append(v)
    if workers <= 1 or target < 2 or len(roots) < 2:
        hist, _ = _profile_roots(g.adj, target, common, common, roots, budget)
    else:
        chunks = _split_round_robin(roots, workers)
        hist = Counter()
        nodes = 0
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            for part, part_nodes in pool.map(
                _profile_task,
                [(g.adj, target, common, common, chunk, budget) for chunk in chunks],
            ):
                hist.update(part)
                nodes += part_nodes
        if nodes > budget:
            raise BudgetExceeded(f"profile exceeded {budget} nodes")
    return {c: hist[c] for c in sorted(hist)}


def find_clique(g: Graph, k: int) -> list[int] | None:
    """First k-clique in lexicographic vertex order, or None."""
    if g.is_T:
        raise ValueError("find_clique on T is undefined")
    if k == 0:
        return []

    def rec(cand: int, chosen: list[int]) -> list[int] | None:
        if len(chosen) == k:
            return chosen
        while cand:
            lsb = cand & -cand
            v = lsb.bit_length() - 1
            cand ^= lsb
            got = rec(cand & g.adj[v], chosen + [v])
            if got is not None:
                return got
        return None

    return rec((1 << g.n) - 1, [])


def max_clique_order(g: Graph, node_budget: int | None = None) -> int:
    """Exact maximum clique size, by branch and bound with greedy coloring."""
    if g.is_T:
        raise ValueError("T has a clique of every order")
    budget = CENSUS_NODE_BUDGET if node_budget is None else node_budget
    adj = g.adj
    best = 0
    nodes = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"max-clique search exceeded {budget} nodes")
        if not cand:
            if size > best:
                best = size
            return
        order: list[tuple[int, int]] = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                lsb = avail & -avail
                v = lsb.bit_length() - 1
                order.append((v, color))
                uncolored ^= lsb
                avail = (avail ^ lsb) & ~adj[v]
        for v, c in reversed(order):
            if size + c <= best:
                return
            expand(size + 1, cand & adj[v])
            cand &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best


def verify_isomorphism(a: Graph, b: Graph, mapping: Sequence[int]) -> bool:
    """True iff the vertex bijection preserves adjacency both ways."""
    if a.n != b.n or a.is_T != b.is_T:
        return False
    if sorted(mapping) != list(range(a.n)):
        raise ValueError("mapping is not a bijection on the vertex sets")
    if a.is_T:
        return True
    for v in range(a.n):
        bits = a.adj[v] >> (v + 1) << (v + 1)
        while bits:
            u = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            if not b.has_edge(mapping[v], mapping[u]):
                return False
    return a.edge_count() == b.edge_count()


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = g.labels[v] if g.labels is not None else str(v)
        lines.append(f'  {v} [label="{label}"];')
    if g.is_T:
        lines.append("  0 -- 0;")
    else:
        for u, v in g.edges():
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def adjacency_json(g: Graph) -> str:
    data = {
        "n": g.n,
        "is_T": g.is_T,
        "labels": list(g.labels) if g.labels is not None else None,
        "adjacency": [
            [u for u in range(g.n) if g.adj[v] >> u & 1] for v in range(g.n)
        ],
    }
    return json.dumps(data, indent=2, sort_keys=True)
