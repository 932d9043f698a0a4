"""Partitions, two-colored distinct partitions, and truncated q-series.

Partitions are tuples of weakly decreasing positive ints.  A two-colored
distinct partition keeps red and white rows separately, each strictly
decreasing; D2(h, k) fixes exactly k red rows and any number of white
ones.  Signed (parity) counts weigh a partition by (-1)^rows, the empty
partition counting as even.

All q-series arithmetic carries an explicit truncation order N and is
exact below it; the expansions here are generated, never hard-coded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .formulas import c_extension_poly
from .polynomials import IntPoly, poly_product

Partition = tuple[int, ...]


def enumerate_partitions(
    h: int, max_part: int | None = None, max_len: int | None = None
) -> list[Partition]:
    """All partitions of h with parts <= max_part and length <= max_len,
    in descending lexicographic order."""
    return list(_partitions(h, max_part, max_len, distinct=False))


def enumerate_distinct_partitions(
    h: int, max_part: int | None = None, max_len: int | None = None
) -> list[Partition]:
    """Partitions of h into pairwise distinct parts, same bounds and order."""
    return list(_partitions(h, max_part, max_len, distinct=True))


def _partitions(
    h: int, max_part: int | None, max_len: int | None, distinct: bool
) -> Iterator[Partition]:
    if h < 0:
        return
    top = h if max_part is None else min(max_part, h)
    length = h if max_len is None else max_len

    def rec(remaining: int, largest: int, room: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield tuple(prefix)
            return
        if room == 0:
            return
        for part in range(min(largest, remaining), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part - 1 if distinct else part, room - 1, prefix)
            prefix.pop()

    yield from rec(h, top, length, [])


@dataclass(frozen=True)
class TwoDistinctPartition:
    """Red rows and white rows, each strictly decreasing."""

    red: tuple[int, ...]
    white: tuple[int, ...]

    def __post_init__(self) -> None:
        for rows in (self.red, self.white):
            if any(p < 1 for p in rows):
                raise ValueError("parts must be positive")
            if any(a <= b for a, b in zip(rows, rows[1:])):
                raise ValueError("rows of one color must be strictly decreasing")

    @property
    def weight(self) -> int:
        return sum(self.red) + sum(self.white)

    @property
    def rows(self) -> int:
        return len(self.red) + len(self.white)


def enumerate_D2(h: int, k: int) -> list[TwoDistinctPartition]:
    """All of D2(h, k): weight h, exactly k red rows, both colors distinct."""
    if h < 0 or k < 0:
        raise ValueError("h and k must be >= 0")
    out = []
    for red_weight in range(h + 1):
        reds = [r for r in enumerate_distinct_partitions(red_weight) if len(r) == k]
        if not reds:
            continue
        whites = enumerate_distinct_partitions(h - red_weight)
        for red in reds:
            for white in whites:
                out.append(TwoDistinctPartition(red, white))
    return out


def parity_count(items: Iterable) -> int:
    """Even-row-count items minus odd-row-count items.

    Accepts TwoDistinctPartition objects (their total row count) or
    plain partitions (their length); the empty partition is even.
    """
    total = 0
    for item in items:
        rows = item.rows if isinstance(item, TwoDistinctPartition) else len(item)
        total += 1 if rows % 2 == 0 else -1
    return total


def dist2p_bijection(x: TwoDistinctPartition) -> TwoDistinctPartition:
    """Remove one cell from every red row.

    Sends D2(h, k) onto D2(h-k, k) u D2(h-k, k-1): a red row of length 1
    (unique if present) disappears and the row count drops by one;
    otherwise the row count is preserved.  Globally a bijection onto the
    union, inverted by growing every red row (adding a length-1 red row
    first in the k-1 case).
    """
    red = tuple(r - 1 for r in x.red if r > 1)
    return TwoDistinctPartition(red, x.white)


# ---------------------------------------------------------------------------
# q-series
# ---------------------------------------------------------------------------


def _mul_trunc(a: list[int], b: Sequence[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if i + j > order:
                    break
                out[i + j] += x * y
    return out


def qseries_product(exponent: int, truncation: int) -> list[int]:
    """Coefficients of prod_{i>=1} (1 - q^i)^exponent up to q^truncation.

    Negative exponents go through exact truncated power-series inversion
    (the constant term is 1, so the inverse exists termwise).
    """
    if truncation < 0:
        raise ValueError("truncation must be >= 0")
    n = truncation
    base = [0] * (n + 1)
    base[0] = 1
    for i in range(1, n + 1):
        factor = [0] * (i + 1)
        factor[0] = 1
        factor[i] = -1
        for _ in range(abs(exponent)):
            base = _mul_trunc(base, factor, n)
    if exponent >= 0:
        return base
    inv = [0] * (n + 1)
    inv[0] = 1
    for d in range(1, n + 1):
        acc = 0
        for j in range(1, d + 1):
            acc += base[j] * inv[d - j]
        inv[d] = -acc
    return inv


OEIS_SERIES_EXPONENT = {
    "A000041": -1,  # partition numbers
    "A000007": 0,  # 1, 0, 0, ...
    "A010815": 1,  # pentagonal-number expansion
    "A002107": 2,
}


def oeis_prefix(tag: str, terms: int = 12) -> list[int]:
    """First terms of the four catalogued expansions, generated locally."""
    if tag not in OEIS_SERIES_EXPONENT:
        raise ValueError(f"unknown sequence id {tag!r}")
    return qseries_product(OEIS_SERIES_EXPONENT[tag], terms - 1)


# ---------------------------------------------------------------------------
# coefficient checks
# ---------------------------------------------------------------------------


def distcoeff_poly(m: int, k: int) -> IntPoly:
    """(-1)^m q^(m(m-1)/2) prod_{j=0}^{m-1-k} (1 - q^(m-j)) as an IntPoly."""
    if not 0 <= k <= m:
        raise ValueError("need 0 <= k <= m")
    prod = poly_product(IntPoly.one() - IntPoly.monomial(m - j) for j in range(m - k))
    sign = -1 if m % 2 else 1
    return sign * IntPoly.monomial(m * (m - 1) // 2) * prod


def distcoeff_check(m: int, k: int, h: int) -> bool:
    """Coefficient of q^(m^2-h) in distcoeff_poly(m, k) versus the signed
    count of D2(h, k); defined for h <= m only."""
    if h > m:
        raise ValueError("the coefficient identity requires h <= m")
    if h < 0:
        raise ValueError("h must be >= 0")
    coeff = distcoeff_poly(m, k).coefficient(m * m - h)
    return coeff == parity_count(enumerate_D2(h, k))


def coeffs_theorem_check(m: int, k: int) -> bool:
    """For all h <= m: coefficient of q^(m^2-h) in C_{m,k}(q) equals the
    coefficient of q^h in prod (1 - q^i)^(k-1)."""
    poly = c_extension_poly(m, k)
    series = qseries_product(k - 1, m)
    return all(poly.coefficient(m * m - h) == series[h] for h in range(m + 1))


def coefficient_comparison_rows(m_max: int, k_max: int = 3) -> list[tuple[int, int, int, int, int, bool]]:
    """(m, k, h, polynomial coefficient, series coefficient, equal) rows
    for every m <= m_max, k <= k_max, h <= m; the CSV-facing table."""
    rows = []
    for m in range(m_max + 1):
        for k in range(k_max + 1):
            poly = c_extension_poly(m, k)
            series = qseries_product(k - 1, m)
            for h in range(m + 1):
                a = poly.coefficient(m * m - h)
                b = series[h]
                rows.append((m, k, h, a, b, a == b))
    return rows
