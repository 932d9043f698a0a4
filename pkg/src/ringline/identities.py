"""Alternating lacunary binomial sums and the divisibility of the
common-neighbourhood counts they control.

Everything is exact integer arithmetic: the congruences are checked
directly, with no root-of-unity machinery.
"""

from __future__ import annotations

from math import comb

from .fields import is_prime
from .formulas import cap_n_N_comm
from .rings import RingSpec


def lacunary_sum(n: int, p: int, m: int) -> int:
    """sum over j of (-1)^(jp+m) C(n, jp+m), for 0 <= jp+m <= n."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 0 <= m < p:
        raise ValueError("need 0 <= m < p")
    total = 0
    idx = m
    while idx <= n:
        term = comb(n, idx)
        total += -term if idx % 2 else term
        idx += p
    return total


def lacunary_identity_check(n_max: int, p_max: int) -> bool:
    """lacunary_sum(n, p, m) == 0 mod p for all primes p <= min(n, p_max),
    n <= n_max, 0 <= m < p."""
    for n in range(1, n_max + 1):
        for p in range(2, min(n, p_max) + 1):
            if not is_prime(p):
                continue
            for m in range(p):
                if lacunary_sum(n, p, m) % p:
                    return False
    return True


def capN_divisibility_check(spec: RingSpec, n: int) -> bool:
    """Every prime p <= n divides the n-fold common-neighbourhood count."""
    value = cap_n_N_comm(spec, n)
    return all(value % p == 0 for p in range(2, n + 1) if is_prime(p))
