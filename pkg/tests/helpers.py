"""Shared brute-force oracles and small utilities for the test suite.

Everything here is deliberately independent of the library's closed-form
constructors: orders by repeated addition, connector sets by order scan,
triple enumeration by direct search.
"""

from __future__ import annotations

from psqcayley import PrimeTriple, is_prime, make_prime_triple


def brute_order(k: int, n: int) -> int:
    """Order of k in the additive group Z_n by repeated addition."""
    if k == 0:
        return 1
    acc = k
    count = 1
    while acc != 0:
        acc = (acc + k) % n
        count += 1
    return count


def order_scan_connectors(t: PrimeTriple) -> set[int]:
    """All exponents whose brute-force order is a squared prime."""
    squares = set(t.moduli)
    return {m for m in range(1, t.n) if brute_order(m, t.n) in squares}


def primes_up_to(limit: int) -> list[int]:
    return [p for p in range(2, limit + 1) if is_prime(p)]


def triples_with_group_order_at_most(limit: int) -> list[PrimeTriple]:
    """Every valid triple with n = (abc)² <= limit, ascending by n."""
    bound = int(limit**0.5)  # abc <= sqrt(limit)
    primes = primes_up_to(bound // 6 + 1)
    found = []
    for i, a in enumerate(primes):
        for j in range(i + 1, len(primes)):
            b = primes[j]
            if a * b * b >= bound:
                break
            for k in range(j + 1, len(primes)):
                c = primes[k]
                if a * b * c > bound:
                    break
                found.append(make_prime_triple(a, b, c))
    return sorted(found, key=lambda t: t.n)
