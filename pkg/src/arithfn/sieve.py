"""Smallest-prime-factor sieve and factorization services.

The sieve stores spf[n] = smallest prime factor of n for 2 <= n <= N,
which makes the factorization of any n <= N an O(number of prime factors)
walk.  Everything downstream (divisor lists, prime-power tests, the
omega/nu counts, Bell decompositions) is driven by these factorizations.

Memory is the only practical limit: the table is a single int64 numpy
array, so N = 10**7 costs ~80 MB and builds in well under a second.
"""

from __future__ import annotations

import math

import numpy as np


class SpfSieve:
    """Immutable smallest-prime-factor table up to ``bound``.

    Attributes:
        bound:  the sieve limit N (inclusive).
        primes: ordered list of all primes <= N (p_1 = 2, p_2 = 3, ...).
    """

    __slots__ = ("bound", "primes", "_spf", "_prime_index")

    def __init__(self, bound: int, spf: np.ndarray, primes: list[int]):
        self.bound = bound
        self.primes = primes
        self._spf = spf
        self._prime_index = None  # built lazily

    def _check_range(self, n: int, lo: int = 1) -> None:
        if not lo <= n <= self.bound:
            raise ValueError(f"n = {n} outside sieve range {lo}..{self.bound}")

    def smallest_prime_factor(self, n: int) -> int:
        """spf(n) for 2 <= n <= bound."""
        self._check_range(n, lo=2)
        return int(self._spf[n])

    def is_prime(self, n: int) -> bool:
        self._check_range(n)
        return n >= 2 and int(self._spf[n]) == n

    def prime_index(self, p: int) -> int:
        """1-based index i with p the i-th prime (2 -> 1, 3 -> 2, ...)."""
        if self._prime_index is None:
            self._prime_index = {p: i for i, p in enumerate(self.primes, start=1)}
        try:
            return self._prime_index[p]
        except KeyError:
            raise ValueError(f"{p} is not a prime <= {self.bound}") from None

    def factorize(self, n: int) -> list[tuple[int, int]]:
        """Canonical factorization [(p1, a1), ...] with p1 < p2 < ...

        factorize(1) is the empty list.
        """
        self._check_range(n)
        out: list[tuple[int, int]] = []
        spf = self._spf
        while n > 1:
            p = int(spf[n])
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        return out

    def divisors(self, n: int) -> list[int]:
        """All divisors of n, ascending.  Deterministic order is part of
        the contract: float convolutions sum contributions in this order.
        """
        self._check_range(n)
        divs = [1]
        for p, a in self.factorize(n):
            pk = 1
            powers = []
            for _ in range(a):
                pk *= p
                powers.append(pk)
            divs += [d * q for q in powers for d in divs]
        divs.sort()
        return divs

    def prime_power_part(self, n: int) -> tuple[int, int] | None:
        """(p, k) with n = p^k if n is a prime power, else None.

        n = 1 is deliberately out of range: it has zero prime factors,
        not one, and the callers that classify additive functions need
        to treat it separately.
        """
        self._check_range(n, lo=2)
        p = int(self._spf[n])
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        return (p, k) if n == 1 else None

    def nu(self, n: int) -> int:
        """Number of distinct prime divisors; 0 at n = 1."""
        self._check_range(n)
        count = 0
        spf = self._spf
        while n > 1:
            p = int(spf[n])
            while n % p == 0:
                n //= p
            count += 1
        return count

    def omega(self, n: int) -> int:
        """Total number of prime divisors counted with multiplicity."""
        self._check_range(n)
        count = 0
        spf = self._spf
        while n > 1:
            n //= int(spf[n])
            count += 1
        return count

    def prime_power_cap(self, p: int, bound: int | None = None) -> int:
        """Largest k with p**k <= bound (the per-prime series length cap)."""
        if p < 2:
            raise ValueError(f"base must be >= 2, got {p}")
        limit = self.bound if bound is None else bound
        k, pk = 0, 1
        while pk * p <= limit:
            pk *= p
            k += 1
        return k

    def __repr__(self) -> str:
        return f"SpfSieve(bound={self.bound}, primes={len(self.primes)})"


def build_sieve(bound: int) -> SpfSieve:
    """Sieve smallest prime factors for 2..bound and collect the primes.

    bound = 1 is legal and yields an empty prime list.
    """
    if bound < 1:
        raise ValueError(f"sieve bound must be >= 1, got {bound}")
    spf = np.zeros(bound + 1, dtype=np.int64)
    for p in range(2, math.isqrt(bound) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    # untouched entries are prime (their smallest factor is themselves)
    rest = np.nonzero(spf[2:] == 0)[0] + 2
    spf[rest] = rest
    primes = (np.nonzero(spf[2:] == np.arange(2, bound + 1))[0] + 2).tolist()
    return SpfSieve(bound, spf, primes)
