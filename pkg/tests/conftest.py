"""Shared oracles and random-function generators.

Everything here recomputes expected values by a route independent of the
code under test: trial division instead of the sieve, per-index divisor
scans instead of the sieve-shaped convolution kernels, and a
derivation-based recurrence (weighting by the prime-factor count, which
is fully additive, hence a derivation for the convolution product)
instead of the alternating/factorial series.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

import arithfn as af


# ---------------------------------------------------------------------------
# elementary oracles (trial division / direct scans)
# ---------------------------------------------------------------------------


def factorize_brute(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            out.append((d, k))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def primes_brute(limit: int) -> list[int]:
    return [p for p in range(2, limit + 1) if factorize_brute(p) == [(p, 1)]]


def divisors_brute(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius_brute(n: int) -> int:
    fac = factorize_brute(n)
    if any(k > 1 for _, k in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def phi_brute(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def omega_brute(n: int) -> int:
    return sum(k for _, k in factorize_brute(n))


def nu_brute(n: int) -> int:
    return len(factorize_brute(n))


def convolve_brute(a: af.ArithFn, b: af.ArithFn) -> list:
    """(a*b)(n) by direct divisor scan, ascending d; index 0 unused."""
    n_max = a.bound
    out = [a.backend.zero] * (n_max + 1)
    for n in range(1, n_max + 1):
        acc = a.backend.zero
        for d in divisors_brute(n):
            acc = acc + a[d] * b[n // d]
        out[n] = acc
    return out


def inverse_brute(a: af.ArithFn) -> list:
    """Dirichlet inverse by the textbook recursion with divisor scans."""
    n_max = a.bound
    one = a.backend.one
    inv1 = one / a[1] if a.backend is af.COMPLEX else Fraction(1, 1) / a[1]
    b = [a.backend.zero] * (n_max + 1)
    b[1] = inv1
    for n in range(2, n_max + 1):
        s = a.backend.zero
        for d in divisors_brute(n)[:-1]:
            s = s + b[d] * a[n // d]
        b[n] = -inv1 * s
    return b


# ---------------------------------------------------------------------------
# derivation-based log/exp oracles
#
# D(a)(n) = Omega(n) a(n) satisfies D(x*y) = D(x)*y + x*D(y) because the
# prime-factor count is fully additive over every divisor split.  Hence
# g = log(a) must satisfy D(g) = D(a) * a^{-1}, which pins g(n) for n >= 2
# as (D(a) * a^{-1})(n) / Omega(n); and f = exp(a) satisfies the sieve-style
# recurrence Omega(n) f(n) = sum_{d | n, d > 1} Omega(d) a(d) f(n/d).
# Exact, rational, and entirely independent of the truncated series.
# ---------------------------------------------------------------------------


def dlog_oracle(a: af.ArithFn) -> af.ArithFn:
    assert a[1] == 1
    n_max = a.bound
    da = af.ArithFn.from_values(
        [omega_brute(n) * a[n] for n in range(1, n_max + 1)], a.backend
    )
    ainv = af.ArithFn.from_values(inverse_brute(a)[1:], a.backend)
    lhs = convolve_brute(da, ainv)
    vals = [a.backend.zero]
    for n in range(2, n_max + 1):
        vals.append(Fraction(1, omega_brute(n)) * lhs[n])
    return af.ArithFn.from_values(vals, a.backend)


def dexp_oracle(a: af.ArithFn) -> af.ArithFn:
    assert a[1] == 0
    n_max = a.bound
    f = [a.backend.zero] * (n_max + 1)
    f[1] = a.backend.one
    for n in range(2, n_max + 1):
        s = a.backend.zero
        for d in divisors_brute(n):
            if d > 1:
                s = s + omega_brute(d) * a[d] * f[n // d]
        f[n] = Fraction(1, omega_brute(n)) * s
    return af.ArithFn.from_values(f[1:], a.backend)


def series_partial_sum_log(a: af.ArithFn, terms: int) -> af.ArithFn:
    """Direct partial sums of the alternating series with a chosen term
    count, built from repeated brute convolutions."""
    n_max = a.bound
    b = af.ArithFn.from_values([a[1] - 1] + [a[n] for n in range(2, n_max + 1)], a.backend)
    acc = af.ArithFn.zeros(n_max, a.backend)
    pw = af.ArithFn.identity(n_max, a.backend)
    for k in range(1, terms + 1):
        pw = af.ArithFn.from_values(convolve_brute(pw, b)[1:], a.backend)
        acc = acc + pw.scale(Fraction(-1 if k % 2 == 0 else 1, k))
    return acc


# ---------------------------------------------------------------------------
# random function generators
# ---------------------------------------------------------------------------

_EXACT_POOL = [0, 0, 1, -1, 2, -2, 3, Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3)]


def rand_exact_fn(rng: random.Random, bound: int, unit=None) -> af.ArithFn:
    """Random rational-valued function; ``unit`` pins a(1) when given."""
    vals = [rng.choice(_EXACT_POOL) for _ in range(bound)]
    if unit is not None:
        vals[0] = unit
    return af.ArithFn.from_values(vals, af.RATIONAL)


def rand_complex_fn(rng: random.Random, bound: int, unit=None) -> af.ArithFn:
    vals = [complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)) for _ in range(bound)]
    if unit is not None:
        vals[0] = complex(unit)
    return af.ArithFn.from_values(vals, af.COMPLEX)


def rand_multiplicative(rng: random.Random, sieve: af.SpfSieve, bound: int) -> af.ArithFn:
    """Random multiplicative function from random per-prime coefficients
    with constant term 1 (the converse direction of the Bell split)."""
    series = []
    for p in sieve.primes:
        if p > bound:
            break
        cap = sieve.prime_power_cap(p, bound)
        series.append(
            af.BellSeries(p, tuple([1] + [rng.randint(-3, 3) for _ in range(cap)]))
        )
    dec = af.BellDecomposition(bound, "multiplicative", af.RATIONAL, series)
    return af.bell_reconstruct_mult(dec, sieve)


def rand_additive(rng: random.Random, sieve: af.SpfSieve, bound: int) -> af.ArithFn:
    """Random additive function from a random prime-power table."""
    entries = {}
    for p in sieve.primes:
        if p > bound:
            break
        pk, k = p, 1
        while pk <= bound:
            entries[(p, k)] = rng.choice([0, 1, -1, 2, Fraction(1, 2)])
            pk *= p
            k += 1
    g = af.PrimeSupport(bound, af.RATIONAL, entries)
    return af.additive_reconstruct(g, sieve)


@pytest.fixture(scope="session")
def sieve100():
    return af.build_sieve(100)


@pytest.fixture(scope="session")
def sieve1000():
    return af.build_sieve(1000)


@pytest.fixture(scope="session")
def sieve2048():
    return af.build_sieve(2048)
