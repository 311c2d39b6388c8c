#!/usr/bin/env python3
# Per-prime structure: Bell series and prime-power supports.
#
# A multiplicative function splits into one truncated power series per
# prime (constant terms 1) and reassembles by multiplying coefficients
# along the factorization.  An additive function is determined by the
# sparse table g(p, k) = a(p^k) - a(p^(k-1)), and g is exactly mu * a.

import arithfn as af

N = 10_000
sieve = af.build_sieve(N)

phi = af.make("phi", sieve)
dec = af.bell_decompose_mult(phi, sieve)
print("series of phi at p = 2:", dec.series_for(2).coeffs)
print("series of phi at p = 5:", dec.series_for(5).coeffs)
for p in (2, 5, 97):
    got = dec.series_for(p).coeffs
    assert got == tuple(1 if k == 0 else p**k - p ** (k - 1) for k in range(len(got)))
assert af.bell_reconstruct_mult(dec, sieve) == phi
print("decompose -> reconstruct is the identity on phi at N =", N)

# Convolution acts coordinate-wise: the series of a*b is the series product.
d = af.make("d", sieve)
dd = af.bell_decompose_mult(phi * d, sieve)
for p in (2, 3, 7):
    length = sieve.prime_power_cap(p) + 1
    prod = af.series_mul(
        dec.series_for(p).coeffs, af.bell_decompose_mult(d, sieve).series_for(p).coeffs, length
    )
    assert tuple(prod) == dd.series_for(p).coeffs
print("series(phi * d) == series(phi) x series(d), prime by prime")

# Additive side: Omega differences to the all-ones prime-power table.
om = af.make("Omega", sieve)
g = af.additive_decompose(om, sieve)
print("\nOmega's prime-power table starts:", g.items()[:6])
assert all(v == 1 for _, v in g.items())
assert af.additive_reconstruct(g, sieve) == om

# psi in per-prime coordinates: the additive table of psi(a) at p is the
# truncated log of a's series at p.
t = af.additive_decompose(af.psi(phi.truncate(1000)), sieve)
for p in (2, 3, 5):
    length = sieve.prime_power_cap(p, 1000) + 1
    series = af.bell_decompose_mult(phi.truncate(1000), sieve).series_for(p).coeffs
    assert t.series_at(p, length) == af.series_log(list(series), length)
print("additive table of psi(phi) at p == log of phi's series at p")

# JSON forms for exchanging decompositions with other tooling.
print("\nBellSeries JSON:", dec.series_for(2).to_json_obj(af.RATIONAL))
print("PrimeSupport JSON head:", g.to_json_obj()[:3])
