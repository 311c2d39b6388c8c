#!/usr/bin/env python3
# The psi transform: multiplicative functions (group under convolution)
# correspond exactly to additive functions (group under pointwise sum).
#
#   psi(a)      = u * log(a)        psi_inv(a) = exp(mu * a)
#
# psi turns the totient into an additive function; psi_inv turns the
# distinct-prime counter nu into a multiplicative one.  Both directions
# compose to the identity, exactly.

import random

import arithfn as af

N = 1024
sieve = af.build_sieve(N)

phi = af.make("phi", sieve)
print("phi is multiplicative:", bool(af.is_multiplicative(phi)))
print("phi is additive:      ", bool(af.is_additive(phi)),
      "witness", af.is_additive(phi).witness)

t = af.psi(phi)
print("\npsi(phi) is additive: ", bool(af.is_additive(t)))
print("psi(phi) at 2,3,4,6,12:", [t[n] for n in (2, 3, 4, 6, 12)])
assert t[6] == t[2] + t[3]          # additivity in action
assert af.psi_inv(t) == phi          # and back again, exactly

nu = af.make("nu", sieve)
f = af.psi_inv(nu)
print("\npsi_inv(nu) is multiplicative:", bool(af.is_multiplicative(f)))
print("psi_inv(nu) at p, p^2, p^3:", f[2], f[4], f[8], " (1/k! pattern)")
assert f[6] == f[2] * f[3]

# Group isomorphism: products of multiplicative functions map to sums.
sigma1 = af.make("sigma", sieve, c=1)
assert af.psi(phi * sigma1) == af.psi(phi) + af.psi(sigma1)
print("\npsi(phi * sigma_1) == psi(phi) + psi(sigma_1)")

# The two additivity tests agree everywhere: pair scanning vs convolution.
rng = random.Random(11)
for trial in range(20):
    vals = [0] + [rng.choice([0, 1, -1, 2]) for _ in range(N - 1)]
    a = af.ArithFn.from_values(vals)
    assert af.is_additive(a).ok == af.mobius_additivity_test(a, sieve).ok
print("pair-scan additivity == mu-convolution additivity on 20 random tables")

# Deterministic least witnesses make failures reproducible and debuggable.
res = af.is_multiplicative(nu)
print("\nnu fails multiplicativity at", res.witness,
      f"(nu(6)={nu[6]} but nu(2)*nu(3)={nu[2] * nu[3]})")
assert res.witness == (2, 3)
