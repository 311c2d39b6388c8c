"""Predicates, Bell decompositions, prime supports, series helpers."""

import random
from fractions import Fraction

import pytest

import arithfn as af
from arithfn.errors import StructureError
from conftest import rand_additive, rand_exact_fn, rand_multiplicative


class TestPredicates:
    def test_totient_is_multiplicative(self, sieve1000):
        assert af.is_multiplicative(af.make("phi", sieve1000)).ok

    def test_nu_is_not_with_witness(self, sieve1000):
        res = af.is_multiplicative(af.make("nu", sieve1000))
        assert not res.ok and res.witness == (2, 3)

    def test_identity_is_multiplicative(self):
        assert af.is_multiplicative(af.ArithFn.identity(100)).ok

    def test_liouville_completely_multiplicative(self, sieve1000):
        res = af.is_completely_multiplicative(af.make("liouville", sieve1000), sieve1000)
        assert res.ok and all(c == -1 for c in res.constants.values())

    def test_n_function_completely_multiplicative(self, sieve1000):
        res = af.is_completely_multiplicative(af.make("N", sieve1000), sieve1000)
        assert res.ok and all(res.constants[p] == p for p in sieve1000.primes)

    def test_totient_not_completely(self, sieve1000):
        res = af.is_completely_multiplicative(af.make("phi", sieve1000), sieve1000)
        assert not res.ok and res.witness == (2, 2) and res.witness_kind == "prime_power"

    def test_additive_examples(self, sieve1000):
        assert af.is_additive(af.make("nu", sieve1000)).ok
        assert af.is_additive(af.make("Omega", sieve1000)).ok
        res = af.is_additive(af.make("phi", sieve1000))
        assert not res.ok and res.witness == (2, 3)

    def test_completely_additive_examples(self, sieve1000):
        res = af.is_completely_additive(af.make("Omega", sieve1000), sieve1000)
        assert res.ok and all(c == 1 for c in res.constants.values())
        res = af.is_completely_additive(af.make("nu", sieve1000), sieve1000)
        assert not res.ok and res.witness == (2, 2)
        res = af.is_completely_additive(af.ArithFn.zeros(100))
        assert res.ok and all(c == 0 for c in res.constants.values())

    def test_wrong_unit_value_witness(self):
        two_u = af.ArithFn.ones(50).scale(2)
        res = af.is_multiplicative(two_u)
        assert not res.ok and res.witness == (2, 3)  # 2 != 2*2
        shifted = af.ArithFn.from_values([1] + [0] * 49)
        res = af.is_additive(shifted)
        assert not res.ok and res.witness == (1, 1)  # sums all vanish; a(1) wrong

    def test_float_predicates_use_tolerance(self, sieve1000):
        phi = af.make("phi", sieve1000, af.COMPLEX, bound=200)
        noisy = phi + af.ArithFn.from_values([0.0] * 199 + [1e-13], af.COMPLEX)
        assert af.is_multiplicative(noisy).ok
        assert not af.is_multiplicative(noisy, tol=1e-15).ok


class TestMobiusAdditivityTest:
    def test_on_counting_functions(self, sieve1000):
        nu = af.make("nu", sieve1000)
        om = af.make("Omega", sieve1000)
        assert af.mobius_additivity_test(nu, sieve1000).ok
        assert af.mobius_additivity_test(om, sieve1000).ok

    def test_surviving_values(self, sieve1000):
        # mu * nu keeps 1 at each prime and nothing else;
        # mu * Omega keeps 1 at every prime power
        n = 500
        mu = af.ArithFn.ones(n).inv()
        g_nu = mu * af.make("nu", sieve1000, bound=n)
        g_om = mu * af.make("Omega", sieve1000, bound=n)
        for k in range(1, n + 1):
            pp = sieve1000.prime_power_part(k) if k >= 2 else None
            assert g_nu[k] == (1 if pp is not None and pp[1] == 1 else 0)
            assert g_om[k] == (1 if pp is not None else 0)

    def test_u_fails_at_one(self, sieve1000):
        res = af.mobius_additivity_test(af.make("u", sieve1000), sieve1000)
        assert not res.ok and res.witness == 1 and res.witness_kind == "index"

    def test_agrees_with_pair_scan(self, sieve1000):
        rng = random.Random(40)
        n = 256
        for _ in range(20):
            a = rand_additive(rng, sieve1000, n)
            assert af.mobius_additivity_test(a).ok == af.is_additive(a).ok == True  # noqa: E712
        for _ in range(20):
            a = rand_exact_fn(rng, n)
            assert af.mobius_additivity_test(a).ok == af.is_additive(a).ok


class TestBellDecomposition:
    def test_u_series_all_ones(self, sieve100):
        dec = af.bell_decompose_mult(af.make("u", sieve100), sieve100)
        for s in dec.series:
            assert all(c == 1 for c in s.coeffs)

    def test_mobius_series(self, sieve100):
        dec = af.bell_decompose_mult(af.make("mobius", sieve100), sieve100)
        for s in dec.series:
            want = (1, -1) + (0,) * (len(s.coeffs) - 2)
            assert s.coeffs == want

    def test_totient_series(self, sieve100):
        dec = af.bell_decompose_mult(af.make("phi", sieve100), sieve100)
        for s in dec.series:
            p = s.prime
            for k, c in enumerate(s.coeffs):
                assert c == (1 if k == 0 else p**k - p ** (k - 1))

    def test_series_lengths(self, sieve100):
        dec = af.bell_decompose_mult(af.make("u", sieve100), sieve100)
        assert dec.series_for(2).coeffs == (1,) * 7  # 2^6 = 64 <= 100 < 128
        assert len(dec.series_for(97).coeffs) == 2

    def test_rejects_non_multiplicative_with_witness(self, sieve100):
        with pytest.raises(StructureError) as exc:
            af.bell_decompose_mult(af.make("nu", sieve100), sieve100)
        assert exc.value.witness == (2, 3)

    def test_round_trip_on_divisor_sum(self, sieve1000):
        sigma1 = af.make("sigma", sieve1000, c=1)
        assert sigma1[6] == 12  # 1 + 2 + 3 + 6
        dec = af.bell_decompose_mult(sigma1, sieve1000)
        assert af.bell_reconstruct_mult(dec, sieve1000) == sigma1

    def test_reconstruct_examples(self, sieve100):
        ones = af.BellDecomposition(
            100,
            "multiplicative",
            af.RATIONAL,
            [
                af.BellSeries(p, (1,) * (sieve100.prime_power_cap(p) + 1))
                for p in sieve100.primes
            ],
        )
        assert af.bell_reconstruct_mult(ones, sieve100) == af.make("u", sieve100)
        # series 1 + p x per prime: value at 6 is 2*3
        linear = af.BellDecomposition(
            100,
            "multiplicative",
            af.RATIONAL,
            [
                af.BellSeries(p, (1, p) + (0,) * (sieve100.prime_power_cap(p) - 1))
                for p in sieve100.primes
            ],
        )
        assert af.bell_reconstruct_mult(linear, sieve100)[6] == 6

    def test_constant_term_violation_names_prime(self, sieve100):
        bad = af.BellDecomposition(
            100,
            "multiplicative",
            af.RATIONAL,
            [
                af.BellSeries(p, (1 if p != 3 else 2,) + (0,) * sieve100.prime_power_cap(p))
                for p in sieve100.primes
            ],
        )
        with pytest.raises(StructureError, match="prime 3"):
            af.bell_reconstruct_mult(bad, sieve100)

    def test_random_series_reconstruct_multiplicative(self, sieve1000):
        rng = random.Random(41)
        for _ in range(10):
            m = rand_multiplicative(rng, sieve1000, 300)
            assert af.is_multiplicative(m).ok

    def test_product_law(self, sieve1000):
        # the per-prime series of a*b is the truncated product of the series
        rng = random.Random(42)
        n = 200
        a = rand_multiplicative(rng, sieve1000, n)
        b = rand_multiplicative(rng, sieve1000, n)
        da = af.bell_decompose_mult(a, sieve1000)
        db = af.bell_decompose_mult(b, sieve1000)
        dab = af.bell_decompose_mult(a * b, sieve1000)
        for p in sieve1000.primes:
            if p > n:
                break
            length = sieve1000.prime_power_cap(p, n) + 1
            prod = af.series_mul(da.series_for(p).coeffs, db.series_for(p).coeffs, length)
            assert tuple(prod) == dab.series_for(p).coeffs


class TestPrimeSupport:
    def test_nu_decomposition(self, sieve1000):
        g = af.additive_decompose(af.make("nu", sieve1000), sieve1000)
        for (p, k), v in g.items():
            assert k == 1 and v == 1
        assert g.get(2, 2) == 0

    def test_omega_decomposition(self, sieve1000):
        g = af.additive_decompose(af.make("Omega", sieve1000), sieve1000)
        for p in sieve1000.primes:
            for k in range(1, sieve1000.prime_power_cap(p) + 1):
                assert g.get(p, k) == 1

    def test_zero_function_empty(self, sieve100):
        g = af.additive_decompose(af.ArithFn.zeros(100), sieve100)
        assert len(g) == 0
        assert af.additive_reconstruct(g, sieve100) == af.ArithFn.zeros(100)

    def test_matches_mobius_convolution_on_prime_powers(self, sieve1000):
        rng = random.Random(43)
        n = 256
        a = rand_additive(rng, sieve1000, n)
        g = af.additive_decompose(a, sieve1000)
        mu_a = af.ArithFn.ones(n).inv() * a
        for p, k, pk in (
            (p, k, p**k)
            for p in sieve1000.primes
            if p <= n
            for k in range(1, sieve1000.prime_power_cap(p, n) + 1)
        ):
            assert g.get(p, k) == mu_a[pk]

    def test_rejects_non_additive(self, sieve100):
        with pytest.raises(StructureError) as exc:
            af.additive_decompose(af.make("phi", sieve100), sieve100)
        assert exc.value.witness == (2, 3)

    def test_reconstruct_examples(self, sieve100):
        everywhere = {}
        for p in sieve100.primes:
            for k in range(1, sieve100.prime_power_cap(p) + 1):
                everywhere[(p, k)] = 1
        g = af.PrimeSupport(100, af.RATIONAL, everywhere)
        assert af.additive_reconstruct(g, sieve100) == af.make("Omega", sieve100)
        first_only = af.PrimeSupport(100, af.RATIONAL, {(p, 1): 1 for p in sieve100.primes})
        assert af.additive_reconstruct(first_only, sieve100) == af.make("nu", sieve100)

    def test_round_trip(self, sieve1000):
        rng = random.Random(44)
        for _ in range(10):
            a = rand_additive(rng, sieve1000, 300)
            g = af.additive_decompose(a, sieve1000)
            assert af.additive_reconstruct(g, sieve1000) == a
            assert af.is_additive(a).ok

    def test_bad_keys_rejected(self, sieve100):
        with pytest.raises(StructureError):
            af.PrimeSupport(100, af.RATIONAL, {(2, 0): 1})
        with pytest.raises(StructureError):
            af.PrimeSupport(100, af.RATIONAL, {(2, 7): 1})  # 128 > 100
        g = af.PrimeSupport(100, af.RATIONAL, {(6, 1): 1})  # composite base
        with pytest.raises(StructureError, match="not prime"):
            af.additive_reconstruct(g, sieve100)

    def test_json_round_trip(self, sieve100):
        g = af.additive_decompose(af.make("nu", sieve100), sieve100)
        obj = g.to_json_obj()
        assert obj[0] == {"p": 2, "k": 1, "value": "1"}
        back = af.PrimeSupport.from_json_obj(obj, 100, af.RATIONAL)
        assert back == g


class TestSeriesHelpers:
    def test_log_of_geometric_series(self):
        # log(1/(1-x)) = sum x^k / k
        coeffs = af.series_log([1] * 8, 8)
        assert coeffs == [0] + [Fraction(1, k) for k in range(1, 8)]

    def test_exp_log_round_trip(self):
        rng = random.Random(45)
        for _ in range(10):
            f = [1] + [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(7)]
            assert af.series_exp(af.series_log(f, 8), 8) == f
        for _ in range(10):
            g = [0] + [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(7)]
            assert af.series_log(af.series_exp(g, 8), 8) == g

    def test_series_mul_truncates(self):
        assert af.series_mul([1, 1, 1], [1, 1, 1], 3) == [1, 2, 3]

    def test_helpers_accept_complex_vectors(self):
        f = [1, 0.5 + 0.25j, -0.125, 0.0625j]
        back = af.series_exp(af.series_log(f, 4), 4)
        assert all(abs(back[i] - complex(f[i])) < 1e-12 for i in range(4))

    def test_preconditions(self):
        with pytest.raises(ValueError):
            af.series_log([0, 1], 2)
        with pytest.raises(ValueError):
            af.series_exp([1, 1], 2)

    def test_psi_in_bell_coordinates(self, sieve1000):
        # the additive table of psi(a) at prime p is the truncated log of
        # a's series at p, coefficient by coefficient
        rng = random.Random(46)
        n = 200
        for m in [
            af.make("u", sieve1000, bound=n),
            af.make("phi", sieve1000, bound=n),
            rand_multiplicative(rng, sieve1000, n),
        ]:
            dec = af.bell_decompose_mult(m, sieve1000)
            table = af.additive_decompose(af.psi(m), sieve1000)
            for p in sieve1000.primes:
                if p > n:
                    break
                length = sieve1000.prime_power_cap(p, n) + 1
                want = af.series_log(list(dec.series_for(p).coeffs), length)
                assert table.series_at(p, length) == want


def test_bell_series_json_shape(sieve100):
    dec = af.bell_decompose_mult(af.make("mobius", sieve100), sieve100)
    obj = dec.series_for(2).to_json_obj(af.RATIONAL)
    assert obj == {"prime": 2, "coeffs": ["1", "-1", "0", "0", "0", "0", "0"]}


def test_decomposition_kind_validation():
    with pytest.raises(ValueError):
        af.BellDecomposition(10, "weird", af.RATIONAL, [])
