"""Structure predicates and per-prime decompositions.

A multiplicative function is determined by its values on prime powers:
it factors as a per-prime family of truncated power series ("Bell
series") f_p(x) = 1 + a(p)x + a(p^2)x^2 + ... and, conversely, any such
family with constant terms 1 multiplies out to a multiplicative function.
An additive function is u-convolved from a sparse table supported on
prime powers: a = u * g with g(p, k) = a(p^k) - a(p^(k-1)), and g is
exactly mu * a.  That last identity also yields an alternative additivity
test: a is additive iff (mu * a)(n) = 0 whenever n is not a prime power
(including n = 1).

The predicates here scan every coprime pair (m, n), m < n, m*n <= N, in
lexicographic order, so a failing function always reports its least
witness deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .dirichlet import ArithFn
from .errors import StructureError
from .numerics import _canonical_exact
from .sieve import SpfSieve, build_sieve


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a structure predicate.

    ``witness`` disproves the property when ``ok`` is false:
    a coprime pair (m, n), a prime power (p, k), or a single index n,
    per ``witness_kind`` in {"pair", "prime_power", "index"}.
    ``constants`` reports c_p = a(p) per prime for passing
    completely-multiplicative / completely-additive checks.
    """

    ok: bool
    kind: str
    witness: tuple | int | None = None
    witness_kind: str | None = None
    constants: dict | None = None

    def __bool__(self) -> bool:
        return self.ok


def _ensure_sieve(sieve: SpfSieve | None, bound: int) -> SpfSieve:
    if sieve is None:
        return build_sieve(bound)
    if sieve.bound < bound:
        raise ValueError(f"sieve bound {sieve.bound} < required {bound}")
    return sieve


def _prime_powers(sieve: SpfSieve, bound: int):
    """Yield (p, k, p**k) for every prime power <= bound, p then k ascending."""
    for p in sieve.primes:
        if p > bound:
            break
        pk = p
        k = 1
        while pk <= bound:
            yield p, k, pk
            pk *= p
            k += 1


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------


def is_multiplicative(a: ArithFn, tol: float | None = None) -> CheckResult:
    """a(1) = 1 and a(mn) = a(m) a(n) for coprime m, n >= 2 with mn <= N.

    The witness is the lexicographically least coprime pair violating the
    product law; if the law holds on every pair and only the unit value is
    wrong, the conventional witness (1, 1) flags index 1.
    """
    eq = a.backend.eq
    n_max = a.bound
    for m in range(2, n_max + 1):
        if m * (m + 1) > n_max:
            break
        am = a[m]
        for k in range(m + 1, n_max // m + 1):
            if gcd(m, k) == 1 and not eq(a[m * k], am * a[k], tol):
                return CheckResult(False, "multiplicative", (m, k), "pair")
    if not eq(a[1], a.backend.one, tol):
        return CheckResult(False, "multiplicative", (1, 1), "pair")
    return CheckResult(True, "multiplicative")


def is_additive(a: ArithFn, tol: float | None = None) -> CheckResult:
    """a(1) = 0 and a(mn) = a(m) + a(n) for coprime m, n >= 2 with mn <= N.

    a(1) = 0 is forced by taking m = n = 1.  Witness convention as in
    :func:`is_multiplicative`: least failing sum-law pair, else (1, 1).
    """
    eq = a.backend.eq
    n_max = a.bound
    for m in range(2, n_max + 1):
        if m * (m + 1) > n_max:
            break
        am = a[m]
        for k in range(m + 1, n_max // m + 1):
            if gcd(m, k) == 1 and not eq(a[m * k], am + a[k], tol):
                return CheckResult(False, "additive", (m, k), "pair")
    if not eq(a[1], a.backend.zero, tol):
        return CheckResult(False, "additive", (1, 1), "pair")
    return CheckResult(True, "additive")


def is_completely_multiplicative(
    a: ArithFn, sieve: SpfSieve | None = None, tol: float | None = None
) -> CheckResult:
    """Multiplicative and a(p^k) = a(p)^k on every prime power <= N.

    At truncation the prime-power criterion plus plain multiplicativity
    is equivalent to a(mn) = a(m) a(n) for all m, n; scanning the O(N)
    prime powers is far cheaper than scanning all pairs.
    """
    base = is_multiplicative(a, tol)
    if not base:
        return CheckResult(False, "completely-multiplicative", base.witness, base.witness_kind)
    sieve = _ensure_sieve(sieve, a.bound)
    eq = a.backend.eq
    constants = {}
    for p, k, pk in _prime_powers(sieve, a.bound):
        if k == 1:
            constants[p] = a[p]
        elif not eq(a[pk], constants[p] ** k, tol):
            return CheckResult(False, "completely-multiplicative", (p, k), "prime_power")
    return CheckResult(True, "completely-multiplicative", constants=constants)


def is_completely_additive(
    a: ArithFn, sieve: SpfSieve | None = None, tol: float | None = None
) -> CheckResult:
    """Additive and a(p^k) = k a(p) on every prime power <= N."""
    base = is_additive(a, tol)
    if not base:
        return CheckResult(False, "completely-additive", base.witness, base.witness_kind)
    sieve = _ensure_sieve(sieve, a.bound)
    eq = a.backend.eq
    constants = {}
    for p, k, pk in _prime_powers(sieve, a.bound):
        if k == 1:
            constants[p] = a[p]
        elif not eq(a[pk], k * constants[p], tol):
            return CheckResult(False, "completely-additive", (p, k), "prime_power")
    return CheckResult(True, "completely-additive", constants=constants)


def mobius_additivity_test(
    a: ArithFn, sieve: SpfSieve | None = None, tol: float | None = None
) -> CheckResult:
    """Additivity via convolution: mu * a must vanish at 1 and at every
    n with two or more distinct prime factors.  Agrees with
    :func:`is_additive` on every input; the witness is the least failing
    index n."""
    sieve = _ensure_sieve(sieve, a.bound)
    mu = ArithFn.ones(a.bound, a.backend).inv()
    g = mu * a
    eq = a.backend.eq
    zero = a.backend.zero
    if not eq(g[1], zero, tol):
        return CheckResult(False, "additive-mobius", 1, "index")
    for n in range(2, a.bound + 1):
        if sieve.prime_power_part(n) is None and not eq(g[n], zero, tol):
            return CheckResult(False, "additive-mobius", n, "index")
    return CheckResult(True, "additive-mobius")


# ---------------------------------------------------------------------------
# Bell decompositions (multiplicative side)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BellSeries:
    """Truncated per-prime power series: coeffs[k] is the coefficient of
    x^k, i.e. the function's value at p^k; len(coeffs) = floor(log_p N) + 1."""

    prime: int
    coeffs: tuple

    def to_json_obj(self, backend) -> dict:
        return {"prime": self.prime, "coeffs": [backend.to_json(c) for c in self.coeffs]}


class BellDecomposition:
    """One BellSeries per prime <= bound, plus which kind of function it
    reassembles into: "multiplicative" (constant terms 1, values multiply
    across primes) or "additive" (constant terms 0, values add)."""

    __slots__ = ("bound", "kind", "backend", "series", "_by_prime")

    def __init__(self, bound: int, kind: str, backend, series):
        if kind not in ("multiplicative", "additive"):
            raise ValueError(f"unknown decomposition kind {kind!r}")
        self.bound = bound
        self.kind = kind
        self.backend = backend
        self.series = tuple(series)
        self._by_prime = {s.prime: s for s in self.series}

    def series_for(self, p: int) -> BellSeries:
        try:
            return self._by_prime[p]
        except KeyError:
            raise ValueError(f"no series for prime {p}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, BellDecomposition):
            return NotImplemented
        return (
            self.bound == other.bound
            and self.kind == other.kind
            and self.backend is other.backend
            and self.series == other.series
        )

    def __repr__(self) -> str:
        return (
            f"BellDecomposition(bound={self.bound}, kind={self.kind!r}, "
            f"primes={len(self.series)})"
        )


def bell_decompose_mult(
    a: ArithFn, sieve: SpfSieve | None = None, tol: float | None = None
) -> BellDecomposition:
    """Split a multiplicative function into its per-prime series.

    Raises StructureError carrying the witness pair if the input is not
    multiplicative; a silent decomposition of a non-multiplicative input
    would reconstruct into garbage.
    """
    check = is_multiplicative(a, tol)
    if not check:
        raise StructureError(
            f"input is not multiplicative (witness {check.witness})",
            witness=check.witness,
        )
    sieve = _ensure_sieve(sieve, a.bound)
    one = a.backend.one
    series = []
    for p in sieve.primes:
        if p > a.bound:
            break
        coeffs = [one]
        pk = p
        while pk <= a.bound:
            coeffs.append(a[pk])
            pk *= p
        series.append(BellSeries(p, tuple(coeffs)))
    return BellDecomposition(a.bound, "multiplicative", a.backend, series)


def bell_reconstruct_mult(dec: BellDecomposition, sieve: SpfSieve | None = None) -> ArithFn:
    """Multiply the per-prime series back out: a(p1^a1...pk^ak) is the
    product of the per-prime coefficients; a(1) = 1 (empty product)."""
    backend = dec.backend
    for s in dec.series:
        if s.coeffs[0] != backend.one:
            raise StructureError(
                f"constant term of the series at prime {s.prime} must be 1, "
                f"got {backend.format(s.coeffs[0])}",
                witness=s.prime,
            )
    sieve = _ensure_sieve(sieve, dec.bound)
    by_prime = {s.prime: s.coeffs for s in dec.series}
    out = [backend.zero] * (dec.bound + 1)
    out[1] = backend.one
    for n in range(2, dec.bound + 1):
        acc = backend.one
        for p, k in sieve.factorize(n):
            acc = acc * by_prime[p][k]
        out[n] = acc
    return ArithFn._wrap(dec.bound, backend, out)


# ---------------------------------------------------------------------------
# prime-support decompositions (additive side)
# ---------------------------------------------------------------------------


class PrimeSupport:
    """Sparse table g(p, k) on prime powers p^k <= bound.

    Represents a function vanishing at 1 and at every index with two or
    more distinct prime factors; missing keys read as zero.
    """

    __slots__ = ("bound", "backend", "_entries")

    def __init__(self, bound: int, backend, entries: dict | None = None):
        self.bound = bound
        self.backend = backend
        table = {}
        for (p, k), v in (entries or {}).items():
            if k < 1 or p < 2 or p**k > bound:
                raise StructureError(
                    f"key ({p}, {k}) is not a prime power within bound {bound}",
                    witness=(p, k),
                )
            v = backend.convert(v)
            if v != backend.zero:
                table[(p, k)] = v
        self._entries = table

    def get(self, p: int, k: int):
        return self._entries.get((p, k), self.backend.zero)

    def items(self):
        """Entries sorted by (p, k)."""
        return sorted(self._entries.items())

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PrimeSupport):
            return NotImplemented
        return (
            self.bound == other.bound
            and self.backend is other.backend
            and self._entries == other._entries
        )

    def series_at(self, p: int, length: int) -> list:
        """Coefficient vector [0, g(p,1), g(p,2), ...] of given length."""
        return [self.backend.zero] + [self.get(p, k) for k in range(1, length)]

    def to_json_obj(self) -> list:
        enc = self.backend.to_json
        return [{"p": p, "k": k, "value": enc(v)} for (p, k), v in self.items()]

    @classmethod
    def from_json_obj(cls, obj, bound: int, backend) -> "PrimeSupport":
        entries = {}
        for row in obj:
            entries[(int(row["p"]), int(row["k"]))] = backend.from_json(row["value"])
        return cls(bound, backend, entries)

    def __repr__(self) -> str:
        return f"PrimeSupport(bound={self.bound}, entries={len(self._entries)})"


def additive_decompose(
    a: ArithFn, sieve: SpfSieve | None = None, tol: float | None = None
) -> PrimeSupport:
    """Difference the prime-power values of an additive function:
    g(p, k) = a(p^k) - a(p^(k-1)); g equals mu * a on prime powers."""
    check = is_additive(a, tol)
    if not check:
        raise StructureError(
            f"input is not additive (witness {check.witness})",
            witness=check.witness,
        )
    sieve = _ensure_sieve(sieve, a.bound)
    entries = {}
    for p, k, pk in _prime_powers(sieve, a.bound):
        prev = a[pk // p] if k > 1 else a[1]
        entries[(p, k)] = a[pk] - prev
    return PrimeSupport(a.bound, a.backend, entries)


def additive_reconstruct(g: PrimeSupport, sieve: SpfSieve | None = None) -> ArithFn:
    """Sum g over the prime-power divisors of each index: the u-convolution
    of g's zero-extension, evaluated directly.  Keys must be genuine prime
    powers; a composite base is an invariant violation."""
    sieve = _ensure_sieve(sieve, g.bound)
    for (p, k), _ in g.items():
        if not sieve.is_prime(p):
            raise StructureError(
                f"key ({p}, {k}): base {p} is not prime", witness=(p, k)
            )
    backend = g.backend
    out = [backend.zero] * (g.bound + 1)
    for n in range(2, g.bound + 1):
        acc = backend.zero
        for p, alpha in sieve.factorize(n):
            for k in range(1, alpha + 1):
                acc = acc + g.get(p, k)
        out[n] = acc
    return ArithFn._wrap(g.bound, backend, out)


# ---------------------------------------------------------------------------
# truncated one-variable power series helpers
#
# The same alternating/factorial series as the ring-level operators,
# specialized to a single prime coordinate.  Fraction coefficients keep the
# exact backend exact; multiplied into complex values they degrade to
# complex, so one code path serves both.
# ---------------------------------------------------------------------------


def series_mul(f, g, length: int) -> list:
    """Product of coefficient vectors, truncated to ``length`` coefficients."""
    out = [0] * length
    for i, fi in enumerate(f[:length]):
        if not fi:
            continue
        for j, gj in enumerate(g[: length - i]):
            if gj:
                out[i + j] = out[i + j] + fi * gj
    return [_canonical_exact(x) if isinstance(x, Fraction) else x for x in out]


def series_log(f, length: int) -> list:
    """log of a power series with constant term 1, truncated."""
    if not f or f[0] != 1:
        raise ValueError("series_log needs constant term 1")
    u = [0] + list(f[1:length])
    acc = [0] * length
    pw = [1] + [0] * (length - 1)
    for k in range(1, length):
        pw = series_mul(pw, u, length)
        c = Fraction(-1 if k % 2 == 0 else 1, k)
        for i in range(length):
            if pw[i]:
                acc[i] = acc[i] + c * pw[i]
    return [_canonical_exact(x) if isinstance(x, Fraction) else x for x in acc]


def series_exp(f, length: int) -> list:
    """exp of a power series with constant term 0, truncated."""
    if not f or f[0] != 0:
        raise ValueError("series_exp needs constant term 0")
    u = [0] + list(f[1:length])
    acc = [1] + [0] * (length - 1)
    pw = [1] + [0] * (length - 1)
    fact = 1
    for k in range(1, length):
        pw = series_mul(pw, u, length)
        fact *= k
        c = Fraction(1, fact)
        for i in range(length):
            if pw[i]:
                acc[i] = acc[i] + c * pw[i]
    return [_canonical_exact(x) if isinstance(x, Fraction) else x for x in acc]
