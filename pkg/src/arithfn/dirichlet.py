"""The truncated ring of arithmetical functions under Dirichlet convolution.

An :class:`ArithFn` is a dense table of coefficient values a(1)..a(N).
Because (a * b)(n) = sum_{d|n} a(d) b(n/d) only reads values at divisors
of n, every operation here is *exact* on 1..N: computing at a larger bound
and then truncating gives the same table as computing at the smaller bound
directly.

Operator conventions:

    a + b      pointwise sum
    a - b      pointwise difference
    r * a      scalar multiple (r a number)
    a * b      Dirichlet convolution
    a ** k     k-fold convolution power (k = 0 gives the unit I)
    a.inv()    Dirichlet inverse (requires a(1) != 0)

The convolution kernels fix their summation order -- outer divisor d
ascending, inner multiples ascending -- so each output coefficient is a
sum over its divisors in ascending order.  In the float backend this
makes every result bit-reproducible across runs.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import (
    BackendMismatchError,
    BoundMismatchError,
    NotInvertibleError,
    UnsupportedBackendError,
)
from .numerics import COMPLEX, DEFAULT_EPS, RATIONAL, _canonical_exact


class ArithFn:
    """Arithmetical function truncated at ``bound``; immutable.

    Values are indexed 1..bound; index 0 does not exist.  Construction
    goes through :meth:`from_values` (validating) or the ``zeros`` /
    ``ones`` / ``identity`` helpers.
    """

    __slots__ = ("bound", "backend", "_v")

    def __init__(self, bound, backend, _values=None):
        if _values is None:
            raise TypeError("use ArithFn.from_values / zeros / ones / identity")
        self.bound = bound
        self.backend = backend
        self._v = _values  # tuple of length bound+1; slot 0 is dead padding

    # -- construction -------------------------------------------------

    @classmethod
    def _wrap(cls, bound, backend, padded):
        """Trusted constructor: ``padded`` is a list/tuple of length bound+1."""
        return cls(bound, backend, _values=tuple(padded))

    @classmethod
    def from_values(cls, values, backend=RATIONAL):
        """Build from the sequence [a(1), a(2), ..., a(N)]."""
        vals = [backend.convert(x) for x in values]
        if not vals:
            raise ValueError("an arithmetical function needs bound >= 1")
        return cls._wrap(len(vals), backend, [backend.zero] + vals)

    @classmethod
    def zeros(cls, bound, backend=RATIONAL):
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound}")
        return cls._wrap(bound, backend, [backend.zero] * (bound + 1))

    @classmethod
    def ones(cls, bound, backend=RATIONAL):
        """The constant-1 function u."""
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound}")
        return cls._wrap(bound, backend, [backend.zero] + [backend.one] * bound)

    @classmethod
    def identity(cls, bound, backend=RATIONAL):
        """The convolution unit I: I(1) = 1, I(n) = 0 for n > 1."""
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound}")
        padded = [backend.zero] * (bound + 1)
        padded[1] = backend.one
        return cls._wrap(bound, backend, padded)

    # -- access --------------------------------------------------------

    def __getitem__(self, n: int):
        if not 1 <= n <= self.bound:
            raise IndexError(f"index {n} outside 1..{self.bound}")
        return self._v[n]

    def values(self) -> tuple:
        """The tuple (a(1), ..., a(N))."""
        return self._v[1:]

    def items(self):
        """Iterate (n, a(n)) for n = 1..N."""
        for n in range(1, self.bound + 1):
            yield n, self._v[n]

    def __len__(self) -> int:
        return self.bound

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArithFn):
            return NotImplemented
        return (
            self.bound == other.bound
            and self.backend is other.backend
            and self._v == other._v
        )

    def __hash__(self):
        return hash((self.bound, self.backend.name, self._v))

    def approx_eq(self, other: "ArithFn", tol: float) -> bool:
        """Per-index comparison within ``tol`` (exact backend: tol ignored)."""
        if self.bound != other.bound or self.backend is not other.backend:
            return False
        eq = self.backend.eq
        return all(eq(x, y, tol) for x, y in zip(self._v[1:], other._v[1:]))

    def __repr__(self) -> str:
        head = ", ".join(self.backend.format(v) for v in self._v[1 : min(self.bound, 8) + 1])
        tail = ", ..." if self.bound > 8 else ""
        return f"ArithFn(bound={self.bound}, backend={self.backend.name}, [{head}{tail}])"

    # -- shape helpers ---------------------------------------------------

    def _check_compatible(self, other: "ArithFn") -> None:
        if not isinstance(other, ArithFn):
            raise TypeError(f"expected ArithFn, got {type(other).__name__}")
        if self.backend is not other.backend:
            raise BackendMismatchError(
                f"backend mismatch: {self.backend.name} vs {other.backend.name}"
            )
        if self.bound != other.bound:
            raise BoundMismatchError(f"bound mismatch: {self.bound} vs {other.bound}")

    def truncate(self, bound: int) -> "ArithFn":
        """Restriction to 1..bound (bound <= current bound)."""
        if not 1 <= bound <= self.bound:
            raise BoundMismatchError(
                f"cannot truncate bound {self.bound} to {bound}"
            )
        return ArithFn._wrap(bound, self.backend, self._v[: bound + 1])

    def to_backend(self, backend) -> "ArithFn":
        """Convert values; only exact -> complex widening is allowed."""
        if backend is self.backend:
            return self
        if self.backend is RATIONAL and backend is COMPLEX:
            return ArithFn._wrap(
                self.bound, COMPLEX, [complex(v) for v in self._v]
            )
        raise UnsupportedBackendError(
            f"cannot convert {self.backend.name} values to {backend.name}"
        )

    # -- pointwise ring of the codomain -----------------------------------

    def __add__(self, other: "ArithFn") -> "ArithFn":
        self._check_compatible(other)
        a, b = self._v, other._v
        return ArithFn._wrap(self.bound, self.backend, [x + y for x, y in zip(a, b)])

    def __sub__(self, other: "ArithFn") -> "ArithFn":
        self._check_compatible(other)
        a, b = self._v, other._v
        return ArithFn._wrap(self.bound, self.backend, [x - y for x, y in zip(a, b)])

    def __neg__(self) -> "ArithFn":
        return ArithFn._wrap(self.bound, self.backend, [-x for x in self._v])

    def scale(self, r) -> "ArithFn":
        """Pointwise scalar multiple r*a; r must fit the backend."""
        r = self.backend.convert(r)
        return ArithFn._wrap(self.bound, self.backend, [r * x for x in self._v])

    # -- Dirichlet ring ----------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, ArithFn):
            self._check_compatible(other)
            if self.backend is COMPLEX:
                out = _convolve_complex(self._v, other._v, self.bound)
            else:
                out = _convolve_exact(self._v, other._v, self.bound)
            return ArithFn._wrap(self.bound, self.backend, out)
        if isinstance(other, (int, float, complex, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex, Fraction)):
            return self.scale(other)
        return NotImplemented

    def inv(self, eps: float = DEFAULT_EPS) -> "ArithFn":
        """Dirichlet inverse b with (a * b) = I on 1..N.

        Requires a(1) != 0 (float backend: |a(1)| > eps).
        """
        a1 = self._v[1]
        if self.backend is COMPLEX:
            if abs(a1) <= eps:
                raise NotInvertibleError(
                    f"a(1) = {a1!r} is within eps={eps} of zero; no Dirichlet inverse"
                )
            out = _inverse_complex(self._v, self.bound)
        else:
            if a1 == 0:
                raise NotInvertibleError("a(1) = 0; no Dirichlet inverse")
            out = _inverse_exact(self._v, self.bound)
        return ArithFn._wrap(self.bound, self.backend, out)

    def __pow__(self, k: int) -> "ArithFn":
        """k-fold convolution power by binary exponentiation; a**0 = I."""
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"convolution power needs an integer k >= 0, got {k!r}")
        result = ArithFn.identity(self.bound, self.backend)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- analytic-flavoured extras ---------------------------------------

    def deriv(self) -> "ArithFn":
        """Log-weighted derivative a'(n) = a(n) ln n (float backend only)."""
        if self.backend is not COMPLEX:
            raise UnsupportedBackendError(
                "derivative multiplies by ln n, which is irrational for n >= 2; "
                "use the complex backend"
            )
        v = self._v
        out = [0j] * (self.bound + 1)
        for n in range(2, self.bound + 1):
            out[n] = v[n] * math.log(n)
        return ArithFn._wrap(self.bound, COMPLEX, out)

    def valuation(self, eps: float = DEFAULT_EPS) -> int | None:
        """Least n with a(n) != 0, or None for the zero function."""
        is_zero = self.backend.is_zero
        for n in range(1, self.bound + 1):
            if not is_zero(self._v[n], eps):
                return n
        return None

    def support(self, eps: float = DEFAULT_EPS) -> list[int]:
        """Ascending list of all n <= N with a(n) != 0."""
        is_zero = self.backend.is_zero
        return [n for n in range(1, self.bound + 1) if not is_zero(self._v[n], eps)]


# ---------------------------------------------------------------------------
# kernels
#
# Both backends share the same loop structure: outer divisor d ascending,
# inner multiples of d ascending.  Contributions to any output index thus
# arrive in ascending divisor order, which pins the float summation order.
# ---------------------------------------------------------------------------


def _convolve_exact(av, bv, n: int) -> list:
    out = [0] * (n + 1)
    for d in range(1, n + 1):
        ad = av[d]
        if not ad:
            continue
        top = n // d
        out[d :: d] = [x + ad * y for x, y in zip(out[d :: d], bv[1 : top + 1])]
    return out


def _conv_np(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros(n + 1, dtype=np.complex128)
    for d in range(1, n + 1):
        ad = a[d]
        if ad == 0:
            continue
        top = n // d
        out[d :: d] += ad * b[1 : top + 1]
    return out


def _convolve_complex(av, bv, n: int) -> list:
    a = np.asarray(av, dtype=np.complex128)
    b = np.asarray(bv, dtype=np.complex128)
    return _conv_np(a, b, n).tolist()


def _inverse_exact(av, n: int) -> list:
    # b(1) = 1/a(1); b(n) = -(1/a(1)) * sum_{d|n, d<n} b(d) a(n/d).
    # Contributions are pushed forward as soon as b(d) is final, so the
    # whole inverse costs one sieve-shaped pass: O(N log N) operations.
    a1 = av[1]
    inv1 = a1 if a1 == 1 or a1 == -1 else Fraction(1, 1) / a1
    acc = [0] * (n + 1)
    b = [0] * (n + 1)
    for d in range(1, n + 1):
        bd = inv1 if d == 1 else -inv1 * acc[d]
        b[d] = bd
        if not bd:
            continue
        top = n // d
        if top >= 2:
            acc[2 * d :: d] = [
                x + bd * y for x, y in zip(acc[2 * d :: d], av[2 : top + 1])
            ]
    return [_canonical_exact(x) if isinstance(x, Fraction) else x for x in b]


def _inverse_complex(av, n: int) -> list:
    a = np.asarray(av, dtype=np.complex128)
    inv1 = 1.0 / a[1]
    acc = np.zeros(n + 1, dtype=np.complex128)
    b = np.zeros(n + 1, dtype=np.complex128)
    for d in range(1, n + 1):
        bd = inv1 if d == 1 else -inv1 * acc[d]
        b[d] = bd
        if bd == 0:
            continue
        top = n // d
        if top >= 2:
            acc[2 * d :: d] += bd * a[2 : top + 1]
    return b.tolist()
