"""Formal log/exp on the Dirichlet ring and the Psi transform.

For b with b(1) = 0 the convolution power b**k vanishes at every n with
k > Omega(n), and Omega(n) <= log2(n).  The alternating/factorial series

    dlog(a) = sum_{k>=1} (-1)^(k-1) (a - I)**k / k        (a(1) = 1)
    dexp(a) = I + sum_{k>=1} a**k / k!                    (a(1) = 0)

are therefore *finite* on 1..N once truncated after K = floor(log2 N)
terms: every later term is identically zero.  Both maps are mutually
inverse bijections, and they exchange the two group laws:

    dlog(a * b) = dlog(a) + dlog(b),   dexp(a + b) = dexp(a) * dexp(b).

Composing with convolution by u (all ones) and its inverse mu gives the
transform

    psi(a)     = u * dlog(a)          psi_inv(a) = dexp(mu * a)

which carries multiplicative functions (a group under convolution) onto
additive functions (a group under pointwise sum) and back.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .dirichlet import ArithFn, _conv_np, _convolve_exact
from .errors import DomainError
from .numerics import COMPLEX, _canonical_exact


def _series_length(bound: int, extra_terms: int) -> int:
    # floor(log2 bound): terms beyond it are identically zero on 1..bound.
    return max(bound.bit_length() - 1, 0) + extra_terms


def _require_unit_value(a: ArithFn, want, op: str) -> None:
    if a[1] != want:
        raise DomainError(
            f"{op} needs a(1) = {a.backend.format(want)}, "
            f"got a(1) = {a.backend.format(a[1])}",
            value=a[1],
        )


def dlog(a: ArithFn, *, normalize_unit: bool = False, extra_terms: int = 0) -> ArithFn:
    """Formal logarithm; domain a(1) = 1, image has value 0 at index 1.

    ``normalize_unit`` divides the input pointwise by a(1) first instead
    of rejecting a(1) != 1 (off by default: silently normalizing would
    mask data errors).  ``extra_terms`` appends terms beyond the exact
    truncation length; they are provably zero and exist so tests can
    check exactly that.
    """
    if normalize_unit and a[1] != a.backend.one:
        if a.backend.is_zero(a[1]):
            raise DomainError("cannot normalize: a(1) = 0", value=a[1])
        w = (1.0 if a.backend is COMPLEX else Fraction(1, 1)) / a[1]
        vals = [w * x for x in a._v]
        vals[1] = a.backend.one  # a(1)/a(1) can miss 1.0 by an ulp in floats
        a = ArithFn._wrap(a.bound, a.backend, vals)
    _require_unit_value(a, a.backend.one, "dlog")
    n = a.bound
    terms = _series_length(n, extra_terms)

    if a.backend is COMPLEX:
        b = np.asarray(a._v, dtype=np.complex128)
        b[1] = 0.0
        acc = np.zeros(n + 1, dtype=np.complex128)
        pw = b
        for k in range(1, terms + 1):
            if k > 1:
                pw = _conv_np(pw, b, n)
            acc += ((-1.0) ** (k - 1) / k) * pw
        return ArithFn._wrap(n, COMPLEX, acc.tolist())

    b = list(a._v)
    b[1] = 0
    acc = [0] * (n + 1)
    pw = b
    for k in range(1, terms + 1):
        if k > 1:
            pw = _convolve_exact(pw, b, n)
        if k == 1:
            for i in range(2, n + 1):
                if pw[i]:
                    acc[i] = acc[i] + pw[i]
        else:
            c = Fraction(-1 if k % 2 == 0 else 1, k)
            for i in range(2, n + 1):
                if pw[i]:
                    acc[i] = acc[i] + c * pw[i]
    return ArithFn._wrap(n, a.backend, [_canonical_exact(x) for x in acc])


def dexp(a: ArithFn, *, extra_terms: int = 0) -> ArithFn:
    """Formal exponential; domain a(1) = 0, image has value 1 at index 1."""
    _require_unit_value(a, a.backend.zero, "dexp")
    n = a.bound
    terms = _series_length(n, extra_terms)

    if a.backend is COMPLEX:
        b = np.asarray(a._v, dtype=np.complex128)
        acc = np.zeros(n + 1, dtype=np.complex128)
        acc[1] = 1.0
        pw = np.zeros(n + 1, dtype=np.complex128)
        pw[1] = 1.0
        fact = 1
        for k in range(1, terms + 1):
            pw = _conv_np(pw, b, n)
            fact *= k
            acc += (1.0 / fact) * pw
        return ArithFn._wrap(n, COMPLEX, acc.tolist())

    acc = [0] * (n + 1)
    acc[1] = 1
    pw = [0] * (n + 1)
    pw[1] = 1
    fact = 1
    for k in range(1, terms + 1):
        pw = _convolve_exact(pw, a._v, n)
        fact *= k
        if fact == 1:
            for i in range(2, n + 1):
                if pw[i]:
                    acc[i] = acc[i] + pw[i]
        else:
            c = Fraction(1, fact)
            for i in range(2, n + 1):
                if pw[i]:
                    acc[i] = acc[i] + c * pw[i]
    return ArithFn._wrap(n, a.backend, [_canonical_exact(x) for x in acc])


def psi(a: ArithFn, *, normalize_unit: bool = False) -> ArithFn:
    """u * dlog(a): takes convolution of functions with a(1) = 1 to
    pointwise sum; multiplicative inputs land on additive outputs."""
    u = ArithFn.ones(a.bound, a.backend)
    return u * dlog(a, normalize_unit=normalize_unit)


def psi_inv(a: ArithFn) -> ArithFn:
    """dexp(mu * a), the two-sided inverse of :func:`psi`."""
    _require_unit_value(a, a.backend.zero, "psi_inv")
    mu = ArithFn.ones(a.bound, a.backend).inv()
    return dexp(mu * a)
