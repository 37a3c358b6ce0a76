"""Quaternion lifts of the scalar sequences.

The lift of a sequence X is ``QX[n] = X[n] + X[n+1] i + X[n+2] j + X[n+3] k``
in the Hamilton algebra Q(-1, -1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .quaternions import ZZ, CoefficientRing, PrimeField, Quaternion
from .sequences import (
    FIBONACCI,
    Kind,
    SequenceFamily,
    iter_mod,
    term,
    terms,
)

__all__ = [
    "UNIT_I",
    "SeriesExpansion",
    "quaternion_term",
    "quaternion_terms_mod",
    "norm_closed_form_lucas_leonardo",
    "norm_closed_form_francois",
    "gf_coefficients",
    "quaternion_recurrence_check",
]

#: ``1 + i + j + k``; norm 4 in the Hamilton algebra.
UNIT_I = Quaternion(1, 1, 1, 1)


def quaternion_term(family: SequenceFamily, n: int, ring: CoefficientRing = ZZ) -> Quaternion:
    """The ``n``-th quaternion of `family`, reduced into `ring`.

    >>> str(quaternion_term(SequenceFamily("lucas-leonardo", 1), 0))
    '3 + 1 i + 5 j + 7 k'
    """
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    return Quaternion(*terms(family, n, n + 3), ring=ring)


def quaternion_terms_mod(family: SequenceFamily, q: int, count: int) -> list[Quaternion]:
    """First `count` quaternions of `family` over GF(q), from residues only."""
    field = PrimeField(q)
    it = iter_mod(family, q)
    window = [next(it) for _ in range(3)]
    out = []
    for _ in range(count):
        window.append(next(it))
        out.append(Quaternion(*window, ring=field))
        window.pop(0)
    return out


def _fib(n: int) -> int:
    return term(FIBONACCI, n)


def norm_closed_form_lucas_leonardo(n: int) -> int:
    """Norm of the ``n``-th Lucas-Leonardo quaternion (p = 1): ``4(15 F(2n+3) - 5 F(n+3) + 1)``."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    return 4 * (15 * _fib(2 * n + 3) - 5 * _fib(n + 3) + 1)


def norm_closed_form_francois(n: int) -> int:
    """Norm of the ``n``-th Francois quaternion in terms of Fibonacci numbers."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    F = _fib
    return 39 * F(2 * n + 1) + 48 * F(2 * n + 2) - 34 * F(n + 1) - 18 * F(n) + 4


@dataclass(frozen=True)
class SeriesExpansion:
    p: int
    count: int
    coefficients: tuple[Quaternion, ...]


def _poly_mul(f: list, g: list) -> list:
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] = out[i + j] + x * y
    return out


def gf_coefficients(p: int, count: int) -> SeriesExpansion:
    """Power-series coefficients of the Lucas-Leonardo p-quaternion generating function.

    With ``A(x) = QR[0] + sum_{n=1..p} (QR[n] - QR[n-1]) x^n`` the generating
    function is ``(A(x) + p I x^(p+1) / (1 - x)) / (1 - x - x^(p+1))``.
    Clearing denominators gives ``G(x) D(x) = P(x)`` with
    ``D = (1 - x)(1 - x - x^(p+1))`` and ``P = (1 - x) A(x) + p I x^(p+1)``;
    the coefficients of ``G`` follow by forward substitution since ``D(0) = 1``.
    """
    if p < 1 or count < 1:
        raise ValueError(f"need p >= 1 and count >= 1, got p={p}, count={count}")
    family = SequenceFamily(Kind.LUCAS_LEONARDO, p)
    qr = [quaternion_term(family, n) for n in range(p + 1)]
    zero = Quaternion()

    numer_a = [qr[0]] + [qr[n] - qr[n - 1] for n in range(1, p + 1)]
    numer = _poly_mul([1, -1], numer_a)
    numer += [zero] * (p + 2 - len(numer))
    numer[p + 1] = numer[p + 1] + p * UNIT_I

    denom = _poly_mul([1, -1], [1, -1] + [0] * (p - 1) + [-1])
    assert denom[0] == 1

    coeffs: list[Quaternion] = []
    for n in range(count):
        g = numer[n] if n < len(numer) else zero
        for d in range(1, min(n, len(denom) - 1) + 1):
            if denom[d]:
                g = g - denom[d] * coeffs[n - d]
        coeffs.append(g)
    return SeriesExpansion(p, count, tuple(coeffs))


def quaternion_recurrence_check(p: int, n: int, form: str = "r1") -> bool:
    """Check one of the two Lucas-Leonardo p-quaternion recurrences at ``(p, n)``.

    ``r1``: ``QR[n] = QR[n-1] + QR[n-p-1] + p I`` for n > p.
    ``r2``: ``QR[n] = QR[n-1] + QR[n-p] - QR[n-2p-1]`` for n > 2p.
    """
    family = SequenceFamily(Kind.LUCAS_LEONARDO, p)
    QR = lambda m: quaternion_term(family, m)  # noqa: E731
    if form == "r1":
        if n <= p:
            raise ValueError(f"r1 needs n > p, got p={p}, n={n}")
        return QR(n) == QR(n - 1) + QR(n - p - 1) + p * UNIT_I
    if form == "r2":
        if n <= 2 * p:
            raise ValueError(f"r2 needs n > 2p, got p={p}, n={n}")
        return QR(n) == QR(n - 1) + QR(n - p) - QR(n - 2 * p - 1)
    raise ValueError(f"unknown recurrence form {form!r}")
