"""Scalar Leonardo-family sequences, exact and modulo a prime.

Five families are supported, all 0-indexed:

==================  ==========================  =========================
kind                initial block               step
==================  ==========================  =========================
``fibonacci``       0, 1, ..., 1  (p ones)      X[n-1] + X[n-p-1]
``lucas``           p+1, 1, ..., 1              X[n-1] + X[n-p-1]
``leonardo``        1, 1, ..., 1  (p+1 ones)    X[n-1] + X[n-p-1] + p
``lucas-leonardo``  p^2+p+1, 1, ..., 1          X[n-1] + X[n-p-1] + p
``francois``        2, 1          (p = 1 only)  X[n-1] + X[n-2] + 1
==================  ==========================  =========================
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator

from sympy import isprime

__all__ = [
    "Kind",
    "SequenceFamily",
    "PisanoPeriod",
    "SequencePeriod",
    "FIBONACCI",
    "LUCAS",
    "LEONARDO",
    "LUCAS_LEONARDO",
    "FRANCOIS",
    "check_odd_prime",
    "term",
    "terms",
    "term_mod",
    "iter_mod",
    "pisano_period",
    "sequence_period_mod",
]


class Kind(str, Enum):
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"
    LEONARDO = "leonardo"
    LUCAS_LEONARDO = "lucas-leonardo"
    FRANCOIS = "francois"


@dataclass(frozen=True)
class SequenceFamily:
    """One scalar sequence: a `Kind` together with its order ``p``."""

    kind: Kind
    p: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise TypeError(f"order p must be an int, got {self.p!r}")
        if self.p < 1:
            raise ValueError(f"order p must be >= 1, got {self.p}")
        if self.kind is Kind.FRANCOIS and self.p != 1:
            raise ValueError("the Francois sequence is only defined for p = 1")

    @property
    def initial(self) -> tuple[int, ...]:
        p = self.p
        if self.kind is Kind.FIBONACCI:
            return (0,) + (1,) * p
        if self.kind is Kind.LUCAS:
            return (p + 1,) + (1,) * p
        if self.kind is Kind.LEONARDO:
            return (1,) * (p + 1)
        if self.kind is Kind.LUCAS_LEONARDO:
            return (p * p + p + 1,) + (1,) * p
        return (2, 1)

    @property
    def constant(self) -> int:
        """The inhomogeneous term added at every step (0 for Fibonacci/Lucas)."""
        if self.kind in (Kind.FIBONACCI, Kind.LUCAS):
            return 0
        return self.p

    def __str__(self):
        if self.kind is Kind.FRANCOIS:
            return self.kind.value
        return f"{self.kind.value}(p={self.p})"


FIBONACCI = SequenceFamily(Kind.FIBONACCI, 1)
LUCAS = SequenceFamily(Kind.LUCAS, 1)
LEONARDO = SequenceFamily(Kind.LEONARDO, 1)
LUCAS_LEONARDO = SequenceFamily(Kind.LUCAS_LEONARDO, 1)
FRANCOIS = SequenceFamily(Kind.FRANCOIS, 1)


@dataclass(frozen=True)
class PisanoPeriod:
    modulus: int
    length: int
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class SequencePeriod:
    family: SequenceFamily
    modulus: int
    length: int
    cycle: tuple[int, ...]


def check_odd_prime(q: int) -> int:
    if isinstance(q, bool) or not isinstance(q, int) or q == 2 or not isprime(q):
        raise ValueError(f"modulus must be an odd prime, got {q!r}")
    return q


def _check_index(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"index must be an int, got {n!r}")
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")


class _TermCache:
    # Appends happen under the lock; readers index into the list without it,
    # which is safe because entries are never mutated once written.
    def __init__(self, family: SequenceFamily):
        self.family = family
        self.values = list(family.initial)
        self.lock = threading.Lock()

    def ensure(self, n: int) -> list[int]:
        if n < len(self.values):
            return self.values
        with self.lock:
            vals = self.values
            lag = self.family.p + 1
            c = self.family.constant
            while len(vals) <= n:
                vals.append(vals[-1] + vals[-lag] + c)
        return self.values


_caches: dict[SequenceFamily, _TermCache] = {}
_caches_lock = threading.Lock()


def _cache(family: SequenceFamily) -> _TermCache:
    cache = _caches.get(family)
    if cache is None:
        with _caches_lock:
            cache = _caches.setdefault(family, _TermCache(family))
    return cache


def term(family: SequenceFamily, n: int) -> int:
    """Exact ``n``-th term of `family`.

    >>> term(LUCAS_LEONARDO, 4)
    13
    >>> term(FRANCOIS, 3)
    6
    """
    _check_index(n)
    return _cache(family).ensure(n)[n]


def terms(family: SequenceFamily, n_start: int, n_end: int) -> list[int]:
    """Terms ``n_start`` through ``n_end`` inclusive."""
    _check_index(n_start)
    _check_index(n_end)
    if n_end < n_start:
        raise ValueError(f"empty range {n_start}..{n_end}")
    return _cache(family).ensure(n_end)[n_start:n_end + 1]


def iter_mod(family: SequenceFamily, q: int) -> Iterator[int]:
    """Endless stream of residues ``term(family, n) % q`` for n = 0, 1, ..."""
    window: deque[int] = deque(maxlen=family.p + 1)
    c = family.constant % q
    for x in family.initial:
        x %= q
        window.append(x)
        yield x
    while True:
        x = (window[-1] + window[0] + c) % q
        window.append(x)
        yield x


def term_mod(family: SequenceFamily, n: int, q: int) -> int:
    """``term(family, n) % q`` computed with residues only, in O(n) steps."""
    _check_index(n)
    check_odd_prime(q)
    for i, x in enumerate(iter_mod(family, q)):
        if i == n:
            return x
    raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def pisano_period(m: int) -> PisanoPeriod:
    """Minimal period of the Fibonacci numbers modulo ``m``.

    >>> pisano_period(3).cycle
    (0, 1, 1, 2, 0, 2, 2, 1)
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")
    cycle = []
    a, b = 0, 1
    # pi(m) <= 6m, so the scan always terminates within this bound
    for _ in range(6 * m):
        cycle.append(a)
        a, b = b, (a + b) % m
        if (a, b) == (0, 1):
            return PisanoPeriod(m, len(cycle), tuple(cycle))
    raise AssertionError(f"no period found for m={m}")


@lru_cache(maxsize=None)
def sequence_period_mod(family: SequenceFamily, q: int) -> SequencePeriod:
    """Minimal period of `family` reduced modulo the odd prime ``q``.

    The state is the last p+1 residues. The step map is invertible
    (X[n-p-1] = X[n] - X[n-1] - c), so the orbit is purely periodic and the
    period is the first return to the initial state.
    """
    check_odd_prime(q)
    k = family.p + 1
    bound = q**k
    residues = iter_mod(family, q)
    start = tuple(next(residues) for _ in range(k))
    cycle = list(start)
    state = deque(start, maxlen=k)
    for length in range(1, bound + 1):
        x = next(residues)
        state.append(x)
        if tuple(state) == start:
            return SequencePeriod(family, q, length, tuple(cycle[:length]))
        cycle.append(x)
    raise AssertionError(f"period of {family} mod {q} exceeds {bound}")
