"""Generalized quaternion algebras Q(a, b) over the integers or a prime field.

Elements are immutable. Over a prime field every coefficient is stored as its
canonical residue in ``[0, q)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Union

import numpy as np

from .sequences import check_odd_prime

__all__ = [
    "IntegerRing",
    "PrimeField",
    "ZZ",
    "CoefficientRing",
    "NotInvertibleError",
    "Quaternion",
    "MULTIPLICATION_TABLE",
    "add",
    "mul",
    "conjugate",
    "norm",
    "is_zero_divisor",
    "inverse",
    "annihilator_witness",
    "brute_force_annihilator",
]


class NotInvertibleError(ArithmeticError):
    pass


class IntegerRing:
    """The exact integers. Use the module-level `ZZ` instance."""

    modulus = None

    def reduce(self, x: int) -> int:
        return x

    def inv(self, x: int) -> int:
        if x in (1, -1):
            return x
        raise NotInvertibleError(f"{x} is not a unit in ZZ")

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash(IntegerRing)

    def __repr__(self):
        return "ZZ"


ZZ = IntegerRing()


@dataclass(frozen=True)
class PrimeField:
    """The field of residues modulo an odd prime ``q``."""

    q: int

    def __post_init__(self):
        check_odd_prime(self.q)

    @property
    def modulus(self) -> int:
        return self.q

    def reduce(self, x: int) -> int:
        return x % self.q

    def inv(self, x: int) -> int:
        x %= self.q
        if x == 0:
            raise NotInvertibleError(f"0 has no inverse mod {self.q}")
        return pow(x, -1, self.q)

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self):
        return f"GF({self.q})"


CoefficientRing = Union[IntegerRing, PrimeField]


# Basis 0=1, 1=i, 2=j, 3=k. Entry [r][c] = (t, s, ea, eb) means
# e_r * e_c = s * a**ea * b**eb * e_t, which follows from i^2 = a, j^2 = b,
# ij = -ji = k and associativity.
MULTIPLICATION_TABLE = (
    #  * 1              * i               * j               * k
    ((0, 1, 0, 0),   (1, 1, 0, 0),    (2, 1, 0, 0),    (3, 1, 0, 0)),   # 1
    ((1, 1, 0, 0),   (0, 1, 1, 0),    (3, 1, 0, 0),    (2, 1, 1, 0)),   # i: i*k = a j
    ((2, 1, 0, 0),   (3, -1, 0, 0),   (0, 1, 0, 1),    (1, -1, 0, 1)),  # j: j*i = -k, j*k = -b i
    ((3, 1, 0, 0),   (2, -1, 1, 0),   (1, 1, 0, 1),    (0, -1, 1, 1)),  # k: k*i = -a j, k*j = b i, k*k = -ab
)


@lru_cache(maxsize=None)
def _structure_constants(a: int, b: int, ring: CoefficientRing) -> tuple:
    """Flattened table: tuple of (r, c, t, coefficient) with the a, b powers evaluated."""
    out = []
    for r, row in enumerate(MULTIPLICATION_TABLE):
        for c, (t, s, ea, eb) in enumerate(row):
            out.append((r, c, t, ring.reduce(s * a**ea * b**eb)))
    return tuple(out)


@dataclass(frozen=True)
class Quaternion:
    """``x1 + x2 i + x3 j + x4 k`` in Q_ring(a, b); defaults to the Hamilton case a = b = -1."""

    x1: int = 0
    x2: int = 0
    x3: int = 0
    x4: int = 0
    a: int = -1
    b: int = -1
    ring: CoefficientRing = field(default=ZZ)

    def __post_init__(self):
        red = self.ring.reduce
        for name in ("x1", "x2", "x3", "x4", "a", "b"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise TypeError(f"{name} must be an int, got {value!r}")
            object.__setattr__(self, name, red(int(value)))
        if self.a == 0 or self.b == 0:
            raise ValueError("algebra parameters a and b must be nonzero")

    @classmethod
    def from_coeffs(cls, coeffs, ring: CoefficientRing = ZZ, a: int = -1, b: int = -1) -> "Quaternion":
        x1, x2, x3, x4 = coeffs
        return cls(x1, x2, x3, x4, a=a, b=b, ring=ring)

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.x1, self.x2, self.x3, self.x4)

    def _like(self, coeffs) -> "Quaternion":
        return Quaternion(*coeffs, a=self.a, b=self.b, ring=self.ring)

    def _check(self, other: "Quaternion") -> None:
        if (self.ring, self.a, self.b) != (other.ring, other.a, other.b):
            raise ValueError(
                f"cannot combine Q_{self.ring}({self.a},{self.b}) "
                f"with Q_{other.ring}({other.a},{other.b})"
            )

    def _coerce(self, other) -> Optional["Quaternion"]:
        if isinstance(other, Quaternion):
            self._check(other)
            return other
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return self._like((int(other), 0, 0, 0))
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._like(x + y for x, y in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return self._like(-x for x in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._like(x - y for x, y in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return self._like(int(other) * x for x in self.coeffs)
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check(other)
        out = [0, 0, 0, 0]
        xs, ys = self.coeffs, other.coeffs
        for r, c, t, coef in _structure_constants(self.a, self.b, self.ring):
            out[t] += coef * xs[r] * ys[c]
        return self._like(out)

    def __rmul__(self, other):
        # scalars are central
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return self._like(int(other) * x for x in self.coeffs)
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        return self._like((self.x1, -self.x2, -self.x3, -self.x4))

    def norm(self) -> int:
        a, b = self.a, self.b
        x1, x2, x3, x4 = self.coeffs
        return self.ring.reduce(x1 * x1 - a * x2 * x2 - b * x3 * x3 + a * b * x4 * x4)

    def __str__(self):
        x1, x2, x3, x4 = self.coeffs
        parts = [str(x1)]
        for value, unit in ((x2, "i"), (x3, "j"), (x4, "k")):
            sign = "-" if value < 0 else "+"
            parts.append(f"{sign} {abs(value)} {unit}")
        return " ".join(parts)


def add(x: Quaternion, y: Quaternion) -> Quaternion:
    return x + y


def mul(x: Quaternion, y: Quaternion) -> Quaternion:
    return x * y


def conjugate(x: Quaternion) -> Quaternion:
    return x.conjugate()


def norm(x: Quaternion) -> int:
    """``x1^2 - a x2^2 - b x3^2 + ab x4^2``, reduced in the coefficient ring."""
    return x.norm()


def _require_field(x: Quaternion, what: str) -> PrimeField:
    if not isinstance(x.ring, PrimeField):
        raise ValueError(f"{what} is only defined over a prime field, got {x.ring!r}")
    return x.ring


def is_zero_divisor(x: Quaternion) -> bool:
    """True iff ``x`` is nonzero and has zero norm (prime fields only)."""
    _require_field(x, "is_zero_divisor")
    return not x.is_zero() and x.norm() == 0


def inverse(x: Quaternion) -> Quaternion:
    ring = _require_field(x, "inverse")
    n = x.norm()
    if n == 0:
        raise NotInvertibleError(f"{x} has norm 0 in {ring!r}")
    return x.conjugate() * ring.inv(n)


def annihilator_witness(x: Quaternion) -> Quaternion:
    """A nonzero ``y`` with ``x * y == 0``, namely the conjugate of ``x``.

    Valid because ``x * conj(x) = N(x)``; requires ``x`` nonzero with norm 0.
    """
    _require_field(x, "annihilator_witness")
    if x.is_zero():
        raise ValueError("the zero quaternion has no witness (it is not a zero divisor)")
    if x.norm() != 0:
        raise ValueError(f"{x} has nonzero norm and is invertible")
    return x.conjugate()


@lru_cache(maxsize=8)
def _all_nonzero(q: int) -> np.ndarray:
    grid = np.array(list(itertools.product(range(q), repeat=4)), dtype=np.int64)
    return grid[1:]  # row 0 is the zero quaternion


def _left_matrix(x: Quaternion) -> np.ndarray:
    # (x*y)_t = sum_c y_c * M[c, t]
    m = np.zeros((4, 4), dtype=np.int64)
    for r, c, t, coef in _structure_constants(x.a, x.b, x.ring):
        m[c, t] += coef * x.coeffs[r]
    return m


def _right_matrix(x: Quaternion) -> np.ndarray:
    # (y*x)_t = sum_r y_r * M[r, t]
    m = np.zeros((4, 4), dtype=np.int64)
    for r, c, t, coef in _structure_constants(x.a, x.b, x.ring):
        m[r, t] += coef * x.coeffs[c]
    return m


def brute_force_annihilator(x: Quaternion, side: str = "right") -> Optional[Quaternion]:
    """Exhaustive search for a nonzero ``y`` with ``x * y == 0``.

    Scans all q^4 - 1 nonzero quaternions in lexicographic coefficient order
    and returns the first hit, or None. ``side="left"`` searches ``y * x == 0``
    instead. Intended as an oracle; cost grows as q^4.
    """
    ring = _require_field(x, "brute_force_annihilator")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    ys = _all_nonzero(ring.q)
    m = _left_matrix(x) if side == "right" else _right_matrix(x)
    products = (ys @ m) % ring.q
    hits = np.flatnonzero(~products.any(axis=1))
    if hits.size == 0:
        return None
    return x._like(int(v) for v in ys[hits[0]])
