"""Which quaternions of a sequence are zero divisors in Q_GF(q)(-1, -1).

Over GF(q) the Hamilton algebra is split, and a nonzero element is a zero
divisor exactly when its norm vanishes. The quaternion sequence of a family is
periodic mod q with the period of the scalar residues, so the zero-divisor
indices form a union of residue classes modulo that period.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lifts import quaternion_term, quaternion_terms_mod
from .quaternions import PrimeField, brute_force_annihilator, is_zero_divisor
from .sequences import Kind, SequenceFamily, check_odd_prime, pisano_period, sequence_period_mod

__all__ = [
    "ZeroDivisorClassification",
    "classify",
    "is_zero_divisor_at",
    "classify_cross_check",
]


@dataclass(frozen=True)
class ZeroDivisorClassification:
    """Zero-divisor residue classes of a quaternion sequence over GF(q).

    ``residues`` are taken modulo ``modulus``. When the detected ``period``
    divides the Fibonacci Pisano period pi(q), ``modulus`` is pi(q) so the
    classes read the same way as the classical Fibonacci statements; otherwise
    ``modulus == period``. ``period_residues`` gives the same classes modulo
    the minimal period. Indices where the quaternion itself vanishes are listed
    separately (mod ``period``) and belong to neither class.
    """

    family: SequenceFamily
    q: int
    modulus: int
    residues: tuple[int, ...]
    all_invertible: bool
    period: int
    period_residues: tuple[int, ...]
    vanishing_residues: tuple[int, ...] = ()

    def contains(self, n: int) -> bool:
        return n % self.modulus in self.residues

    def as_dict(self) -> dict:
        return {
            "family": self.family.kind.value,
            "p": self.family.p,
            "q": self.q,
            "modulus": self.modulus,
            "zero_divisor_residues": list(self.residues),
            "all_invertible": self.all_invertible,
            "period": self.period,
            "period_residues": list(self.period_residues),
            "vanishing_residues": list(self.vanishing_residues),
        }


def classify(family: SequenceFamily, q: int) -> ZeroDivisorClassification:
    """Residue classes of ``n`` for which ``QX[n]`` is a zero divisor over GF(q).

    >>> c = classify(SequenceFamily("lucas-leonardo", 1), 3)
    >>> c.modulus, c.residues
    (8, (0, 2, 3))
    """
    check_odd_prime(q)
    period = sequence_period_mod(family, q).length
    quats = quaternion_terms_mod(family, q, 2 * period)

    zero_div = [is_zero_divisor(x) for x in quats]
    vanish = [x.is_zero() for x in quats]
    for n in range(period):
        if zero_div[n] != zero_div[n + period] or vanish[n] != vanish[n + period]:
            raise AssertionError(f"{family} mod {q}: period {period} fails at n={n}")

    period_residues = tuple(n for n in range(period) if zero_div[n])
    modulus = period
    residues = period_residues
    pi = pisano_period(q).length
    if pi % period == 0 and pi != period:
        modulus = pi
        residues = tuple(n for n in range(pi) if n % period in period_residues)

    return ZeroDivisorClassification(
        family=family,
        q=q,
        modulus=modulus,
        residues=residues,
        all_invertible=not period_residues and not any(vanish[:period]),
        period=period,
        period_residues=period_residues,
        vanishing_residues=tuple(n for n in range(period) if vanish[n]),
    )


def is_zero_divisor_at(family: SequenceFamily, n: int, q: int) -> bool:
    """Evaluate the ``n``-th quaternion mod q directly; no periodicity used."""
    check_odd_prime(q)
    return is_zero_divisor(quaternion_term(family, n, PrimeField(q)))


def classify_cross_check(family: SequenceFamily, q: int, horizon: int | None = None) -> bool:
    """Compare three routes for every ``n < horizon``.

    The residue-class answer from `classify`, direct norm evaluation, and an
    exhaustive annihilator search over GF(q)^4 must all agree. `horizon`
    defaults to two of the reported moduli.
    """
    c = classify(family, q)
    if horizon is None:
        horizon = 2 * c.modulus
    if horizon < 2 * c.modulus:
        raise ValueError(f"horizon must be at least {2 * c.modulus}, got {horizon}")
    field = PrimeField(q)
    for n in range(horizon):
        direct = is_zero_divisor_at(family, n, q)
        x = quaternion_term(family, n, field)
        exhaustive = not x.is_zero() and brute_force_annihilator(x) is not None
        if not (direct == c.contains(n) == exhaustive):
            return False
    return True


# The five classifications stated for p = 1 in the literature, kept for
# regression checks and the CLI.
PUBLISHED = {
    (Kind.LUCAS_LEONARDO, 3): (8, (0, 2, 3)),
    (Kind.LUCAS_LEONARDO, 5): (None, ()),
    (Kind.LUCAS_LEONARDO, 7): (16, (0, 6, 7, 9)),
    (Kind.FRANCOIS, 3): (8, (0, 1, 6)),
    (Kind.FRANCOIS, 5): (20, (5, 8, 10, 19)),
}
