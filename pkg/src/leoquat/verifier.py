"""Registry of identities over the Leonardo-family sequences and their quaternions.

Each identity is evaluated exactly on a grid of orders ``p`` and indices ``n``
(scanned lexicographically), stopping at the first counterexample. Two
statements are registered in the form they are usually printed and are
expected to fail; each is paired with a corrected variant that must hold.
"""

from __future__ import annotations

import enum
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Optional

from .lifts import (
    UNIT_I,
    gf_coefficients,
    norm_closed_form_francois,
    norm_closed_form_lucas_leonardo,
    quaternion_term,
)
from .quaternions import ZZ, PrimeField, Quaternion
from .sequences import Kind, SequenceFamily, term

__all__ = [
    "Expectation",
    "IdentitySpec",
    "Counterexample",
    "VerificationReport",
    "registry",
    "lookup",
    "run_identity",
    "run_all",
    "suite_passed",
    "discrepancy_ledger",
    "audit_initial_displays",
]

I = UNIT_I


class Expectation(str, enum.Enum):
    HOLD = "expect-hold"
    FAIL_AS_PRINTED = "expect-fail-as-printed"


@dataclass(frozen=True)
class IdentitySpec:
    """One identity: ``check(p, n)`` returns ``(lhs, rhs)`` to be compared.

    ``n_min(p)`` is the first index at which every subscript in the identity
    is defined and the statement claims validity; ``n_cap(p)``, when given,
    bounds the index range from above independently of the grid.
    """

    id: str
    description: str
    formula: str
    check: Callable[[int, int], tuple[Any, Any]] = field(repr=False)
    n_min: Callable[[int], int] = field(default=lambda p: 0, repr=False)
    n_cap: Optional[Callable[[int], int]] = field(default=None, repr=False)
    p_min: int = 1
    p_max: Optional[int] = None
    expectation: Expectation = Expectation.HOLD
    corrected_by: Optional[str] = None

    def grid(self, p_max: int, n_max: int) -> list[tuple[int, int, int]]:
        """``(p, n_lo, n_hi)`` triples, inclusive, for each order tested."""
        top = p_max if self.p_max is None else min(p_max, self.p_max)
        out = []
        for p in range(self.p_min, top + 1):
            hi = n_max if self.n_cap is None else min(n_max, self.n_cap(p))
            lo = self.n_min(p)
            if lo <= hi:
                out.append((p, lo, hi))
        return out


@dataclass(frozen=True)
class Counterexample:
    p: int
    n: int
    lhs: Any
    rhs: Any

    def as_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "lhs": _jsonable(self.lhs), "rhs": _jsonable(self.rhs)}


@dataclass(frozen=True)
class VerificationReport:
    id: str
    expectation: Expectation
    grid: tuple[tuple[int, int, int], ...]
    points: int
    holds: bool
    first_counterexample: Optional[Counterexample]
    elapsed: float = field(default=0.0, compare=False)

    @property
    def as_expected(self) -> bool:
        return self.holds == (self.expectation is Expectation.HOLD)

    def as_dict(self) -> dict:
        # elapsed is deliberately left out so serialized reports are reproducible
        return {
            "id": self.id,
            "expectation": self.expectation.value,
            "grid": [list(g) for g in self.grid],
            "points": self.points,
            "holds": self.holds,
            "as_expected": self.as_expected,
            "first_counterexample": (
                None if self.first_counterexample is None else self.first_counterexample.as_dict()
            ),
        }


def _jsonable(value):
    if isinstance(value, Quaternion):
        return str(value)
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


# ---------------------------------------------------------------------------
# sequence shorthands

def _fam(kind: Kind, p: int) -> SequenceFamily:
    return SequenceFamily(kind, p)


def F(p, n):
    return term(_fam(Kind.FIBONACCI, p), n)


def L(p, n):
    return term(_fam(Kind.LUCAS, p), n)


def Leo(p, n):
    return term(_fam(Kind.LEONARDO, p), n)


def R(p, n):
    return term(_fam(Kind.LUCAS_LEONARDO, p), n)


def Fr(n):
    return term(SequenceFamily(Kind.FRANCOIS, 1), n)


def QF(p, n):
    return quaternion_term(_fam(Kind.FIBONACCI, p), n)


def QL(p, n):
    return quaternion_term(_fam(Kind.LUCAS, p), n)


def QLeo(p, n):
    return quaternion_term(_fam(Kind.LEONARDO, p), n)


def QR(p, n):
    return quaternion_term(_fam(Kind.LUCAS_LEONARDO, p), n)


def QFr(n):
    return quaternion_term(SequenceFamily(Kind.FRANCOIS, 1), n)


_prefix_cache: dict[tuple[Kind, int], list[Quaternion]] = {}


def _prefix_sum(kind: Kind, p: int, n: int) -> Quaternion:
    """``sum_{r=0}^{n}`` of the quaternions of (kind, p)."""
    sums = _prefix_cache.setdefault((kind, p), [])
    family = _fam(kind, p)
    while len(sums) <= n:
        prev = sums[-1] if sums else Quaternion()
        sums.append(prev + quaternion_term(family, len(sums)))
    return sums[n]


@lru_cache(maxsize=None)
def _series(p: int, count: int):
    return gf_coefficients(p, count).coefficients


def _gf_coefficient(p: int, n: int) -> Quaternion:
    count = 64
    while count <= n:
        count *= 2
    return _series(p, count)[n]


def _fib(n):
    return F(1, n)


def _luc(n):
    return L(1, n)


def _random_pair(n: int) -> tuple[Quaternion, Quaternion]:
    rng = random.Random(n)
    ring = (ZZ, PrimeField(3), PrimeField(5), PrimeField(7))[n % 4]
    lo, hi = (-9, 9) if ring is ZZ else (0, ring.q - 1)
    x = Quaternion(*(rng.randint(lo, hi) for _ in range(4)), ring=ring)
    y = Quaternion(*(rng.randint(lo, hi) for _ in range(4)), ring=ring)
    return x, y


def _norm_multiplicative(p, n):
    x, y = _random_pair(n)
    return (x * y).norm(), x.ring.reduce(x.norm() * y.norm())


def _initial_display(p, n):
    """The explicit initial Lucas-Leonardo p-quaternions, valid for p >= 4."""
    if n == 0:
        return I + p * (p + 1)
    if n <= p - 3:
        return I
    if n == p - 2:
        return I + Quaternion(0, 0, 0, (p + 1) ** 2)
    if n == p - 1:
        return I + Quaternion(0, 0, (p + 1) ** 2, (p + 1) * (p + 2))
    raise ValueError(f"no display for n={n} at p={p}")


# ---------------------------------------------------------------------------
# the registry

def _build() -> list[IdentitySpec]:
    X = Expectation.FAIL_AS_PRINTED
    p1 = dict(p_min=1, p_max=1)
    specs = [
        # defining recurrences
        IdentitySpec(
            "leo", "Leonardo p recurrence",
            "Leo[p,n] = Leo[p,n-1] + Leo[p,n-p-1] + p, n > p",
            lambda p, n: (Leo(p, n), Leo(p, n - 1) + Leo(p, n - p - 1) + p),
            n_min=lambda p: p + 1,
        ),
        IdentitySpec(
            "luc", "Lucas-Leonardo p recurrence",
            "R[p,n] = R[p,n-1] + R[p,n-p-1] + p, n > p",
            lambda p, n: (R(p, n), R(p, n - 1) + R(p, n - p - 1) + p),
            n_min=lambda p: p + 1,
        ),
        IdentitySpec(
            "luc0", "Lucas-Leonardo p homogeneous recurrence",
            "R[p,n] = R[p,n-1] + R[p,n-p] - R[p,n-2p-1], n > 2p",
            lambda p, n: (R(p, n), R(p, n - 1) + R(p, n - p) - R(p, n - 2 * p - 1)),
            n_min=lambda p: 2 * p + 1,
        ),
        IdentitySpec(
            "r1", "Lucas-Leonardo p-quaternion recurrence",
            "QR[p,n] = QR[p,n-1] + QR[p,n-p-1] + pI, n > p",
            lambda p, n: (QR(p, n), QR(p, n - 1) + QR(p, n - p - 1) + p * I),
            n_min=lambda p: p + 1,
        ),
        IdentitySpec(
            "r2", "Lucas-Leonardo p-quaternion homogeneous recurrence",
            "QR[p,n] = QR[p,n-1] + QR[p,n-p] - QR[p,n-2p-1], n > 2p",
            lambda p, n: (QR(p, n), QR(p, n - 1) + QR(p, n - p) - QR(p, n - 2 * p - 1)),
            n_min=lambda p: 2 * p + 1,
        ),
        # relations between the scalar families
        IdentitySpec(
            "leo1", "Leonardo p via Fibonacci p",
            "Leo[p,n] = (p+1) F[p,n+1] - p",
            lambda p, n: (Leo(p, n), (p + 1) * F(p, n + 1) - p),
        ),
        IdentitySpec(
            "leo2", "Leonardo p via Lucas p and Fibonacci p",
            "Leo[p,n] = L[p,n+p+1] - F[p,n+p+1] - p",
            lambda p, n: (Leo(p, n), L(p, n + p + 1) - F(p, n + p + 1) - p),
        ),
        IdentitySpec(
            "luc1", "Lucas-Leonardo p via Lucas p",
            "R[p,n] = (p+1) L[p,n] - p",
            lambda p, n: (R(p, n), (p + 1) * L(p, n) - p),
        ),
        IdentitySpec(
            "luc2", "Lucas-Leonardo p via Leonardo p",
            "R[p,n] = (p+1) Leo[p,n] - p Leo[p,n-1], n >= 1",
            lambda p, n: (R(p, n), (p + 1) * Leo(p, n) - p * Leo(p, n - 1)),
            n_min=lambda p: 1,
        ),
        IdentitySpec(
            "lucas-leonardo-lucas", "Lucas-Leonardo via Lucas (p = 1)",
            "R[n] = 2 L[n] - 1",
            lambda p, n: (R(1, n), 2 * _luc(n) - 1),
            **p1,
        ),
        IdentitySpec(
            "francois-lucas-fibonacci", "Francois via Lucas and Fibonacci",
            "Fr[n] = L[n] + F[n+1] - 1",
            lambda p, n: (Fr(n), _luc(n) + _fib(n + 1) - 1),
            **p1,
        ),
        # quaternion relations
        IdentitySpec(
            "prop22-i", "Lucas-Leonardo p-quaternions via Lucas p-quaternions",
            "QR[p,n] = (p+1) QL[p,n] - pI, n >= p",
            lambda p, n: (QR(p, n), (p + 1) * QL(p, n) - p * I),
            n_min=lambda p: p,
        ),
        IdentitySpec(
            "prop22-ii", "Lucas-Leonardo p-quaternions via Leonardo p-quaternions",
            "QR[p,n] = (p+1) QLeo[p,n] - p QLeo[p,n-1], n >= p",
            lambda p, n: (QR(p, n), (p + 1) * QLeo(p, n) - p * QLeo(p, n - 1)),
            n_min=lambda p: p,
        ),
        IdentitySpec(
            "prop22-iii-as-printed", "shifted Leonardo relation, sign as usually printed",
            "QR[p,n] = QLeo[p,n] + p QLeo[p,n-p-1] - p^2 I",
            lambda p, n: (QR(p, n), QLeo(p, n) + p * QLeo(p, n - p - 1) - p * p * I),
            n_min=lambda p: p + 1,
            expectation=X,
            corrected_by="prop22-iii-corrected",
        ),
        IdentitySpec(
            "prop22-iii-corrected", "shifted Leonardo relation",
            "QR[p,n] = QLeo[p,n] + p QLeo[p,n-p-1] + p^2 I, n >= p+1",
            lambda p, n: (QR(p, n), QLeo(p, n) + p * QLeo(p, n - p - 1) + p * p * I),
            n_min=lambda p: p + 1,
        ),
        IdentitySpec(
            "prop22-iv-as-printed", "Lucas/Fibonacci relation, constant as usually printed",
            "QR[p,n] = p(QL[p,n] - QF[p,n]) + QL[p,n+p+1] - QF[p,n+p+1] - p(p+1) I, n >= p",
            lambda p, n: (
                QR(p, n),
                p * (QL(p, n) - QF(p, n)) + QL(p, n + p + 1) - QF(p, n + p + 1) - p * (p + 1) * I,
            ),
            n_min=lambda p: p,
            expectation=X,
            corrected_by="prop22-iv-corrected",
        ),
        IdentitySpec(
            "prop22-iv-corrected", "Lucas/Fibonacci relation",
            "QR[p,n] = p(QL[p,n] - QF[p,n]) + QL[p,n+p+1] - QF[p,n+p+1] - pI, n >= p",
            lambda p, n: (
                QR(p, n),
                p * (QL(p, n) - QF(p, n)) + QL(p, n + p + 1) - QF(p, n + p + 1) - p * I,
            ),
            n_min=lambda p: p,
        ),
        IdentitySpec(
            "init-quaternions", "explicit initial Lucas-Leonardo p-quaternions (p >= 4)",
            "QR[p,0] = I + p(p+1); QR[p,1..p-3] = I; QR[p,p-2] = I + (p+1)^2 k; "
            "QR[p,p-1] = I + (p+1)((p+1) j + (p+2) k)",
            lambda p, n: (QR(p, n), _initial_display(p, n)),
            n_cap=lambda p: p - 1,
            p_min=4,
        ),
        # sums and convolutions
        IdentitySpec(
            "sum-prop", "partial sums of Lucas-Leonardo p-quaternions",
            "sum_{k=0}^{n} QR[p,k] = (p+1)(QL[p,n+p+1] - QL[p,p]) - p(n+1) I, n >= p",
            lambda p, n: (
                _prefix_sum(Kind.LUCAS_LEONARDO, p, n),
                (p + 1) * (QL(p, n + p + 1) - QL(p, p)) - p * (n + 1) * I,
            ),
            n_min=lambda p: p,
        ),
        IdentitySpec(
            "lucas-quat-sum", "partial sums of Lucas p-quaternions",
            "sum_{r=0}^{n} QL[p,r] = QL[p,n+p+1] - QL[p,p]",
            lambda p, n: (_prefix_sum(Kind.LUCAS, p, n), QL(p, n + p + 1) - QL(p, p)),
        ),
        IdentitySpec(
            "conv-prop", "Fibonacci p-weighted convolution of Lucas-Leonardo p-quaternions",
            "sum_{t=1}^{p} QR[p,n-t] F[p,t] = (p+1)(QL[p,n+p] - QL[p,n]) - pI(F[p,2p+1] - 1), n >= p",
            lambda p, n: (
                sum((F(p, t) * QR(p, n - t) for t in range(1, p + 1)), Quaternion()),
                (p + 1) * (QL(p, n + p) - QL(p, n)) - p * (F(p, 2 * p + 1) - 1) * I,
            ),
            n_min=lambda p: p,
        ),
        IdentitySpec(
            "abbad", "Lucas p / Fibonacci p convolution",
            "sum_{t=1}^{p} L[p,n-t] F[p,t] = L[p,n+p] - F[p,p+1] L[p,n], n >= p",
            lambda p, n: (
                sum(L(p, n - t) * F(p, t) for t in range(1, p + 1)),
                L(p, n + p) - F(p, p + 1) * L(p, n),
            ),
            n_min=lambda p: p,
        ),
        IdentitySpec(
            "tuglu", "partial sums of Fibonacci p-numbers",
            "sum_{t=0}^{n} F[p,t] = F[p,n+p+1] - F[p,p]",
            lambda p, n: (sum(F(p, t) for t in range(n + 1)), F(p, n + p + 1) - F(p, p)),
        ),
        # classical identities used for the p = 1 norms
        IdentitySpec(
            "classic-lucas-squares", "sum of consecutive Lucas squares",
            "L[n]^2 + L[n+1]^2 = 5 F[2n+1]",
            lambda p, n: (_luc(n) ** 2 + _luc(n + 1) ** 2, 5 * _fib(2 * n + 1)),
            **p1,
        ),
        IdentitySpec(
            "classic-fib-squares", "sum of consecutive Fibonacci squares",
            "F[n]^2 + F[n+1]^2 = F[2n+1]",
            lambda p, n: (_fib(n) ** 2 + _fib(n + 1) ** 2, _fib(2 * n + 1)),
            **p1,
        ),
        IdentitySpec(
            "classic-fib-step4", "Fibonacci terms four apart",
            "F[n] + F[n+4] = 3 F[n+2]",
            lambda p, n: (_fib(n) + _fib(n + 4), 3 * _fib(n + 2)),
            **p1,
        ),
        IdentitySpec(
            "classic-lucas-fib-product", "Lucas times next Fibonacci",
            "L[n] F[n+1] = F[2n+1] + (-1)^n",
            lambda p, n: (_luc(n) * _fib(n + 1), _fib(2 * n + 1) + (-1) ** n),
            **p1,
        ),
        IdentitySpec(
            "classic-lucas-step2", "Lucas terms two apart",
            "L[n] + L[n+2] = 5 F[n+1]",
            lambda p, n: (_luc(n) + _luc(n + 2), 5 * _fib(n + 1)),
            **p1,
        ),
        IdentitySpec(
            "classic-fib-step2", "Fibonacci terms two apart",
            "F[n] + F[n+2] = L[n+1]",
            lambda p, n: (_fib(n) + _fib(n + 2), _luc(n + 1)),
            **p1,
        ),
        # norms
        IdentitySpec(
            "norm-lucas-leonardo", "closed-form norm of Lucas-Leonardo quaternions",
            "N(QR[n]) = 4(15 F[2n+3] - 5 F[n+3] + 1)",
            lambda p, n: (QR(1, n).norm(), norm_closed_form_lucas_leonardo(n)),
            **p1,
        ),
        IdentitySpec(
            "norm-francois", "closed-form norm of Francois quaternions",
            "N(QFr[n]) = 39 F[2n+1] + 48 F[2n+2] - 34 F[n+1] - 18 F[n] + 4",
            lambda p, n: (QFr(n).norm(), norm_closed_form_francois(n)),
            **p1,
        ),
        IdentitySpec(
            "norm-multiplicative", "norm is multiplicative (seeded random pairs over ZZ, GF(3), GF(5), GF(7))",
            "N(xy) = N(x) N(y)",
            _norm_multiplicative,
            **p1,
        ),
        # generating function
        IdentitySpec(
            "gf-coefficients", "generating-function series vs. sequence",
            "[x^n] G_p(x) = QR[p,n]",
            lambda p, n: (_gf_coefficient(p, n), QR(p, n)),
        ),
        # congruences behind the zero-divisor classes
        IdentitySpec(
            "zd-mod3-reduction", "N(QR[n]) = 0 mod 3 exactly when F[n+3] = 2 mod 3",
            "N(QR[n]) = 0 (mod 3) <=> F[n+3] = 2 (mod 3)",
            lambda p, n: (QR(1, n).norm() % 3 == 0, _fib(n + 3) % 3 == 2),
            **p1,
        ),
        IdentitySpec(
            "zd-mod7-reduction", "N(QR[n]) = 0 mod 7 via a sum of two squares",
            "N(QR[n]) = 0 (mod 7) <=> (F[n+1]+1)^2 + (F[n+2]+1)^2 = 1 (mod 7)",
            lambda p, n: (
                QR(1, n).norm() % 7 == 0,
                ((_fib(n + 1) + 1) ** 2 + (_fib(n + 2) + 1) ** 2) % 7 == 1,
            ),
            **p1,
        ),
        IdentitySpec(
            "francois-mod3-reduction", "N(QFr[n]) = 0 mod 3 exactly when F[n+1] = 1 mod 3",
            "N(QFr[n]) = 0 (mod 3) <=> F[n+1] = 1 (mod 3)",
            lambda p, n: (QFr(n).norm() % 3 == 0, _fib(n + 1) % 3 == 1),
            **p1,
        ),
        IdentitySpec(
            "francois-mod5-reduction", "N(QFr[n]) = 0 mod 5 via a Fibonacci congruence",
            "N(QFr[n]) = 0 (mod 5) <=> F[2n+4] - F[n+2] - F[n] + 1 = 0 (mod 5)",
            lambda p, n: (
                QFr(n).norm() % 5 == 0,
                (_fib(2 * n + 4) - _fib(n + 2) - _fib(n) + 1) % 5 == 0,
            ),
            **p1,
        ),
    ]
    ids = [s.id for s in specs]
    assert len(ids) == len(set(ids)), "duplicate identity ids"
    return specs


_REGISTRY: Optional[dict[str, IdentitySpec]] = None


def registry() -> list[IdentitySpec]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = {s.id: s for s in _build()}
    return list(_REGISTRY.values())


def lookup(identity_id: str) -> IdentitySpec:
    registry()
    try:
        return _REGISTRY[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None


def run_identity(spec: IdentitySpec | str, p_max: int = 6, n_max: int = 200) -> VerificationReport:
    """Evaluate one identity over its grid, stopping at the first failure."""
    if isinstance(spec, str):
        spec = lookup(spec)
    grid = tuple(spec.grid(p_max, n_max))
    start = time.perf_counter()
    points = 0
    counterexample = None
    for p, lo, hi in grid:
        for n in range(lo, hi + 1):
            lhs, rhs = spec.check(p, n)
            points += 1
            if lhs != rhs:
                counterexample = Counterexample(p, n, lhs, rhs)
                break
        if counterexample is not None:
            break
    return VerificationReport(
        id=spec.id,
        expectation=spec.expectation,
        grid=grid,
        points=points,
        holds=counterexample is None,
        first_counterexample=counterexample,
        elapsed=time.perf_counter() - start,
    )


def run_all(p_max: int = 6, n_max: int = 200, ids: Optional[list[str]] = None) -> list[VerificationReport]:
    if p_max < 1:
        raise ValueError(f"p_max must be >= 1, got {p_max}")
    if n_max < 2 * p_max + 2:
        raise ValueError(f"n_max must be >= 2*p_max + 2 = {2 * p_max + 2}, got {n_max}")
    specs = registry() if ids is None else [lookup(i) for i in ids]
    return [run_identity(s, p_max, n_max) for s in specs]


def suite_passed(reports: list[VerificationReport]) -> bool:
    """Every report matches its expectation, and every as-printed failure's
    corrected variant (when it was run) holds."""
    by_id = {r.id: r for r in reports}
    for r in reports:
        if not r.as_expected:
            return False
        spec = lookup(r.id)
        if spec.corrected_by is not None:
            fix = by_id.get(spec.corrected_by)
            if fix is not None and not fix.holds:
                return False
    return True


def discrepancy_ledger(reports: list[VerificationReport]) -> list[dict]:
    """As-printed failures paired with the verdict on their corrected variant."""
    by_id = {r.id: r for r in reports}
    out = []
    for r in reports:
        spec = lookup(r.id)
        if spec.expectation is not Expectation.FAIL_AS_PRINTED:
            continue
        fix = by_id.get(spec.corrected_by)
        out.append({
            "as_printed": r.id,
            "formula": spec.formula,
            "fails": not r.holds,
            "counterexample": None if r.first_counterexample is None else r.first_counterexample.as_dict(),
            "corrected": spec.corrected_by,
            "corrected_formula": lookup(spec.corrected_by).formula,
            "corrected_holds": None if fix is None else fix.holds,
        })
    return out


def audit_initial_displays(p_max: int = 6) -> list[dict]:
    """Compare two further printed initial-block expressions with computed values.

    ``QR[p,p]`` is commonly displayed as ``I + (p+1)((p+1) i + (p+2) j + (p+4) k)``
    and the numerator block ``sum_{n=1}^{p} (QR[p,n] - QR[p,n-1]) x^n`` as
    ``(p+1)(-p x + (p+1) k x^(p-2) + (p+1)(j + k) x^(p-1) + ((p+1) i + j + 2k) x^p)``.
    These are informational and do not gate `suite_passed`.
    """
    out = []
    for p in range(1, p_max + 1):
        displayed = I + (p + 1) * Quaternion(0, p + 1, p + 2, p + 4)
        computed = QR(p, p)
        out.append({
            "item": "QR[p,p]", "p": p, "agrees": computed == displayed,
            "computed": str(computed), "displayed": str(displayed),
        })

        computed_poly = {n: QR(p, n) - QR(p, n - 1) for n in range(1, p + 1)}
        computed_poly = {e: c for e, c in computed_poly.items() if c}
        terms = [
            (1, -p * (p + 1) * Quaternion(1)),
            (p - 2, (p + 1) ** 2 * Quaternion(0, 0, 0, 1)),
            (p - 1, (p + 1) ** 2 * Quaternion(0, 0, 1, 1)),
            (p, (p + 1) * Quaternion(0, p + 1, 1, 2)),
        ]
        displayed_poly: dict[int, Quaternion] = {}
        for e, c in terms:
            displayed_poly[e] = displayed_poly.get(e, Quaternion()) + c
        displayed_poly = {e: c for e, c in displayed_poly.items() if c}
        out.append({
            "item": "numerator-block", "p": p, "agrees": computed_poly == displayed_poly,
            "computed": {str(e): str(c) for e, c in sorted(computed_poly.items())},
            "displayed": {str(e): str(c) for e, c in sorted(displayed_poly.items())},
        })
    return out
