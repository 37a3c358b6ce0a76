import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leoquat.quaternions import (
    MULTIPLICATION_TABLE,
    ZZ,
    NotInvertibleError,
    PrimeField,
    Quaternion,
    add,
    annihilator_witness,
    brute_force_annihilator,
    conjugate,
    inverse,
    is_zero_divisor,
    mul,
    norm,
)

from oracles import generalized_product, hamilton_product

ONE = Quaternion(1)
I_ = Quaternion(0, 1)
J_ = Quaternion(0, 0, 1)
K_ = Quaternion(0, 0, 0, 1)


def q(*coeffs, ring=ZZ, a=-1, b=-1):
    return Quaternion(*coeffs, a=a, b=b, ring=ring)


def test_add_examples():
    assert add(q(1, 1), q(0, 0, 1, 1)) == q(1, 1, 1, 1)
    x = q(3, -1, 4, 1)
    assert x + q() == x
    F3 = PrimeField(3)
    assert q(2, 2, ring=F3) + q(2, 2, ring=F3) == q(1, 1, ring=F3)


def test_mul_examples():
    assert mul(I_, J_) == K_
    assert J_ * I_ == -K_
    assert K_ * K_ == q(-1)
    x = q(3, 1, 5, 7)
    assert ONE * x == x == x * ONE


@pytest.mark.parametrize("a, b", [(-1, -1), (2, 3), (-3, 5), (1, -1), (7, -2)])
def test_basis_products(a, b):
    i, j, k = (q(*e, a=a, b=b) for e in ((0, 1), (0, 0, 1), (0, 0, 0, 1)))
    assert i * i == q(a, a=a, b=b)
    assert j * j == q(b, a=a, b=b)
    assert i * j == k and j * i == -k
    assert j * k == -b * i and k * j == b * i
    assert i * k == a * j and k * i == -a * j
    assert k * k == q(-a * b, a=a, b=b)


def test_table_shape():
    assert len(MULTIPLICATION_TABLE) == 4
    for r, row in enumerate(MULTIPLICATION_TABLE):
        # every product of basis elements lands on a distinct basis element
        assert sorted(t for t, *_ in row) == [0, 1, 2, 3]
        assert row[0][0] == r


@given(
    st.tuples(*[st.integers(-50, 50)] * 4),
    st.tuples(*[st.integers(-50, 50)] * 4),
)
def test_hamilton_product_matches_hand_expansion(x, y):
    assert (q(*x) * q(*y)).coeffs == hamilton_product(x, y)


@given(
    st.tuples(*[st.integers(-20, 20)] * 4),
    st.tuples(*[st.integers(-20, 20)] * 4),
    st.integers(-6, 6).filter(bool),
    st.integers(-6, 6).filter(bool),
)
def test_generalized_product_matches_hand_expansion(x, y, a, b):
    assert (q(*x, a=a, b=b) * q(*y, a=a, b=b)).coeffs == generalized_product(x, y, a, b)


def _random_quats(rng, ring, count, a=-1, b=-1):
    if ring is ZZ:
        draw = lambda: rng.randint(-9, 9)  # noqa: E731
    else:
        draw = lambda: rng.randrange(ring.q)  # noqa: E731
    return [q(*(draw() for _ in range(4)), ring=ring, a=a, b=b) for _ in range(count)]


RINGS = [ZZ, PrimeField(3), PrimeField(5), PrimeField(7)]


@pytest.mark.parametrize("ring", RINGS, ids=repr)
@pytest.mark.parametrize("a, b", [(-1, -1), (2, -2)])
def test_associativity_and_norm_multiplicativity(ring, a, b):
    rng = random.Random(1234)
    xs = _random_quats(rng, ring, 1000, a, b)
    ys = _random_quats(rng, ring, 1000, a, b)
    zs = _random_quats(rng, ring, 1000, a, b)
    for x, y, z in zip(xs, ys, zs):
        assert (x * y) * z == x * (y * z)
        assert norm(x * y) == ring.reduce(norm(x) * norm(y))
        assert x * conjugate(x) == conjugate(x) * x == q(norm(x), ring=ring, a=a, b=b)


def test_conjugate_examples():
    assert conjugate(q(1, 1, 1, 1)) == q(1, -1, -1, -1)
    x = q(3, -2, 7, 5)
    assert conjugate(conjugate(x)) == x
    assert conjugate(q(5)) == q(5)


def test_norm_examples():
    assert norm(q(3, 1, 5, 7)) == 84
    assert norm(q()) == 0
    assert norm(q(1, 1, 1, ring=PrimeField(3))) == 0
    assert norm(q(1, 2, 3, 4, a=2, b=3)) == 1 - 2 * 4 - 3 * 9 + 6 * 16


def test_prime_field_residues_are_canonical():
    F7 = PrimeField(7)
    x = q(-1, -8, 15, 7, ring=F7)
    assert x.coeffs == (6, 6, 1, 0)
    assert (-x).coeffs == (1, 1, 6, 0)
    assert x.a == 6 and x.b == 6


def test_mixed_algebras_rejected():
    with pytest.raises(ValueError):
        q(1, ring=PrimeField(3)) + q(1, ring=PrimeField(5))
    with pytest.raises(ValueError):
        q(1) * q(1, a=2)
    with pytest.raises(ValueError):
        q(1) + q(1, ring=PrimeField(3))
    with pytest.raises(ValueError):
        q(1, a=0)
    with pytest.raises(ValueError):
        q(1, b=3, ring=PrimeField(3))


def test_zero_divisor_examples():
    assert is_zero_divisor(q(1, 1, 1, ring=PrimeField(3)))
    assert not is_zero_divisor(q(1, 1, ring=PrimeField(5)))
    for p in (3, 5, 7):
        assert not is_zero_divisor(q(ring=PrimeField(p)))
    with pytest.raises(ValueError):
        is_zero_divisor(q(1, 1, 1))


def test_inverse_examples():
    F5 = PrimeField(5)
    assert inverse(q(1, 1, ring=F5)) == q(3, -3, ring=F5)
    assert inverse(q(1, ring=F5)) == q(1, ring=F5)
    with pytest.raises(NotInvertibleError):
        inverse(q(1, 1, 1, ring=PrimeField(3)))
    with pytest.raises(ValueError):
        inverse(q(1))


def test_witness_examples():
    F3 = PrimeField(3)
    x = q(1, 1, 1, ring=F3)
    w = annihilator_witness(x)
    assert w == q(1, 2, 2, ring=F3)
    assert (x * w).is_zero()
    with pytest.raises(ValueError):
        annihilator_witness(q(1, ring=F3))
    with pytest.raises(ValueError):
        annihilator_witness(q(ring=F3))


def test_witness_mod7():
    F7 = PrimeField(7)
    x = q(2, 3, 1, 0, ring=F7)  # 4 + 9 + 1 = 14
    assert norm(x) == 0
    w = annihilator_witness(x)
    assert not w.is_zero() and (x * w).is_zero()


def test_brute_force_examples():
    F3, F5 = PrimeField(3), PrimeField(5)
    y = brute_force_annihilator(q(1, 1, 1, ring=F3))
    assert y is not None and not y.is_zero()
    assert (q(1, 1, 1, ring=F3) * y).is_zero()
    assert brute_force_annihilator(q(1, 1, ring=F5)) is None
    # every nonzero y kills 0; the first in lexicographic order is k
    assert brute_force_annihilator(q(ring=F3)) == q(0, 0, 0, 1, ring=F3)
    with pytest.raises(ValueError):
        brute_force_annihilator(q(1, 1))


def _scalar_scan(x):
    ring = x.ring
    for coeffs in itertools.product(range(ring.q), repeat=4):
        if any(coeffs):
            y = Quaternion(*coeffs, a=x.a, b=x.b, ring=ring)
            if (x * y).is_zero():
                return y
    return None


def test_vectorized_scan_matches_scalar_scan():
    rng = random.Random(7)
    for ring in (PrimeField(3), PrimeField(5)):
        for x in _random_quats(rng, ring, 25) + [q(1, 1, 1, ring=ring)]:
            assert brute_force_annihilator(x) == _scalar_scan(x)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_norm_criterion_exhaustive(p):
    F = PrimeField(p)
    for coeffs in itertools.product(range(p), repeat=4):
        x = Quaternion(*coeffs, ring=F)
        right = brute_force_annihilator(x, "right")
        if x.is_zero():
            assert not is_zero_divisor(x)
            continue
        assert is_zero_divisor(x) == (right is not None)
        if p < 7:
            left = brute_force_annihilator(x, "left")
            assert (left is None) == (right is None)


def test_conjugate_product_exhaustive_mod3():
    F3 = PrimeField(3)
    for coeffs in itertools.product(range(3), repeat=4):
        x = Quaternion(*coeffs, ring=F3)
        assert x * x.conjugate() == Quaternion(norm(x), ring=F3)


@pytest.mark.parametrize("p", [3, 5])
def test_inverse_exhaustive(p):
    F = PrimeField(p)
    one = Quaternion(1, ring=F)
    for coeffs in itertools.product(range(p), repeat=4):
        x = Quaternion(*coeffs, ring=F)
        if norm(x) == 0:
            with pytest.raises(NotInvertibleError):
                inverse(x)
        else:
            assert inverse(x) * x == x * inverse(x) == one


def test_string_rendering():
    assert str(q(3, -1, 0, 7)) == "3 - 1 i + 0 j + 7 k"
    assert str(q(1, 2, 2, ring=PrimeField(3))) == "1 + 2 i + 2 j + 0 k"


def test_scalar_operations():
    x = q(1, 2, 3, 4)
    assert 2 * x == x * 2 == q(2, 4, 6, 8)
    assert x + 1 == 1 + x == q(2, 2, 3, 4)
    assert 1 - x == q(0, -2, -3, -4)
