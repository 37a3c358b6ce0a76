"""
Quaternions over the integers and over small prime fields
=========================================================

"""

from leoquat import (
    PrimeField,
    Quaternion,
    annihilator_witness,
    brute_force_annihilator,
    inverse,
)

x = Quaternion(3, 1, 5, 7)
y = Quaternion(1, 1, 1, 1)
print(x * y, "|", y * x)  # not commutative
print(x.norm(), y.norm(), (x * y).norm())  # but the norm is multiplicative

# i^2 = a and j^2 = b give a whole family of algebras
i = Quaternion(0, 1, a=2, b=3)
j = Quaternion(0, 0, 1, a=2, b=3)
print(i * i, "|", j * j, "|", i * j)

# over GF(q) anything of norm zero kills its conjugate
F3 = PrimeField(3)
z = Quaternion(1, 1, 1, ring=F3)
print(z.norm(), annihilator_witness(z), z * annihilator_witness(z))
print(brute_force_annihilator(z))

# everything else is a unit
u = Quaternion(2, 1, 0, 0, ring=PrimeField(7))
print(inverse(u), inverse(u) * u)
