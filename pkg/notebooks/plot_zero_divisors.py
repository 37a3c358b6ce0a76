"""
Which quaternion lifts are zero divisors mod q
==============================================

"""

import numpy as np

from leoquat import FRANCOIS, LUCAS_LEONARDO, classify, quaternion_term, quaternion_terms_mod

print(quaternion_term(LUCAS_LEONARDO, 0), quaternion_term(FRANCOIS, 0))

for family in (LUCAS_LEONARDO, FRANCOIS):
    for q in (3, 5, 7, 11, 13):
        c = classify(family, q)
        if c.all_invertible:
            print(f"{str(family):20s} q={q:<3d} all invertible")
        else:
            print(f"{str(family):20s} q={q:<3d} n = {c.residues} mod {c.modulus}")

# the norms mod 7 over two periods; zeros line up with the classes above
norms = np.array([x.norm() for x in quaternion_terms_mod(LUCAS_LEONARDO, 7, 32)])
print(norms)
print(np.flatnonzero(norms == 0) % 16)
