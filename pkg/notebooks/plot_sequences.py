"""
Fibonacci p-numbers and their Leonardo companions
=================================================

"""

from leoquat import FIBONACCI, LUCAS_LEONARDO, FRANCOIS, SequenceFamily, pisano_period, terms

# the four families share one recurrence; p controls how far back it reaches
for kind in ("fibonacci", "lucas", "leonardo", "lucas-leonardo"):
    for p in (1, 2, 3):
        family = SequenceFamily(kind, p)
        print(f"{str(family):24s}", terms(family, 0, 11))

print(f"{str(FRANCOIS):24s}", terms(FRANCOIS, 0, 11))

# terms are exact integers, so large indices are fine
print(len(str(terms(FIBONACCI, 1000, 1000)[0])), "digits in F_1000")

# reduced modulo m the Fibonacci numbers are periodic
for m in (3, 5, 7):
    pp = pisano_period(m)
    print(m, pp.length, " ".join(map(str, pp.cycle)))

# Lucas-Leonardo residues repeat with a period dividing the Pisano period
print([t % 5 for t in terms(LUCAS_LEONARDO, 0, 19)])
