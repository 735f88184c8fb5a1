"""Schubert polynomials of 3142 from quiver coefficients.

The permutation gives rank conditions on a flag-to-flag quiver; specializing
the universal formula recovers the double and then the single Schubert
polynomial, which we compare with divided differences.
"""

from quiverlocus import (Permutation, format_terms, rank_conditions_from, schubert_oracle,
                         specialize_double, specialize_single, universal_expansion)

w = Permutation.parse("3142")
m = len(w) - 1
r = rank_conditions_from(w, m)
print(f"w = {w}, length {w.length()}")
print("rank conditions:\n" + r.format())
print("bundles that can be dropped:", r.inessential_indices())

universal = universal_expansion(w, m)
print("\nuniversal expansion:\n" + format_terms(universal))

double = specialize_double(universal, m)
print("\ndouble Schubert polynomial:")
print("\n".join(double.format_lines()))
assert double == schubert_oracle(w, m, double=True)

single = specialize_single(universal, m)
print("\nsingle Schubert polynomial:")
print("\n".join(single.format_lines()))
assert single == schubert_oracle(w, m)
print("\nboth agree with divided differences")
