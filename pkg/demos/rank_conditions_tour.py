"""A tour of the coefficients c_lambda(r) for a few rank conditions.

Run with ``python3 demos/rank_conditions_tour.py``.
"""

from quiverlocus import RankConditions, coefficients, dual_polynomial, format_terms
from quiverlocus.quiver import coefficients_two_row, is_two_row

# A locus in a representation E0 -> E1 -> E2 -> E3 of rank 6, 5, 4, 2.
r = RankConditions.parse("""\
6 8 9 6
5 6 6
4 3
2
""")
print("rank conditions:\n" + r.format())
print("rectangles by row:")
for row in r.rectangle_rows():
    print("  " + "  ".join(str(R) for R in row))
print("expected codimension:", r.codim())

poly = coefficients(r)
print(f"{len(poly.terms())} terms, coefficient sum {sum(c for _, c in poly.items())}")
print("first few terms:")
for line in format_terms(poly).splitlines()[:5]:
    print("  " + line)

# Porteous: a single map E -> F of rank at most k gives one rectangle.
porteous = RankConditions.from_rows([[3, 2], [1]])
print("\nPorteous case:", format_terms(coefficients(porteous)))

# Reversing the quiver transposes every partition and reverses the order.
assert coefficients(r.dual()) == dual_polynomial(poly)
print("duality checked on the example")

# When no rectangle sits three or more rows down, a direct formula applies.
small = RankConditions.from_rows([[2, 2, 1], [1, 1], [1]])
if is_two_row(small):
    assert coefficients(small) == coefficients_two_row(small)
    print("two-row example:\n" + format_terms(coefficients(small)))
