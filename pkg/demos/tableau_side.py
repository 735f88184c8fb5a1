"""The tableau side: products, factorizations and factor sequences.

Shape-bucketed counts of factor sequences reproduce the coefficients; this is
proved for three arrows and only observed beyond, which the last section
samples.
"""

import random

from quiverlocus import (Tableau, coefficients, factor_sequence_counts, factorizations,
                         insertion_product, jdt_product, lr_coefficient, standard_array)
from quiverlocus.factorseq import distinct_array, format_listing, factor_sequences, random_array
from quiverlocus.paths import path_phi, top_path
from quiverlocus.plactic import superstandard
from quiverlocus.quiver import RankConditions
from quiverlocus.sampling import random_instances
from quiverlocus.symbols import format_partition

a = Tableau.from_rows([[1, 2], [3]])
b = Tableau.from_rows([[1, 3]])
print("a =\n" + str(a) + "\nb =\n" + str(b))
print("a*b by sliding =\n" + str(jdt_product(a, b)))
assert jdt_product(a, b) == insertion_product(a, b)

lam = (2, 1)
counts = {k: len(v) for k, v in factorizations(superstandard(lam)).items()}
print("\nfactorizations of the superstandard (2,1) tableau:")
for (sigma, tau), c in sorted(counts.items()):
    print(f"  {format_partition(sigma)} x {format_partition(tau)}: {c}"
          f"  (LR {lr_coefficient(lam, sigma, tau)})")

r = RankConditions.from_rows([[2, 2, 1], [1, 1], [1]])
arr = standard_array(r)
print("\nfactor sequences for\n" + r.format())
for shape, seqs in sorted(factor_sequences(arr).items()):
    print("# " + " ".join(format_partition(p) for p in shape))
    print(format_listing(seqs) + "\n")
assert factor_sequence_counts(arr) == coefficients(r).terms()
assert factor_sequence_counts(distinct_array(r)) == factor_sequence_counts(arr)
assert factor_sequence_counts(random_array(r, random.Random(0))) == factor_sequence_counts(arr)

# Phi of the top path is an observed match with the coefficients, not a theorem.
assert path_phi(r, top_path(r.n)) == coefficients(r)
print("top path agrees with the coefficients here")

# Beyond the proven range: four arrows, small rectangles.
sample = random_instances(7, 25, 4, 3, max_side=2, min_n=4)
agree = sum(factor_sequence_counts(standard_array(x)) == coefficients(x).terms() for x in sample)
print(f"four-arrow sample: {agree}/{len(sample)} agree")
