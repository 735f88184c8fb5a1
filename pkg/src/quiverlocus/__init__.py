"""Chern class formulas for degeneracy loci of type A quiver representations.

The coefficients ``c_lambda(r)`` of the universal formula are computed by an
inductive algorithm on the rectangle array of the rank conditions, checked
against tableau counts (factor sequences), and specialized to double and
single Schubert polynomials.
"""

from .factorseq import (TableauArray, distinct_array, factor_sequence_counts, factor_sequences,
                        is_factor_sequence, random_array, standard_array)
from .lr import lr_coefficient, schur_product, split_expansion
from .partitions import EMPTY, Partition, Rectangle, attach, straighten
from .paths import path_phi
from .plactic import Tableau, factorizations, insertion_product, jdt_product
from .polynomial import MultiPolynomial
from .quiver import (RankConditionError, RankConditions, coefficients, coefficients_two_row,
                     dual_polynomial, dual_tuple, omission_expansion)
from .schubert import (Permutation, rank_conditions_from, schubert_oracle, specialize_double,
                       specialize_single, universal_expansion)
from .schur import eval_schur_difference
from .symbols import QuiverPolynomial, format_terms, parse_terms

__all__ = [
    "EMPTY", "MultiPolynomial", "Partition", "Permutation", "QuiverPolynomial",
    "RankConditionError", "RankConditions", "Rectangle", "Tableau", "TableauArray",
    "attach", "coefficients", "coefficients_two_row", "distinct_array", "dual_polynomial",
    "dual_tuple", "eval_schur_difference", "factor_sequence_counts", "factor_sequences",
    "factorizations", "format_terms", "insertion_product", "is_factor_sequence",
    "jdt_product", "lr_coefficient", "omission_expansion", "parse_terms", "path_phi",
    "random_array", "rank_conditions_from", "schubert_oracle", "schur_product", "specialize_double",
    "specialize_single", "split_expansion", "standard_array", "straighten",
    "universal_expansion",
]
