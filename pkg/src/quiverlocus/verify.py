"""Seeded invariant suites over random rank conditions."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .factorseq import direct_test_universe, distinct_array, factor_sequence_counts, \
    factor_sequences, is_factor_sequence, random_array, standard_array
from .paths import all_paths, lowest_path, path_phi
from .quiver import RankConditions, coefficients, coefficients_two_row, dual_polynomial, \
    is_two_row, omission_expansion
from .sampling import DEFAULT_SEED, random_instances
from .symbols import QuiverPolynomial


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, good: bool, r: RankConditions):
        self.total += 1
        if good:
            self.passed += 1
        else:
            self.failures.append(" / ".join(r.format().split("\n")).strip(" /"))

    def as_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "total": self.total,
                "failures": list(self.failures)}


@dataclass(frozen=True)
class VerifyConfig:
    trials: int = 50
    max_n: int = 3
    max_entry: int = 4
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        for name in ("trials", "max_n", "max_entry"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name.replace('_', '-')} must be at least 1")


def homogeneous_and_positive(r: RankConditions) -> bool:
    d = r.codim()
    return all(sum(p.size for p in lam) == d and c > 0 for lam, c in coefficients(r).items())


def duality_holds(r: RankConditions) -> bool:
    return coefficients(r.dual()) == dual_polynomial(coefficients(r))


def two_row_holds(r: RankConditions) -> bool:
    p = coefficients(r)
    return p == coefficients_two_row(r) and all(c == 1 for _, c in p.items())


def omission_holds(r: RankConditions) -> bool:
    p = coefficients(r)
    return all(omission_expansion(r, k) == p for k in r.inessential_indices())


def conjecture_holds(r: RankConditions) -> bool:
    return factor_sequence_counts(standard_array(r)) == coefficients(r).terms()


def choice_independent(r: RankConditions) -> bool:
    counts = factor_sequence_counts(standard_array(r))
    others = [distinct_array(r)] + [random_array(r, random.Random(f"{r.format()}:{t}")) for t in range(2)]
    return all(factor_sequence_counts(a) == counts for a in others)


def direct_test_agrees(r: RankConditions) -> bool:
    for arr in (standard_array(r), distinct_array(r)):
        generated = factor_sequences(arr)
        flat = set().union(*generated.values())
        accepted = {s for s in direct_test_universe(arr, generated) if is_factor_sequence(arr, s)}
        if accepted != flat:
            return False
    return True


def paths_consistent(r: RankConditions) -> bool:
    """``Phi`` of the lowest path is ``S(0,...,0)`` and every path gives the same
    ``Phi`` whichever corner is lowered first."""
    n = r.n
    if path_phi(r, lowest_path(n)) != QuiverPolynomial.symbol(*([()] * (2 * n))):
        return False
    return all(path_phi(r, p, "left") == path_phi(r, p, "right") for p in all_paths(n))


Check = Callable[[RankConditions], bool]

# name, check, uses the small-rectangle instance set
SUITES: list[tuple[str, Check, bool]] = [
    ("homogeneity-positivity", homogeneous_and_positive, False),
    ("duality", duality_holds, False),
    ("two-row", two_row_holds, False),
    ("omission", omission_holds, False),
    ("conjecture", conjecture_holds, True),
    ("choice-independence", choice_independent, True),
    ("direct-test", direct_test_agrees, True),
    ("paths", paths_consistent, True),
]


def run_suites(config: VerifyConfig) -> list[SuiteResult]:
    """Deterministic for fixed ``config``.

    General suites use ``trials`` instances with ``n <= max-n`` and ranks at most
    ``max-entry``; the tableau and path suites use ``trials`` instances with
    ``n <= min(max-n, 3)`` and rectangle sides at most 2.
    """
    general = random_instances(config.seed, config.trials, config.max_n, config.max_entry)
    small = random_instances(config.seed + 1, config.trials, min(config.max_n, 3),
                             config.max_entry, max_side=2)
    results = []
    for name, check, use_small in SUITES:
        res = SuiteResult(name)
        for r in (small if use_small else general):
            if name == "two-row" and not is_two_row(r):
                continue
            res.record(check(r), r)
        results.append(res)
    return results
