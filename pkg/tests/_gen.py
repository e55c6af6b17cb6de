"""Seeded random generators shared by the test modules."""

import random

from powerstruct.rings import Ring, SparsePolynomial
from powerstruct.series import TruncatedSeries


def random_element(rng: random.Random, ring: Ring, max_degree=2, max_terms=3, coeff_bound=3):
    if ring.is_integers:
        return rng.randint(-coeff_bound, coeff_bound)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = tuple(rng.randint(0, max_degree) for _ in ring.variables)
        terms[exps] = terms.get(exps, 0) + rng.randint(-coeff_bound, coeff_bound)
    return SparsePolynomial(ring.variables, terms)


def random_unit_series(rng: random.Random, ring: Ring, order: int, **kw) -> TruncatedSeries:
    return TruncatedSeries(
        ring, [ring.one] + [random_element(rng, ring, **kw) for _ in range(order)]
    )


def random_series(rng: random.Random, ring: Ring, order: int, **kw) -> TruncatedSeries:
    return TruncatedSeries(
        ring, [random_element(rng, ring, **kw) for _ in range(order + 1)]
    )


def sparse_element(rng: random.Random, ring: Ring, nonzero_p=1.0, coeff_bound=1):
    """A 0- or 1-term element with small entries; keeps Log-side growth tame."""
    if ring.is_integers:
        return rng.randint(-coeff_bound, coeff_bound) if rng.random() <= nonzero_p else 0
    if rng.random() > nonzero_p:
        return ring.zero
    exps = tuple(rng.randint(0, 1) for _ in ring.variables)
    coeff = rng.choice([c for c in range(-coeff_bound, coeff_bound + 1) if c])
    return SparsePolynomial(ring.variables, {exps: coeff})


def sparse_unit_series(rng: random.Random, ring: Ring, order: int, nonzero_p=0.4):
    return TruncatedSeries(
        ring, [ring.one] + [sparse_element(rng, ring, nonzero_p) for _ in range(order)]
    )
