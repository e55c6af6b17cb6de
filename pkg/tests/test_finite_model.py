import itertools
import math
import random

import pytest

from powerstruct.finite_model import (
    BudgetExceededError,
    FiniteMap,
    class_of,
    combine,
    config_space_map,
    find_equivalence,
    finite_series,
    geometric_power_coefficient,
    particle_configuration_count,
    symmetric_power_map,
)
from powerstruct.kernels import available_backends
from powerstruct.lambdas import integer_power_formula
from powerstruct.rings import INTEGERS
from powerstruct.series import TruncatedSeries


def test_class_of():
    assert class_of(FiniteMap.constant(3)) == 3
    assert class_of(FiniteMap.identity(0)) == 0
    f = FiniteMap(2, 2, [0, 1])
    g = FiniteMap(3, 1, [0, 0, 0])
    assert class_of(combine(f, g, "disjoint_union")) == class_of(f) + class_of(g)


def test_combine():
    f = FiniteMap.constant(2)
    g = FiniteMap.constant(3)
    assert class_of(combine(f, g, "disjoint_union")) == 5
    assert class_of(combine(f, g, "cartesian_product")) == 6
    h = FiniteMap(2, 3, [0, 2])
    assert find_equivalence(combine(h, FiniteMap.unit(), "cartesian_product"), h) is not None


def test_find_equivalence():
    f = FiniteMap(3, 2, [0, 0, 1])
    g = FiniteMap(3, 2, [1, 1, 0])
    pair = find_equivalence(f, g)
    assert pair is not None
    h1, h2 = pair
    assert all(h2[f(x)] == g(h1[x]) for x in range(3))
    assert find_equivalence(f, FiniteMap(3, 2, [0, 1, 1])) is not None
    assert find_equivalence(f, FiniteMap(3, 1, [0, 0, 0])) is None


def test_symmetric_power_sizes():
    f = FiniteMap(2, 2, [0, 1])
    assert symmetric_power_map(f, 2).source_size == 3
    any_f = FiniteMap(3, 2, [0, 1, 1])
    unit = symmetric_power_map(any_f, 0)
    assert (unit.source_size, unit.target_size) == (1, 1)


def test_config_space_sizes():
    f = FiniteMap(4, 2, [0, 0, 1, 1])
    assert config_space_map(f, 2).source_size == 6
    assert config_space_map(f, 5).source_size == 0
    assert class_of(config_space_map(f, 5)) == 0


def _all_maps(n, q):
    for values in itertools.product(range(q), repeat=n):
        yield FiniteMap(n, q, values)


@pytest.mark.parametrize("builder", [symmetric_power_map, config_space_map])
def test_disjoint_union_decomposition(builder):
    # S^k (f1 u f2) = u_i S^i f1 x S^{k-i} f2, and the B_k analogue, as an
    # explicit equivalence of finite maps
    for n1, n2 in [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)]:
        for f1 in _all_maps(n1, 2):
            for f2 in _all_maps(n2, 2):
                union = combine(f1, f2, "disjoint_union")
                for k in range(5):
                    lhs = builder(union, k)
                    pieces = None
                    for i in range(k + 1):
                        piece = combine(
                            builder(f1, i), builder(f2, k - i), "cartesian_product"
                        )
                        pieces = (
                            piece
                            if pieces is None
                            else combine(pieces, piece, "disjoint_union")
                        )
                    assert find_equivalence(lhs, pieces) is not None


def test_geometric_power_coefficient_example():
    # |M|=3, one coefficient set of size 2, k=2: coefficient of t^2 in (1+2t)^3
    assert geometric_power_coefficient(
        FiniteMap.constant(3), [FiniteMap.constant(2)], 2
    ) == 12


def test_geometric_power_empty_exponent():
    assert geometric_power_coefficient(
        FiniteMap.constant(0, 1), [FiniteMap.constant(2)], 1
    ) == 0


def test_geometric_power_linear_term():
    for a in range(4):
        assert geometric_power_coefficient(
            FiniteMap.unit(), [FiniteMap.constant(a)], 1
        ) == a


def test_geometric_power_budget():
    with pytest.raises(BudgetExceededError):
        geometric_power_coefficient(
            FiniteMap.constant(4), [FiniteMap.constant(3)], 4, budget=10
        )


def test_particle_configuration_count():
    # |M|=2, |X_1|=2: maps with total charge 1 pick one point and one state
    assert particle_configuration_count(2, [2], 1) == 4
    assert particle_configuration_count(3, [], 2) == 0
    assert particle_configuration_count(0, [5], 0) == 1


def test_backends_agree():
    backends = available_backends()
    cases = [
        (4, [0, 1, 0, 1], [(2, 2, [0, 1], 2)]),
        (5, [0, 0, 1, 1, 2], [(1, 3, [0, 1, 1], 2), (2, 2, [1, 0], 2)]),
        (3, [0, 0, 0], [(3, 2, [0, 0], 1)]),
    ]
    for m_size, f_values, blocks in cases:
        values = {
            name: kernel(m_size, f_values, blocks) for name, kernel in backends.items()
        }
        assert len(set(values.values())) == 1, values


def test_nonconstant_coefficient_maps():
    # target structure on the coefficient maps exercises the induced orbit map
    exponent = FiniteMap(3, 2, [0, 1, 0])
    coeffs = [FiniteMap(3, 3, [2, 0, 1]), FiniteMap(2, 2, [1, 1])]
    for k in range(1, 5):
        got = geometric_power_coefficient(exponent, coeffs, k)
        series = TruncatedSeries(INTEGERS, [1, 3, 2, 0, 0])
        assert got == integer_power_formula(series, 3).coefficients[k]


def test_finite_series_zeta():
    assert finite_series(FiniteMap.constant(2), "zeta", 3) == TruncatedSeries(
        INTEGERS, [1, 2, 3, 4]
    )


def test_finite_series_binomial():
    assert finite_series(FiniteMap.constant(4, 2, 1), "binomial", 5) == TruncatedSeries(
        INTEGERS, [1, 4, 6, 4, 1, 0]
    )


def test_finite_series_empty_source():
    for which in ("zeta", "binomial"):
        assert finite_series(FiniteMap.identity(0), which, 3) == TruncatedSeries.one(
            INTEGERS, 3
        )


def test_finite_series_multiplicative_under_disjoint_union():
    for which in ("zeta", "binomial"):
        for n1 in range(4):
            for n2 in range(4):
                f1 = FiniteMap.constant(n1, 2, 0) if n1 else FiniteMap.identity(0)
                f2 = FiniteMap(n2, 2, [x % 2 for x in range(n2)]) if n2 else FiniteMap.identity(0)
                lhs = finite_series(combine(f1, f2, "disjoint_union"), which, 5)
                assert lhs == finite_series(f1, which, 5) * finite_series(f2, which, 5)
