from math import factorial

import pytest

from app.core.exceptions import ComputationError
from app.services.configuration_service import (
    admissible_basis,
    betti,
    generator,
    multiply,
    poincare_coefficients,
    ring_unit,
    straighten,
)


@pytest.mark.parametrize("n, q, ranks", [
    (2, 3, {0: 1, 1: 3, 2: 2}),
    (3, 4, {0: 1, 2: 6, 4: 11, 6: 6}),
    (8, 3, {0: 1, 7: 3, 14: 2}),
    (8, 4, {0: 1, 7: 6, 14: 11, 21: 6}),
    (2, 1, {0: 1}),
    (1, 3, {0: 6}),
])
def test_betti_numbers(n, q, ranks):
    """Ranks sit in multiples of n - 1."""
    assert betti(n, q).ranks == ranks


@pytest.mark.parametrize("n, q", [(2, 5), (4, 6), (1, 4)])
def test_total_rank_is_q_factorial(n, q):
    """The ranks of Conf(R^n, q) add up to q!."""
    assert betti(n, q).total == factorial(q)


def test_poincare_coefficients():
    """(1 + t)(1 + 2t)(1 + 3t)."""
    assert poincare_coefficients(4) == [1, 6, 11, 6]
    assert poincare_coefficients(1) == [1]


@pytest.mark.parametrize("n, q", [(0, 3), (2, 0), (-1, 2)])
def test_betti_rejects_bad_sizes(n, q):
    """Non-positive dimension or point count is a parse error."""
    with pytest.raises(ComputationError) as error:
        betti(n, q)
    assert error.value.exit_code == 2


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_admissible_basis_matches_betti(q):
    """The number of admissible monomials of weight k is the rank in degree k(n-1)."""
    table = betti(3, q)
    for k in range(q):
        basis = admissible_basis(3, q, k)
        assert len(basis) == table.rank(2 * k)
        assert all(monomial.admissible for monomial in basis)
        assert basis == sorted(basis)


def test_admissible_basis_entries():
    """Weight one is every generator, weight two pairs distinct first indices."""
    assert [monomial.factors for monomial in admissible_basis(2, 3, 1)] == [((2, 1),), ((3, 1),), ((3, 2),)]
    assert [monomial.render() for monomial in admissible_basis(2, 3, 2)] == [
        "A(2,1)·A(3,1)",
        "A(2,1)·A(3,2)",
    ]


@pytest.mark.parametrize("n, q, k", [(1, 3, 0), (2, 3, 3), (2, 3, -1)])
def test_admissible_basis_rejects_bad_weight(n, q, k):
    """n = 1 has no generators and weights run from 0 to q - 1."""
    with pytest.raises(ComputationError) as error:
        admissible_basis(n, q, k)
    assert error.value.key == "invalid_dimension_error_key"


def test_three_term_relation():
    """A(3,1)A(3,2) = A(2,1)A(3,2) - A(2,1)A(3,1)."""
    product = straighten([(3, 1), (3, 2)], 2, 3)
    assert product.coefficient(((2, 1), (3, 2))) == 1
    assert product.coefficient(((2, 1), (3, 1))) == -1
    assert product.render() == "-A(2,1)·A(3,1) + A(2,1)·A(3,2)"


@pytest.mark.parametrize("n, sign", [(2, -1), (3, 1), (4, -1)])
def test_graded_commutativity(n, sign):
    """Swapping two generators costs (-1)^((n-1)^2)."""
    product = straighten([(3, 2), (2, 1)], n, 3)
    assert product.terms == {((2, 1), (3, 2)): sign}


@pytest.mark.parametrize("n", [2, 3])
def test_squares_vanish(n):
    """A(i,j)^2 = 0."""
    assert straighten([(3, 1), (3, 1)], n, 3).is_zero
    square = multiply(generator(n, 3, 2, 1), generator(n, 3, 2, 1))
    assert square.is_zero


def test_top_degree_vanishes_beyond_weight():
    """Any q generators multiply to zero in Conf(R^n, q)."""
    assert straighten([(2, 1), (3, 1), (3, 2)], 2, 3).is_zero


@pytest.mark.parametrize("n", [2, 3])
def test_products_land_on_the_admissible_basis(n):
    """Every product of two generators straightens into weight two admissible monomials."""
    q = 4
    allowed = {monomial.factors for monomial in admissible_basis(n, q, 2)}
    generators = [monomial.factors[0] for monomial in admissible_basis(n, q, 1)]
    for left in generators:
        for right in generators:
            assert set(straighten([left, right], n, q).terms) <= allowed


@pytest.mark.parametrize("n", [2, 3])
def test_multiplication_is_associative(n):
    """(ab)c = a(bc) on generators of Conf(R^n, 4)."""
    q = 4
    generators = [generator(n, q, i, j) for i, j in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)]]
    for a in generators:
        for b in generators:
            for c in generators:
                assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_unit():
    """1 is neutral."""
    element = straighten([(3, 1), (4, 2)], 2, 4)
    assert multiply(ring_unit(2, 4), element) == element
    assert multiply(element, ring_unit(2, 4)) == element
    assert ring_unit(2, 4).render() == "1"


def test_generator_out_of_range():
    """Generators need 1 <= j < i <= q."""
    with pytest.raises(ComputationError):
        generator(2, 3, 4, 1)
    with pytest.raises(ComputationError):
        straighten([(2, 2)], 2, 3)


def test_multiply_across_rings():
    """Elements of different rings cannot be multiplied."""
    with pytest.raises(ComputationError) as error:
        multiply(generator(2, 3, 2, 1), generator(3, 3, 2, 1))
    assert error.value.key == "invalid_dimension_error_key"


def test_straighten_is_idempotent_on_admissible_monomials():
    """Admissible monomials are their own normal form."""
    for k in range(4):
        for monomial in admissible_basis(2, 4, k):
            assert straighten(monomial.factors, 2, 4).terms == {monomial.factors: 1}
