"""
Cohomology ring of the ordered configuration space Conf(R^n, q).

The ring is generated by classes A(i,j), 1 <= j < i <= q, of degree n - 1,
subject to A(i,j)^2 = 0 and A(i,j)A(i,k) = A(k,j)(A(i,k) - A(i,j)) for j < k.
Products are brought to the admissible basis by `straighten`.
"""
from itertools import combinations, product
from math import factorial
from typing import Sequence

from sympy import QQ, Poly, symbols
from sympy.combinatorics import Permutation as SympyPermutation

from app.core.exceptions import ComputationError
from app.models.configuration import BettiTable, Factor, Monomial, RingElement
from app.services.constant.response_constant import (
    INVALID_DIMENSION_ERROR,
    INVALID_POINT_COUNT_ERROR,
)

t = symbols("t")


def _check_sizes(n: int, q: int) -> None:
    if n < 1:
        raise ComputationError(INVALID_DIMENSION_ERROR, value=f"n = {n}")
    if q < 1:
        raise ComputationError(INVALID_POINT_COUNT_ERROR, value=f"q = {q}")


def poincare_coefficients(q: int) -> list[int]:
    """Coefficients of prod_{m=1}^{q-1} (1 + m t), constant term first."""
    polynomial = Poly(1, t)
    for m in range(1, q):
        polynomial = polynomial * Poly(1 + m * t, t)
    return [int(coefficient) for coefficient in reversed(polynomial.all_coeffs())]


def betti(n: int, q: int) -> BettiTable:
    """
    Betti numbers of Conf(R^n, q).

    For n >= 2 the rank in degree k(n-1) is the k-th elementary symmetric
    polynomial in 1, ..., q-1; for n = 1 the space is q! contractible pieces.

    Raises:
        ComputationError: n < 1 or q < 1
    """
    _check_sizes(n, q)
    if n == 1:
        return BettiTable(n=n, q=q, ranks={0: factorial(q)})
    ranks = {
        weight * (n - 1): coefficient
        for weight, coefficient in enumerate(poincare_coefficients(q))
        if coefficient
    }
    return BettiTable(n=n, q=q, ranks=ranks)


def admissible_basis(n: int, q: int, k: int) -> list[Monomial]:
    """
    Admissible monomials of weight k, in lexicographic order.

    Raises:
        ComputationError: n < 2 or k outside 0 .. q-1
    """
    _check_sizes(n, q)
    if n < 2 or not 0 <= k <= q - 1:
        raise ComputationError(INVALID_DIMENSION_ERROR, value=f"n = {n}, k = {k}")
    basis = [
        Monomial(n, tuple(zip(firsts, seconds)))
        for firsts in combinations(range(2, q + 1), k)
        for seconds in product(*(range(1, first) for first in firsts))
    ]
    return sorted(basis)


def _check_factor(q: int, factor: Factor) -> None:
    i, j = factor
    if not 1 <= j < i <= q:
        raise ComputationError(INVALID_DIMENSION_ERROR, value=f"A({i},{j}) with q = {q}")


def _sort_with_sign(factors: tuple[Factor, ...], n: int) -> tuple[tuple[Factor, ...], int]:
    order = sorted(range(len(factors)), key=lambda index: factors[index])
    ordered = tuple(factors[index] for index in order)
    if (n - 1) % 2 == 0 or len(factors) < 2:
        return ordered, 1
    return ordered, SympyPermutation(order).signature()


def _straighten_into(
    factors: tuple[Factor, ...],
    coefficient,
    n: int,
    terms: dict[tuple[Factor, ...], object],
) -> None:
    pending = [(factors, coefficient)]
    while pending:
        factors, coefficient = pending.pop()
        ordered, sign = _sort_with_sign(factors, n)
        if len(set(ordered)) < len(ordered):
            continue
        clash = next(
            (position for position in range(len(ordered) - 1) if ordered[position][0] == ordered[position + 1][0]),
            None,
        )
        if clash is None:
            terms[ordered] = terms.get(ordered, QQ(0)) + sign * coefficient
            continue
        (i, j), (_, k) = ordered[clash], ordered[clash + 1]
        before, after = ordered[:clash], ordered[clash + 2:]
        pending.append((before + ((k, j), (i, k)) + after, sign * coefficient))
        pending.append((before + ((k, j), (i, j)) + after, -sign * coefficient))


def _element(n: int, q: int, terms: dict) -> RingElement:
    return RingElement(n=n, q=q, terms={factors: value for factors, value in terms.items() if value != 0})


def straighten(factors: Sequence[Factor], n: int, q: int) -> RingElement:
    """
    Normal form of a product of generators on the admissible basis.

    Args:
        factors: Generators A(i,j) as (i, j) pairs, in product order
        n: Ambient dimension
        q: Number of points

    Returns:
        RingElement: The product as a combination of admissible monomials
    """
    _check_sizes(n, q)
    factors = tuple(tuple(factor) for factor in factors)
    for factor in factors:
        _check_factor(q, factor)
    terms: dict[tuple[Factor, ...], object] = {}
    _straighten_into(factors, QQ(1), n, terms)
    return _element(n, q, terms)


def generator(n: int, q: int, i: int, j: int) -> RingElement:
    _check_sizes(n, q)
    _check_factor(q, (i, j))
    return RingElement(n=n, q=q, terms={((i, j),): QQ(1)})


def ring_unit(n: int, q: int) -> RingElement:
    _check_sizes(n, q)
    return RingElement(n=n, q=q, terms={(): QQ(1)})


def multiply(a: RingElement, b: RingElement) -> RingElement:
    """
    Product of two ring elements, distributed and straightened.

    Raises:
        ComputationError: The factors live in different rings
    """
    if (a.n, a.q) != (b.n, b.q):
        raise ComputationError(INVALID_DIMENSION_ERROR, value=f"({a.n}, {a.q}) vs ({b.n}, {b.q})")
    terms: dict[tuple[Factor, ...], object] = {}
    for left, left_coefficient in a.terms.items():
        for right, right_coefficient in b.terms.items():
            _straighten_into(left + right, left_coefficient * right_coefficient, a.n, terms)
    return _element(a.n, a.q, terms)
