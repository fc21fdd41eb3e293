"""
Cohomology of ordered configuration spaces of Euclidean space.
"""
from dataclasses import dataclass, field

Factor = tuple[int, int]


@dataclass(frozen=True)
class BettiTable:
    """
    Betti numbers of Conf(R^n, q).

    Attributes:
        n: Ambient dimension
        q: Number of points
        ranks: Nonzero rank of every topological degree
    """
    n: int
    q: int
    ranks: dict[int, int] = field(hash=False)

    def rank(self, degree: int) -> int:
        return self.ranks.get(degree, 0)

    @property
    def total(self) -> int:
        return sum(self.ranks.values())

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.ranks))


@dataclass(frozen=True, order=True)
class Monomial:
    """
    Product A(i1,j1)...A(ik,jk) of generators of degree n - 1.

    Attributes:
        n: Ambient dimension
        factors: Index pairs (i, j) with 1 <= j < i
    """
    n: int
    factors: tuple[Factor, ...]

    @property
    def weight(self) -> int:
        return len(self.factors)

    @property
    def degree(self) -> int:
        return self.weight * (self.n - 1)

    @property
    def admissible(self) -> bool:
        firsts = [i for i, _ in self.factors]
        return all(j < i for i, j in self.factors) and all(a < b for a, b in zip(firsts, firsts[1:]))

    def render(self) -> str:
        if not self.factors:
            return "1"
        return "·".join(f"A({i},{j})" for i, j in self.factors)


@dataclass(frozen=True, eq=False)
class RingElement:
    """
    Rational combination of admissible monomials in H*(Conf(R^n, q)).

    Attributes:
        n: Ambient dimension
        q: Number of points
        terms: Nonzero coefficient of every admissible factor sequence
    """
    n: int
    q: int
    terms: dict[tuple[Factor, ...], object]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, factors: tuple[Factor, ...]):
        return self.terms.get(tuple(factors), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return (self.n, self.q) == (other.n, other.q) and self.terms == other.terms

    __hash__ = object.__hash__

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for factors in sorted(self.terms):
            coefficient = self.terms[factors]
            monomial = Monomial(self.n, factors).render()
            sign = "-" if coefficient < 0 else "+"
            magnitude = -coefficient if coefficient < 0 else coefficient
            text = monomial if magnitude == 1 else f"{magnitude}·{monomial}"
            parts.append((sign, text))
        first_sign, first_text = parts[0]
        rendered = ("-" if first_sign == "-" else "") + first_text
        for sign, text in parts[1:]:
            rendered += f" {sign} {text}"
        return rendered
