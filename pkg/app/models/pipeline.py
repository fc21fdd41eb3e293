"""
Values produced by the equivariant configuration-space pipeline.
"""
from dataclasses import dataclass, field


@dataclass(frozen=True)
class GRepresentation:
    """
    Permutation representation V = sum of multiplicity * R[G/K].

    Attributes:
        summands: (class index of K, multiplicity) pairs
        dimension: Total real dimension of V
        label: Descriptor the representation was built from
    """
    summands: tuple[tuple[int, int], ...]
    dimension: int
    label: str = ""


@dataclass(frozen=True)
class HypothesisViolation:
    """
    Pair of classes K below H whose fixed dimensions fail to drop strictly.

    Attributes:
        lower: Class of K
        upper: Class of H
        lower_dim: dim V^K
        upper_dim: dim V^H
    """
    lower: int
    upper: int
    lower_dim: int
    upper_dim: int

    def describe(self) -> str:
        return f"dim V^{self.upper} = {self.upper_dim} is not below dim V^{self.lower} = {self.lower_dim}"


@dataclass(frozen=True)
class DecompositionRow:
    """
    H_n of the homology coefficient system as Q^constant + sum of atoms.

    Attributes:
        degree: Homological degree n
        constant_multiplicity: 1 when the constant system is a summand, else 0
        atom_multiplicities: Multiplicity of the atom of every class
    """
    degree: int
    constant_multiplicity: int
    atom_multiplicities: tuple[int, ...]


@dataclass(frozen=True)
class DecompositionTable:
    """
    Decomposition of every nonzero homology coefficient system of Conf(V, q).

    Attributes:
        q: Number of points
        representation: V
        fixed_dims: dim V^H for every class H
        rows: Nonzero degrees in increasing order
    """
    q: int
    representation: GRepresentation
    fixed_dims: tuple[int, ...]
    rows: tuple[DecompositionRow, ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.degree for row in self.rows)

    def row(self, degree: int) -> DecompositionRow | None:
        for row in self.rows:
            if row.degree == degree:
                return row
        return None


@dataclass(frozen=True, eq=False)
class E2Page:
    """
    E2 term Ext^q(H_p, M) of the universal coefficient spectral sequence.

    Attributes:
        q: Number of configuration points
        degrees: Homological degrees p with nonzero homology
        length: Number of resolution terms
        ext: Nonzero Ext dimensions by (p, q)
        hom_complex: Nonzero Hom(H_p, I^q) dimensions by (p, q)
        coefficient: Label of M
    """
    q: int
    degrees: tuple[int, ...]
    length: int
    ext: dict[tuple[int, int], int] = field(default_factory=dict)
    hom_complex: dict[tuple[int, int], int] = field(default_factory=dict)
    coefficient: str = ""

    def ext_cell(self, p: int, q: int) -> int:
        return self.ext.get((p, q), 0)

    def hom_cell(self, p: int, q: int) -> int:
        return self.hom_complex.get((p, q), 0)

    @property
    def top_degree(self) -> int:
        return max(self.degrees, default=0)


@dataclass(frozen=True)
class CohomologyRow:
    """
    Rank of H^n_G(Conf(V, q); M) as far as the E2 page decides it.

    Attributes:
        degree: Total degree n
        hom: Sum of the Hom(H_p, I^q) cells with p + q = n
        ext: Sum of the Ext^q(H_p, M) cells with p + q = n
        upper_bound: A higher differential may leave or enter degree n
    """
    degree: int
    hom: int
    ext: int
    upper_bound: bool = False
