"""
Exact rational linear algebra on top of sympy's DomainMatrix.

Every matrix handled by the engine is a dense DomainMatrix over QQ built through
`matrix`. Coefficient systems vanish at many objects, so 0 x n and n x 0 shapes
are routine; the helpers here keep the shape explicit in those cases.
"""
from dataclasses import dataclass
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def matrix(rows: Sequence[Sequence], shape: tuple[int, int]) -> DomainMatrix:
    """
    Build a dense QQ matrix of a given shape.

    Args:
        rows: Nested rows of ints or QQ elements
        shape: (row count, column count), needed when a dimension is zero

    Returns:
        DomainMatrix: The matrix over QQ
    """
    n_rows, n_cols = shape
    converted = [[QQ.convert(entry) for entry in row] for row in rows]
    if len(converted) != n_rows or any(len(row) != n_cols for row in converted):
        raise ValueError(f"rows do not match shape {shape}")
    return DomainMatrix(converted, (n_rows, n_cols), QQ)


def zeros(n_rows: int, n_cols: int) -> DomainMatrix:
    return DomainMatrix.zeros((n_rows, n_cols), QQ).to_dense()


def identity(size: int) -> DomainMatrix:
    return DomainMatrix.eye(size, QQ).to_dense()


def entries(m: DomainMatrix) -> list[list]:
    n_rows, n_cols = m.shape
    if n_rows == 0:
        return []
    if n_cols == 0:
        return [[] for _ in range(n_rows)]
    return [list(row) for row in m.to_list()]


def product(*factors: DomainMatrix) -> DomainMatrix:
    """Left to right matrix product with explicit empty shapes."""
    result = factors[0]
    for factor in factors[1:]:
        if result.shape[1] != factor.shape[0]:
            raise ValueError(f"cannot multiply {result.shape} by {factor.shape}")
        if 0 in (result.shape[0], result.shape[1], factor.shape[1]):
            result = zeros(result.shape[0], factor.shape[1])
        else:
            result = result * factor
    return result


def add(left: DomainMatrix, right: DomainMatrix) -> DomainMatrix:
    if left.shape != right.shape:
        raise ValueError(f"cannot add {left.shape} and {right.shape}")
    return left + right


def subtract(left: DomainMatrix, right: DomainMatrix) -> DomainMatrix:
    if left.shape != right.shape:
        raise ValueError(f"cannot subtract {right.shape} from {left.shape}")
    return left - right


def scale(m: DomainMatrix, factor) -> DomainMatrix:
    return m * QQ.convert(factor)


def transpose(m: DomainMatrix) -> DomainMatrix:
    return m.transpose()


def stack_rows(blocks: Sequence[DomainMatrix], n_cols: int) -> DomainMatrix:
    """Vertical concatenation; every block must have `n_cols` columns."""
    for block in blocks:
        if block.shape[1] != n_cols:
            raise ValueError(f"block with {block.shape[1]} columns in a {n_cols}-column stack")
    if not blocks:
        return zeros(0, n_cols)
    return blocks[0].vstack(*blocks[1:])


def block_diagonal(blocks: Sequence[DomainMatrix]) -> DomainMatrix:
    n_cols = sum(block.shape[1] for block in blocks)
    bands = []
    offset = 0
    for block in blocks:
        n_rows, width = block.shape
        bands.append(zeros(n_rows, offset).hstack(block, zeros(n_rows, n_cols - offset - width)))
        offset += width
    return stack_rows(bands, n_cols)


def select_rows(m: DomainMatrix, indices: Sequence[int]) -> DomainMatrix:
    if not indices:
        return zeros(0, m.shape[1])
    return m.extract(list(indices), list(range(m.shape[1])))


def is_zero(m: DomainMatrix) -> bool:
    return m.is_zero_matrix


def equal(left: DomainMatrix, right: DomainMatrix) -> bool:
    return left.shape == right.shape and entries(left) == entries(right)


def rank(m: DomainMatrix) -> int:
    if 0 in m.shape:
        return 0
    return m.rank()


def rref(m: DomainMatrix) -> tuple[list[list], tuple[int, ...]]:
    """Reduced row echelon form as nested rows, with the pivot columns."""
    if 0 in m.shape:
        return entries(m), ()
    reduced, pivots = m.rref()
    return entries(reduced), tuple(pivots)


@dataclass(frozen=True)
class EchelonBasis:
    """
    Basis of a subspace in reduced row echelon normal form.

    Column k of `matrix` has a 1 in coordinate `free[k]` and zeros in every
    other free coordinate, so the coordinates of a vector of the subspace are
    simply its entries at the free positions.

    Attributes:
        matrix: ambient dimension x subspace dimension
        free: free coordinates, one per basis vector
    """
    matrix: DomainMatrix
    free: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.free)

    def coordinates(self, vectors: DomainMatrix) -> DomainMatrix:
        """Coordinates of column vectors lying in the subspace."""
        return select_rows(vectors, self.free)

    def column(self, k: int) -> list:
        return [row[k] for row in entries(self.matrix)]


def nullspace(m: DomainMatrix) -> EchelonBasis:
    """
    Nullspace of `m` with the canonical basis read off its reduced row echelon form.

    Args:
        m: Constraint matrix, one row per linear equation

    Returns:
        EchelonBasis: Basis vectors indexed by the non-pivot columns
    """
    n_cols = m.shape[1]
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = tuple(col for col in range(n_cols) if col not in pivot_set)
    columns = []
    for free_col in free:
        vector = [QQ(0)] * n_cols
        vector[free_col] = QQ(1)
        for row_index, pivot in enumerate(pivots):
            vector[pivot] = -reduced[row_index][free_col]
        columns.append(vector)
    rows = [[columns[k][r] for k in range(len(free))] for r in range(n_cols)]
    return EchelonBasis(matrix=matrix(rows, (n_cols, len(free))), free=free)


def image_complement(m: DomainMatrix) -> tuple[DomainMatrix, DomainMatrix]:
    """
    Projection onto the standard complement of the column space of `m`.

    The complement is spanned by the unit vectors of the non-pivot coordinates
    of rref(m^T). The projection kills the column space; the lift is the
    inclusion of the complement, so projection . lift is the identity.

    Returns:
        tuple: (projection, lift) of shapes (c x ambient) and (ambient x c)
    """
    ambient = m.shape[0]
    reduced, pivots = rref(transpose(m))
    pivot_set = set(pivots)
    complement = [col for col in range(ambient) if col not in pivot_set]
    projection_rows = []
    for col in complement:
        row = [QQ(0)] * ambient
        row[col] = QQ(1)
        for row_index, pivot in enumerate(pivots):
            row[pivot] = -reduced[row_index][col]
        projection_rows.append(row)
    lift_rows = [
        [1 if col == target else 0 for target in complement]
        for col in range(ambient)
    ]
    projection = matrix(projection_rows, (len(complement), ambient))
    lift = matrix(lift_rows, (ambient, len(complement)))
    return projection, lift


def to_pairs(m: DomainMatrix) -> list[list[tuple[int, int]]]:
    """Entries as (numerator, denominator) integer pairs."""
    return [[(int(entry.numerator), int(entry.denominator)) for entry in row] for row in entries(m)]


def from_pairs(rows: Sequence[Sequence[Sequence[int]]], shape: tuple[int, int]) -> DomainMatrix:
    return matrix([[QQ(int(num), int(den)) for num, den in row] for row in rows], shape)
