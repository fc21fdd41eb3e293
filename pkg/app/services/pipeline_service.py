"""
Equivariant cohomology of configuration spaces Conf(V, q).

For a permutation representation V the H-fixed points of Conf(V, q) are
Conf(V^H, q). When dim V^H drops strictly along every subconjugacy relation,
the homology coefficient system splits into atoms weighted by the Betti numbers
of those fixed configuration spaces, which feeds the E2 page of the universal
coefficient spectral sequence.
"""
from math import factorial
from typing import Sequence

from app.core.exceptions import ComputationError
from app.core.logger import log
from app.models.category import OrbitCategory
from app.models.coefficient import CoefficientSystem
from app.models.group import SubgroupLattice
from app.models.homology import InjectiveResolution
from app.models.pipeline import (
    CohomologyRow,
    DecompositionRow,
    DecompositionTable,
    E2Page,
    GRepresentation,
    HypothesisViolation,
)
from app.services.coefficient_service import atom_1h, constant_q, direct_sum, validate
from app.services.configuration_service import betti
from app.services.constant.response_constant import (
    CATEGORY_MISMATCH_ERROR,
    HYPOTHESIS_VIOLATION_ERROR,
    INTERNAL_CONSISTENCY_ERROR,
    INVALID_POINT_COUNT_ERROR,
    INVALID_REPRESENTATION_ERROR,
    UNSUPPORTED_FIXED_DIMENSION_ERROR,
)
from app.services.group_service import coset_space, orbit_count
from app.services.homology_service import ext_and_hom_complex, hom_basis, injective_resolution


def make_representation(
    lat: SubgroupLattice,
    summands: Sequence[tuple[int, int]],
    label: str = "",
) -> GRepresentation:
    """
    Permutation representation sum of multiplicity * R[G/K].

    Args:
        lat: Subgroup lattice of G
        summands: (class index of K, multiplicity) pairs
        label: Descriptor to carry along

    Raises:
        ComputationError: No summand, unknown class or multiplicity below 1
    """
    if not summands:
        raise ComputationError(INVALID_REPRESENTATION_ERROR, value="no summand")
    for class_index, multiplicity in summands:
        if not 0 <= class_index < lat.class_count or multiplicity < 1:
            raise ComputationError(INVALID_REPRESENTATION_ERROR, value=f"{multiplicity}x{class_index}")
    dimension = sum(
        multiplicity * (lat.group.order // lat.class_order(class_index))
        for class_index, multiplicity in summands
    )
    return GRepresentation(summands=tuple(summands), dimension=dimension, label=label)


def regular_representation(lat: SubgroupLattice, copies: int = 1) -> GRepresentation:
    label = "regular" if copies == 1 else f"free:{copies}"
    return make_representation(lat, [(0, copies)], label=label)


def fixed_rep_dim(lat: SubgroupLattice, v: GRepresentation, h: int) -> int:
    """dim V^H: every summand R[G/K] contributes its number of H-orbits."""
    if not 0 <= h < lat.class_count:
        raise ComputationError(INVALID_REPRESENTATION_ERROR, value=f"class {h}")
    subgroup = lat.representative(h)
    return sum(
        multiplicity * orbit_count(coset_space(lat.group, lat.representative(class_index)), subgroup)
        for class_index, multiplicity in v.summands
    )


def fixed_dims(lat: SubgroupLattice, v: GRepresentation) -> tuple[int, ...]:
    return tuple(fixed_rep_dim(lat, v, h) for h in range(lat.class_count))


def check_hypothesis(lat: SubgroupLattice, v: GRepresentation) -> list[HypothesisViolation]:
    """
    Every pair K below H (distinct classes) whose fixed dimension fails to drop.

    An empty list means the hypothesis holds.
    """
    dims = fixed_dims(lat, v)
    return [
        HypothesisViolation(lower=lower, upper=upper, lower_dim=dims[lower], upper_dim=dims[upper])
        for lower in range(lat.class_count)
        for upper in range(lat.class_count)
        if lower != upper and lat.is_subconjugate(lower, upper) and dims[upper] >= dims[lower]
    ]


def decompose_homology(lat: SubgroupLattice, v: GRepresentation, q: int) -> DecompositionTable:
    """
    Split every homology coefficient system of Conf(V, q) into constant and atoms.

    In degree n > 0 the atom of class h appears as often as the rank of
    H_n(Conf(V^H, q)). Degree 0 is the constant system, plus q! - 1 atoms at the
    class of G when V^G is a line.

    Args:
        lat: Subgroup lattice of G
        v: Permutation representation
        q: Number of points

    Returns:
        DecompositionTable: One row per nonzero degree

    Raises:
        ComputationError: q < 1, hypothesis violated, or a line of fixed points below G
    """
    if q < 1:
        raise ComputationError(INVALID_POINT_COUNT_ERROR, value=f"q = {q}")
    violations = check_hypothesis(lat, v)
    if violations:
        raise ComputationError(
            HYPOTHESIS_VIOLATION_ERROR,
            value="; ".join(violation.describe() for violation in violations),
        )
    dims = fixed_dims(lat, v)
    top = lat.top
    lines = [lat.label(h) for h in range(lat.class_count) if dims[h] == 1 and h != top]
    if lines:
        raise ComputationError(UNSUPPORTED_FIXED_DIMENSION_ERROR, value=lines)

    tables = [betti(dim, q) for dim in dims]
    degrees = sorted({0} | {degree for table in tables for degree in table.degrees})
    rows = []
    for degree in degrees:
        if degree == 0:
            extra = factorial(q) - 1 if dims[top] == 1 else 0
            atoms = tuple(extra if h == top else 0 for h in range(lat.class_count))
            rows.append(DecompositionRow(degree=0, constant_multiplicity=1, atom_multiplicities=atoms))
        else:
            atoms = tuple(table.rank(degree) for table in tables)
            rows.append(DecompositionRow(degree=degree, constant_multiplicity=0, atom_multiplicities=atoms))
    log.debug(f"Decomposition of Conf({v.label or v.dimension}, {q}): fixed dims {dims}, degrees {degrees}")
    return DecompositionTable(q=q, representation=v, fixed_dims=dims, rows=tuple(rows))


def realize_system(cat: OrbitCategory, table: DecompositionTable, degree: int) -> CoefficientSystem:
    """
    The homology coefficient system of one degree as a concrete functor.

    Degrees without a row give the zero system.

    Raises:
        ComputationError: Table built over a lattice of another size, or the sum fails validation
    """
    if len(table.fixed_dims) != len(cat.objects):
        raise ComputationError(CATEGORY_MISMATCH_ERROR, value=f"{len(table.fixed_dims)} classes in the table")
    row = table.row(degree)
    summands = []
    if row is not None:
        if row.constant_multiplicity:
            summands.append((constant_q(cat), row.constant_multiplicity))
        summands.extend(
            (atom_1h(cat, h), multiplicity)
            for h, multiplicity in enumerate(row.atom_multiplicities)
            if multiplicity
        )
    system = direct_sum(summands, category=cat)
    report = validate(system)
    if not report.ok:
        raise ComputationError(INTERNAL_CONSISTENCY_ERROR, value=report.violation)
    return system


def e2_page(
    cat: OrbitCategory,
    table: DecompositionTable,
    m: CoefficientSystem,
    resolution: InjectiveResolution | None = None,
) -> E2Page:
    """
    Ext^q(H_p, M) for every homology degree p, with the Hom(H_p, I^q) table alongside.

    M is resolved once and the resolution reused for every degree.
    """
    if m.category is not cat:
        raise ComputationError(CATEGORY_MISMATCH_ERROR, value=m.label)
    resolution = resolution or injective_resolution(m)
    ext: dict[tuple[int, int], int] = {}
    hom_complex: dict[tuple[int, int], int] = {}
    for p in table.degrees:
        ext_values, hom_values = ext_and_hom_complex(realize_system(cat, table, p), resolution)
        ext.update({(p, q): value for q, value in enumerate(ext_values) if value})
        hom_complex.update({(p, q): value for q, value in enumerate(hom_values) if value})
    log.debug(f"E2 page of q = {table.q} against {m.label}: {len(ext)} nonzero cells")
    return E2Page(
        q=table.q,
        degrees=table.degrees,
        length=len(resolution.terms),
        ext=ext,
        hom_complex=hom_complex,
        coefficient=m.label,
    )


def _antidiagonal_sums(cells: dict[tuple[int, int], int]) -> dict[int, int]:
    totals: dict[int, int] = {}
    for (p, q), value in cells.items():
        totals[p + q] = totals.get(p + q, 0) + value
    return dict(sorted(totals.items()))


def e2_totals(page: E2Page) -> dict[int, int]:
    """Sum of the Ext cells on every antidiagonal p + q = n."""
    return _antidiagonal_sums(page.ext)


def undetermined_degrees(page: E2Page) -> tuple[int, ...]:
    """
    Total degrees touched by a differential between two nonzero cells.

    d_r runs from (p, q) to (p + r, q - r + 1) for r >= 2, as the page is drawn
    with the homological degree p along the horizontal axis. Support is read
    off the Hom-complex table, which contains the support of the Ext table.
    """
    degrees: set[int] = set()
    for p, q in page.hom_complex:
        for r in range(2, q + 2):
            if (p + r, q - r + 1) in page.hom_complex:
                degrees.update((p + q, p + q + 1))
    return tuple(sorted(degrees))


def cohomology_table(page: E2Page) -> tuple[CohomologyRow, ...]:
    """
    Ranks of H^n_G(Conf(V, q); M) per total degree n, from both E2 tables.

    Degrees that a higher differential may change keep their E2 sums, flagged
    as upper bounds; those differentials are not computed.
    """
    hom = _antidiagonal_sums(page.hom_complex)
    ext = _antidiagonal_sums(page.ext)
    bounded = set(undetermined_degrees(page))
    return tuple(
        CohomologyRow(degree=n, hom=hom.get(n, 0), ext=ext.get(n, 0), upper_bound=n in bounded)
        for n in sorted(set(hom) | set(ext))
    )


def constant_q_cohomology(cat: OrbitCategory, table: DecompositionTable) -> dict[int, int]:
    """
    Equivariant cohomology with constant coefficients, degree by degree.

    The spectral sequence collapses because the constant system is injective,
    so the value in degree n is dim Hom(H_n, Q). Zero degrees are omitted.
    """
    constant = constant_q(cat)
    dims = {degree: hom_basis(realize_system(cat, table, degree), constant).dim for degree in table.degrees}
    return {degree: dim for degree, dim in dims.items() if dim}
