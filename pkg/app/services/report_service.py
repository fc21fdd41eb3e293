"""
Report service

Builds the versioned JSON artifacts shared by the command line and the HTTP API.
"""
from app.core.settings import settings
from app.models.category import OrbitCategory
from app.models.coefficient import CoefficientSystem, NatTransformation
from app.models.configuration import BettiTable
from app.models.group import SubgroupLattice
from app.models.homology import HomBasis, InjectiveResolution
from app.models.pipeline import CohomologyRow, DecompositionTable, E2Page
from app.schemas.category import MorphismSchema, OrbitCategorySchema
from app.schemas.coefficient import NatTransformationSchema
from app.schemas.configuration import BettiSchema
from app.schemas.group import ConjugacyClassSchema, LatticeSchema, SubgroupSchema
from app.schemas.homology import ExtSchema, HomSchema, ResolutionSchema, ResolutionTermSchema
from app.schemas.pipeline import (
    CohomologyRowSchema,
    CohomologySchema,
    ConstantCohomologySchema,
    DecompositionRowSchema,
    DecompositionSchema,
    E2CellSchema,
    E2PageSchema,
)
from app.services.group_service import longest_chain_length
from app.services.orbit_category_service import category_algebra_dimension
from app.services.pipeline_service import e2_totals
from app.utils import linalg


def transformation_report(f: NatTransformation) -> NatTransformationSchema:
    return NatTransformationSchema(components=[linalg.to_pairs(component) for component in f.components])


def lattice_report(lat: SubgroupLattice) -> LatticeSchema:
    g = lat.group
    return LatticeSchema(
        schema_version=settings.SCHEMA_VERSION,
        group=g.name,
        order=g.order,
        degree=g.degree,
        elements=[list(element.images) for element in g.elements],
        subgroups=[
            SubgroupSchema(
                index=index,
                order=subgroup.order,
                class_index=lat.class_of[index],
                element_indices=list(subgroup.element_indices),
            )
            for index, subgroup in enumerate(lat.subgroups)
        ],
        classes=[
            ConjugacyClassSchema(
                index=conjugacy_class.index,
                order=lat.class_order(conjugacy_class.index),
                label=lat.label(conjugacy_class.index),
                representative=conjugacy_class.representative,
                members=list(conjugacy_class.members),
                normalizer_order=lat.normalizers[conjugacy_class.representative].order,
                weyl_order=lat.weyl[conjugacy_class.index].order,
                above=[
                    upper for upper in range(lat.class_count)
                    if upper != conjugacy_class.index and lat.is_subconjugate(conjugacy_class.index, upper)
                ],
            )
            for conjugacy_class in lat.classes
        ],
        longest_chain=longest_chain_length(lat),
    )


def category_report(cat: OrbitCategory) -> OrbitCategorySchema:
    return OrbitCategorySchema(
        schema_version=settings.SCHEMA_VERSION,
        group=cat.lattice.group.name,
        objects=list(cat.objects),
        labels=[cat.label(obj) for obj in cat.objects],
        hom_sizes=[[len(hom_set) for hom_set in row] for row in cat.hom_sets],
        identities=list(cat.identities),
        morphisms=[
            MorphismSchema(
                index=morphism.index,
                source=morphism.source,
                target=morphism.target,
                representative=morphism.representative,
            )
            for morphism in cat.morphisms
        ],
        composition=[(f, g, composite) for (f, g), composite in sorted(cat.composition.items())],
        algebra_dimension=category_algebra_dimension(cat),
    )


def betti_report(table: BettiTable) -> BettiSchema:
    return BettiSchema(
        schema_version=settings.SCHEMA_VERSION,
        n=table.n,
        q=table.q,
        ranks=dict(sorted(table.ranks.items())),
        total=table.total,
    )


def decomposition_report(table: DecompositionTable, group: str) -> DecompositionSchema:
    return DecompositionSchema(
        schema_version=settings.SCHEMA_VERSION,
        group=group,
        q=table.q,
        representation=table.representation.label,
        dimension=table.representation.dimension,
        fixed_dims=list(table.fixed_dims),
        rows=[
            DecompositionRowSchema(
                degree=row.degree,
                constant=row.constant_multiplicity,
                atoms={h: multiplicity for h, multiplicity in enumerate(row.atom_multiplicities) if multiplicity},
            )
            for row in table.rows
        ],
    )


def resolution_report(r: InjectiveResolution) -> ResolutionSchema:
    return ResolutionSchema(
        schema_version=settings.SCHEMA_VERSION,
        group=r.source.category.lattice.group.name,
        source=r.source.label,
        terms=[
            ResolutionTermSchema(
                degree=degree,
                dims=list(term.dims),
                summands=[module.class_index for module in (r.summands[degree] if r.summands else ())],
            )
            for degree, term in enumerate(r.terms)
        ],
        augmentation=transformation_report(r.augmentation),
        differentials=[transformation_report(differential) for differential in r.differentials],
    )


def hom_report(basis: HomBasis) -> HomSchema:
    return HomSchema(
        schema_version=settings.SCHEMA_VERSION,
        group=basis.source.category.lattice.group.name,
        source=basis.source.label,
        target=basis.target.label,
        dim=basis.dim,
        basis=[transformation_report(transformation) for transformation in basis.basis],
    )


def ext_report(
    m: CoefficientSystem,
    n: CoefficientSystem,
    ext: tuple[int, ...],
    hom_complex: tuple[int, ...],
) -> ExtSchema:
    return ExtSchema(
        schema_version=settings.SCHEMA_VERSION,
        group=m.category.lattice.group.name,
        source=m.label,
        target=n.label,
        ext=list(ext),
        hom_complex=list(hom_complex),
    )


def e2_report(page: E2Page, group: str) -> E2PageSchema:
    cells = sorted(set(page.ext) | set(page.hom_complex))
    return E2PageSchema(
        schema_version=settings.SCHEMA_VERSION,
        group=group,
        points=page.q,
        coefficient=page.coefficient,
        length=page.length,
        degrees=list(page.degrees),
        cells=[
            E2CellSchema(p=p, q=q, ext=page.ext_cell(p, q), hom=page.hom_cell(p, q))
            for p, q in cells
        ],
        totals=e2_totals(page),
    )


def constant_cohomology_report(table: DecompositionTable, dims: dict[int, int], group: str) -> ConstantCohomologySchema:
    return ConstantCohomologySchema(
        schema_version=settings.SCHEMA_VERSION,
        group=group,
        q=table.q,
        representation=table.representation.label,
        dims=dims,
    )


def cohomology_report(
    page: E2Page,
    rows: tuple[CohomologyRow, ...],
    representation: str,
    group: str,
) -> CohomologySchema:
    return CohomologySchema(
        schema_version=settings.SCHEMA_VERSION,
        group=group,
        points=page.q,
        representation=representation,
        coefficient=page.coefficient,
        rows=[
            CohomologyRowSchema(degree=row.degree, hom=row.hom, ext=row.ext, upper_bound=row.upper_bound)
            for row in rows
        ],
    )
