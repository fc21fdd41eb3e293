"""
Constructors and checks for rational coefficient systems.

Besides the constant system and the atoms, this module builds the injective
systems I(V_h): at G/K the value is the space of WH-equivariant maps
Q[(G/K)^H] -> V_h, i.e. the vectors T in V_h^Hom(h, K) with
T(x . e) = rho(e) T(x) for every endomorphism e of h.
"""
from typing import Sequence

from sympy import QQ

from app.core.exceptions import ComputationError
from app.core.logger import log
from app.core.settings import settings
from app.models.category import OrbitCategory
from app.models.coefficient import CoefficientSystem, NatTransformation, ValidationReport, WeylModule
from app.schemas.coefficient import CoefficientSystemSchema
from app.services.constant.response_constant import (
    CATEGORY_MISMATCH_ERROR,
    INVALID_CLASS_INDEX_ERROR,
    INVALID_COEFFICIENT_SYSTEM_ERROR,
    INVALID_WEYL_MODULE_ERROR,
)
from app.services.orbit_category_service import compose
from app.utils import linalg
from app.utils.linalg import EchelonBasis


def check_class(cat: OrbitCategory, h: int) -> None:
    if not 0 <= h < len(cat.objects):
        raise ComputationError(INVALID_CLASS_INDEX_ERROR, value=h)


def constant_q(cat: OrbitCategory) -> CoefficientSystem:
    """Constant system: Q at every object, identities everywhere."""
    return CoefficientSystem(
        category=cat,
        dims=tuple(1 for _ in cat.objects),
        matrices=tuple(linalg.identity(1) for _ in cat.morphisms),
        label="Q",
    )


def zero_system(cat: OrbitCategory) -> CoefficientSystem:
    return CoefficientSystem(
        category=cat,
        dims=tuple(0 for _ in cat.objects),
        matrices=tuple(linalg.zeros(0, 0) for _ in cat.morphisms),
        label="0",
    )


def atom_1h(cat: OrbitCategory, h: int) -> CoefficientSystem:
    """
    Atom supported at class h.

    Every endomorphism of h is an automorphism and acts as the identity;
    all other structure maps vanish.
    """
    check_class(cat, h)
    dims = tuple(1 if obj == h else 0 for obj in cat.objects)
    matrices = tuple(
        linalg.identity(1) if morphism.source == h and morphism.target == h
        else linalg.zeros(dims[morphism.source], dims[morphism.target])
        for morphism in cat.morphisms
    )
    return CoefficientSystem(category=cat, dims=dims, matrices=matrices, label=f"1_{h}")


def direct_sum(
    summands: Sequence[tuple[CoefficientSystem, int]],
    category: OrbitCategory | None = None,
) -> CoefficientSystem:
    """
    Direct sum with multiplicities; structure maps are block diagonal.

    Args:
        summands: (system, multiplicity) pairs, multiplicity 0 drops the summand
        category: Category to use when there is no summand at all

    Raises:
        ComputationError: Summands over different categories
    """
    categories = {id(system.category) for system, _ in summands}
    if category is not None:
        categories.add(id(category))
    if len(categories) > 1:
        raise ComputationError(CATEGORY_MISMATCH_ERROR)
    if category is None:
        if not summands:
            raise ComputationError(CATEGORY_MISMATCH_ERROR, value="empty direct sum without a category")
        category = summands[0][0].category

    expanded = [system for system, multiplicity in summands for _ in range(multiplicity)]
    dims = tuple(sum(system.dims[obj] for system in expanded) for obj in category.objects)
    matrices = tuple(
        linalg.block_diagonal([system.matrices[morphism.index] for system in expanded])
        for morphism in category.morphisms
    )
    label = " ⊕ ".join(
        system.label if multiplicity == 1 else f"{multiplicity}·{system.label}"
        for system, multiplicity in summands if multiplicity > 0
    ) or "0"
    return CoefficientSystem(category=category, dims=dims, matrices=matrices, label=label)


def trivial_weyl_module(cat: OrbitCategory, h: int, dim: int = 1) -> WeylModule:
    check_class(cat, h)
    weyl = cat.lattice.weyl[h]
    return WeylModule(class_index=h, dim=dim, action=tuple(linalg.identity(dim) for _ in range(weyl.order)))


def regular_weyl_module(cat: OrbitCategory, h: int) -> WeylModule:
    """Q[WH] with WH acting by left multiplication on the basis of cosets."""
    check_class(cat, h)
    weyl = cat.lattice.weyl[h]
    size = weyl.order
    action = []
    for element in range(size):
        rows = [[0] * size for _ in range(size)]
        for basis_vector in range(size):
            rows[weyl.mul(element, basis_vector)][basis_vector] = 1
        action.append(linalg.matrix(rows, (size, size)))
    return WeylModule(class_index=h, dim=size, action=tuple(action))


def weyl_module_sum(modules: Sequence[WeylModule]) -> WeylModule:
    classes = {module.class_index for module in modules}
    if len(classes) != 1:
        raise ComputationError(INVALID_WEYL_MODULE_ERROR, value="summands act through different Weyl groups")
    element_count = len(modules[0].action)
    return WeylModule(
        class_index=modules[0].class_index,
        dim=sum(module.dim for module in modules),
        action=tuple(
            linalg.block_diagonal([module.action[element] for module in modules])
            for element in range(element_count)
        ),
    )


def validate_weyl_module(cat: OrbitCategory, v: WeylModule) -> ValidationReport:
    """Check that the action is a homomorphism on the Weyl multiplication table."""
    weyl = cat.lattice.weyl[v.class_index]
    if len(v.action) != weyl.order:
        return ValidationReport(ok=False, violation=f"{len(v.action)} matrices for a Weyl group of order {weyl.order}")
    if any(matrix.shape != (v.dim, v.dim) for matrix in v.action):
        return ValidationReport(ok=False, violation="action matrix with the wrong shape")
    if not linalg.equal(v.action[0], linalg.identity(v.dim)):
        return ValidationReport(ok=False, violation="identity coset does not act trivially")
    for left in range(weyl.order):
        for right in range(weyl.order):
            expected = v.action[weyl.mul(left, right)]
            if not linalg.equal(linalg.product(v.action[left], v.action[right]), expected):
                return ValidationReport(ok=False, violation=f"rho({left})rho({right}) != rho({left}*{right})")
    return ValidationReport(ok=True)


def injective_with_bases(
    cat: OrbitCategory,
    h: int,
    v: WeylModule,
) -> tuple[CoefficientSystem, tuple[EchelonBasis, ...]]:
    """
    I(V_h) together with the echelon basis of its value at every object.

    At object k the ambient space has coordinates (x, a) flattened as
    position(x) * dim V + a, for x in Hom(h, k) and a a coordinate of V.

    Raises:
        ComputationError: The module is attached to another class or is not a module
    """
    check_class(cat, h)
    if v.class_index != h:
        raise ComputationError(INVALID_WEYL_MODULE_ERROR, value=f"module of class {v.class_index} used at class {h}")
    report = validate_weyl_module(cat, v)
    if not report.ok:
        raise ComputationError(INVALID_WEYL_MODULE_ERROR, value=report.violation)

    width = v.dim
    endomorphisms = cat.endomorphisms(h)
    actions = [linalg.entries(matrix) for matrix in v.action]

    bases = []
    for obj in cat.objects:
        fixed = cat.hom(h, obj)
        position = {morphism: index for index, morphism in enumerate(fixed)}
        size = len(fixed) * width
        rows = []
        for weyl_position, endomorphism in enumerate(endomorphisms):
            rho = actions[weyl_position]
            for index, morphism in enumerate(fixed):
                image = position[compose(cat, morphism, endomorphism)]
                for r in range(width):
                    row = [QQ(0)] * size
                    row[image * width + r] += 1
                    for c in range(width):
                        row[index * width + c] -= rho[r][c]
                    if any(row):
                        rows.append(row)
        bases.append(linalg.nullspace(linalg.matrix(rows, (len(rows), size))))

    dims = tuple(basis.dim for basis in bases)
    matrices = []
    for morphism in cat.morphisms:
        source_basis = bases[morphism.source]
        target_rows = linalg.entries(bases[morphism.target].matrix)
        fixed = cat.hom(h, morphism.source)
        rows = []
        for free in source_basis.free:
            index, coordinate = divmod(free, width)
            image = compose(cat, morphism.index, fixed[index])
            rows.append(target_rows[cat.position(image) * width + coordinate])
        matrices.append(linalg.matrix(rows, (dims[morphism.source], dims[morphism.target])))

    system = CoefficientSystem(category=cat, dims=dims, matrices=tuple(matrices), label=f"I(V_{h})")
    log.debug(f"I(V_{h}) with dim V = {width}: dims {dims}")
    return system, tuple(bases)


def injective_ivh(cat: OrbitCategory, h: int, v: WeylModule) -> CoefficientSystem:
    """
    Injective system I(V_h).

    Args:
        cat: Orbit category
        h: Class index
        v: Module over the Weyl group of h

    Returns:
        CoefficientSystem: G/K -> Hom over Q[WH] of Q[(G/K)^H] into V_h
    """
    system, _ = injective_with_bases(cat, h, v)
    return system


def validate(m: CoefficientSystem) -> ValidationReport:
    """
    Check shapes, M(id) = 1 and M(psi . phi) = M(phi) M(psi) on the whole composition table.
    """
    cat = m.category
    for morphism in cat.morphisms:
        expected = (m.dims[morphism.source], m.dims[morphism.target])
        if m.matrices[morphism.index].shape != expected:
            return ValidationReport(
                ok=False,
                violation=f"matrix of morphism {morphism.index} has shape {m.matrices[morphism.index].shape}, expected {expected}",
                morphisms=(morphism.index,),
            )
    for obj, identity in zip(cat.objects, cat.identities):
        if not linalg.equal(m.matrices[identity], linalg.identity(m.dims[obj])):
            return ValidationReport(ok=False, violation=f"identity of object {obj} is not sent to 1", morphisms=(identity,))
    for (second, first), composite in cat.composition.items():
        expected = linalg.product(m.matrices[first], m.matrices[second])
        if not linalg.equal(m.matrices[composite], expected):
            return ValidationReport(
                ok=False,
                violation=f"M({second} . {first}) != M({first}) M({second})",
                morphisms=(second, first, composite),
            )
    return ValidationReport(ok=True)


def validate_natural(f: NatTransformation) -> ValidationReport:
    """Check f_X M(phi) = N(phi) f_Y for every morphism phi: X -> Y."""
    source, target = f.source, f.target
    cat = source.category
    if target.category is not cat:
        return ValidationReport(ok=False, violation="source and target over different categories")
    for obj in cat.objects:
        if f.components[obj].shape != (target.dims[obj], source.dims[obj]):
            return ValidationReport(ok=False, violation=f"component at object {obj} has the wrong shape")
    for morphism in cat.morphisms:
        left = linalg.product(f.components[morphism.source], source.matrices[morphism.index])
        right = linalg.product(target.matrices[morphism.index], f.components[morphism.target])
        if not linalg.equal(left, right):
            return ValidationReport(
                ok=False,
                violation=f"naturality square of morphism {morphism.index} does not commute",
                morphisms=(morphism.index,),
            )
    return ValidationReport(ok=True)


def system_to_schema(m: CoefficientSystem) -> CoefficientSystemSchema:
    return CoefficientSystemSchema(
        schema_version=settings.SCHEMA_VERSION,
        group=m.category.lattice.group.name,
        label=m.label,
        dims=list(m.dims),
        matrices={
            morphism.index: linalg.to_pairs(m.matrices[morphism.index])
            for morphism in m.category.morphisms
        },
    )


def system_from_schema(cat: OrbitCategory, schema: CoefficientSystemSchema) -> CoefficientSystem:
    """
    Rebuild a coefficient system from its JSON form.

    Raises:
        ComputationError: Dimensions or matrices inconsistent with the category
    """
    if len(schema.dims) != len(cat.objects) or set(schema.matrices) != set(range(cat.morphism_count)):
        raise ComputationError(INVALID_COEFFICIENT_SYSTEM_ERROR, value=schema.label)
    matrices = []
    for morphism in cat.morphisms:
        shape = (schema.dims[morphism.source], schema.dims[morphism.target])
        try:
            matrices.append(linalg.from_pairs(schema.matrices[morphism.index], shape))
        except (ValueError, ZeroDivisionError) as error:
            raise ComputationError(INVALID_COEFFICIENT_SYSTEM_ERROR, value=str(error)) from error
    return CoefficientSystem(category=cat, dims=tuple(schema.dims), matrices=tuple(matrices), label=schema.label)
