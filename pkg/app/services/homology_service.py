"""
Homological algebra in the category of rational coefficient systems.

Hom-spaces are nullspaces of the naturality constraints, injective envelopes
are sums of the systems I(V_h), and Ext is the cohomology of Hom(M, I^*) for an
injective resolution I^* of the second argument.
"""
from sympy import QQ

from app.core.exceptions import ComputationError
from app.core.logger import log
from app.models.coefficient import CoefficientSystem, NatTransformation, WeylModule
from app.models.homology import (
    HomBasis,
    HomFormulaComparison,
    InjectiveEnvelope,
    InjectiveResolution,
    KernelCokernel,
)
from app.services.coefficient_service import (
    atom_1h,
    check_class,
    direct_sum,
    injective_with_bases,
    validate_natural,
    zero_system,
)
from app.services.constant.response_constant import (
    CATEGORY_MISMATCH_ERROR,
    INTERNAL_CONSISTENCY_ERROR,
    RESOLUTION_GUARD_EXCEEDED_ERROR,
)
from app.services.group_service import longest_chain_length
from app.utils import linalg


def _same_category(m: CoefficientSystem, n: CoefficientSystem) -> None:
    if m.category is not n.category:
        raise ComputationError(CATEGORY_MISMATCH_ERROR, value=[m.label, n.label])


def identity_nat(m: CoefficientSystem) -> NatTransformation:
    return NatTransformation(
        source=m,
        target=m,
        components=tuple(linalg.identity(dim) for dim in m.dims),
    )


def zero_nat(m: CoefficientSystem, n: CoefficientSystem) -> NatTransformation:
    _same_category(m, n)
    return NatTransformation(
        source=m,
        target=n,
        components=tuple(linalg.zeros(n.dims[obj], m.dims[obj]) for obj in m.category.objects),
    )


def compose_nat(f: NatTransformation, g: NatTransformation) -> NatTransformation:
    """f . g, with g applied first."""
    return NatTransformation(
        source=g.source,
        target=f.target,
        components=tuple(linalg.product(f_x, g_x) for f_x, g_x in zip(f.components, g.components)),
    )


def hom_basis(m: CoefficientSystem, n: CoefficientSystem) -> HomBasis:
    """
    Canonical basis of Hom(M, N).

    The unknowns are the entries of every component f_X, flattened row major
    in object order. Each morphism phi: X -> Y contributes the equations
    f_X M(phi) - N(phi) f_Y = 0.

    Args:
        m: Source system M
        n: Target system N

    Returns:
        HomBasis: Basis read off the reduced row echelon form of the constraints
    """
    _same_category(m, n)
    cat = m.category
    offsets = []
    total = 0
    for obj in cat.objects:
        offsets.append(total)
        total += n.dims[obj] * m.dims[obj]

    rows = []
    for morphism in cat.morphisms:
        x, y = morphism.source, morphism.target
        if n.dims[x] == 0 or m.dims[y] == 0:
            continue
        source_entries = linalg.entries(m.matrices[morphism.index])
        target_entries = linalg.entries(n.matrices[morphism.index])
        for r in range(n.dims[x]):
            for c in range(m.dims[y]):
                row = [QQ(0)] * total
                for j in range(m.dims[x]):
                    row[offsets[x] + r * m.dims[x] + j] += source_entries[j][c]
                for i in range(n.dims[y]):
                    row[offsets[y] + i * m.dims[y] + c] -= target_entries[r][i]
                if any(row):
                    rows.append(row)

    echelon = linalg.nullspace(linalg.matrix(rows, (len(rows), total)))
    basis = []
    for k in range(echelon.dim):
        vector = echelon.column(k)
        components = []
        for obj in cat.objects:
            start, width = offsets[obj], m.dims[obj]
            components.append(linalg.matrix(
                [vector[start + r * width:start + (r + 1) * width] for r in range(n.dims[obj])],
                (n.dims[obj], width),
            ))
        basis.append(NatTransformation(source=m, target=n, components=tuple(components)))
    log.debug(f"dim Hom({m.label}, {n.label}) = {echelon.dim} from {len(rows)} equations in {total} unknowns")
    return HomBasis(source=m, target=n, basis=tuple(basis), echelon=echelon, offsets=tuple(offsets))


def hom_1h_formula(n: CoefficientSystem, h: int, weyl_invariant: bool = False) -> int:
    """
    Dimension of the part of N(G/H) killed by every structure map from a lower class.

    Args:
        n: Target system
        h: Class index
        weyl_invariant: Also require the vectors to be fixed by every endomorphism of h

    Returns:
        int: The dimension of the intersection of kernels
    """
    cat = n.category
    check_class(cat, h)
    blocks = [
        n.matrices[morphism]
        for lower in cat.objects if lower != h
        for morphism in cat.hom(lower, h)
    ]
    if weyl_invariant:
        blocks.extend(
            linalg.subtract(n.matrices[endomorphism], linalg.identity(n.dims[h]))
            for endomorphism in cat.endomorphisms(h)
        )
    return n.dims[h] - linalg.rank(linalg.stack_rows(blocks, n.dims[h]))


def compare_hom_formula(n: CoefficientSystem) -> tuple[HomFormulaComparison, ...]:
    """Hom(1_h, N) by the kernel formulas and by the naturality solver, for every class h."""
    cat = n.category
    return tuple(
        HomFormulaComparison(
            class_index=h,
            formula=hom_1h_formula(n, h),
            weyl_invariant_formula=hom_1h_formula(n, h, weyl_invariant=True),
            hom_dim=hom_basis(atom_1h(cat, h), n).dim,
        )
        for h in cat.objects
    )


def kernel_cokernel(f: NatTransformation) -> KernelCokernel:
    """
    Objectwise kernel and cokernel of f: M -> N with echelon bases.

    The kernel at X is spanned by the nullspace basis of f_X; the cokernel at X
    by the non-pivot coordinates of rref(f_X^T).
    """
    m, n = f.source, f.target
    cat = m.category
    kernels = [linalg.nullspace(component) for component in f.components]
    complements = [linalg.image_complement(component) for component in f.components]

    kernel_matrices = []
    cokernel_matrices = []
    for morphism in cat.morphisms:
        x, y = morphism.source, morphism.target
        restricted = linalg.product(m.matrices[morphism.index], kernels[y].matrix)
        kernel_matrices.append(kernels[x].coordinates(restricted))
        projection_x = complements[x][0]
        lift_y = complements[y][1]
        cokernel_matrices.append(linalg.product(projection_x, n.matrices[morphism.index], lift_y))

    kernel = CoefficientSystem(
        category=cat,
        dims=tuple(basis.dim for basis in kernels),
        matrices=tuple(kernel_matrices),
        label=f"ker({m.label} -> {n.label})",
    )
    cokernel = CoefficientSystem(
        category=cat,
        dims=tuple(projection.shape[0] for projection, _ in complements),
        matrices=tuple(cokernel_matrices),
        label=f"coker({m.label} -> {n.label})",
    )
    inclusion = NatTransformation(source=kernel, target=m, components=tuple(basis.matrix for basis in kernels))
    projection = NatTransformation(
        source=n,
        target=cokernel,
        components=tuple(projection for projection, _ in complements),
    )
    return KernelCokernel(kernel=kernel, cokernel=cokernel, inclusion=inclusion, projection=projection)


def injective_envelope(m: CoefficientSystem) -> InjectiveEnvelope:
    """
    Embed M into a sum of injectives I(V_h), one per class with V_h nonzero.

    V_h is the intersection of the kernels of all structure maps M(h) -> M(k)
    induced by morphisms from other classes k; it is stable under the Weyl group.
    The WH-equivariant projection pi_h: M(h) -> V_h averages the coordinate
    projection over WH, and the component of eta at k sends m to
    x -> pi_h(M(x) m) for x in Hom(h, k).

    Raises:
        ComputationError: eta fails naturality or injectivity
    """
    cat = m.category
    lattice = cat.lattice
    systems = []
    components_by_summand = []
    modules: list[WeylModule] = []

    for h in cat.objects:
        if m.dims[h] == 0:
            continue
        lower = [
            m.matrices[morphism]
            for other in cat.objects if other != h
            for morphism in cat.hom(other, h)
        ]
        socle = linalg.nullspace(linalg.stack_rows(lower, m.dims[h]))
        if socle.dim == 0:
            continue

        endomorphisms = cat.endomorphisms(h)
        action = []
        for endomorphism in endomorphisms:
            image = linalg.product(m.matrices[endomorphism], socle.matrix)
            rho = socle.coordinates(image)
            if not linalg.equal(image, linalg.product(socle.matrix, rho)):
                raise ComputationError(INTERNAL_CONSISTENCY_ERROR, value=f"V_{h} is not Weyl stable")
            action.append(rho)
        module = WeylModule(class_index=h, dim=socle.dim, action=tuple(action))

        weyl = lattice.weyl[h]
        selector = linalg.select_rows(linalg.identity(m.dims[h]), socle.free)
        averaged = linalg.zeros(socle.dim, m.dims[h])
        for position, endomorphism in enumerate(endomorphisms):
            averaged = linalg.add(
                averaged,
                linalg.product(action[weyl.inverse(position)], selector, m.matrices[endomorphism]),
            )
        projection = linalg.scale(averaged, QQ(1, weyl.order))

        system, bases = injective_with_bases(cat, h, module)
        components = []
        for obj in cat.objects:
            fixed = cat.hom(h, obj)
            rows = []
            for free in bases[obj].free:
                index, coordinate = divmod(free, socle.dim)
                projected = linalg.product(projection, m.matrices[fixed[index]])
                rows.append(linalg.entries(projected)[coordinate])
            components.append(linalg.matrix(rows, (system.dims[obj], m.dims[obj])))

        systems.append(system)
        components_by_summand.append(components)
        modules.append(module)

    envelope = direct_sum([(system, 1) for system in systems], category=cat) if systems else zero_system(cat)
    eta = NatTransformation(
        source=m,
        target=envelope,
        components=tuple(
            linalg.stack_rows([components[obj] for components in components_by_summand], m.dims[obj])
            for obj in cat.objects
        ),
    )

    report = validate_natural(eta)
    if not report.ok:
        raise ComputationError(INTERNAL_CONSISTENCY_ERROR, value=report.violation)
    for obj in cat.objects:
        if linalg.rank(eta.components[obj]) != m.dims[obj]:
            raise ComputationError(INTERNAL_CONSISTENCY_ERROR, value=f"envelope map is not injective at object {obj}")

    log.debug(f"Envelope of {m.label}: summands at {[module.class_index for module in modules]}, dims {envelope.dims}")
    return InjectiveEnvelope(system=envelope, eta=eta, summands=tuple(modules))


def injective_resolution(m: CoefficientSystem) -> InjectiveResolution:
    """
    Iterate envelopes of cokernels until the cokernel vanishes.

    The number of terms never exceeds the length L of the longest subgroup
    chain; going past it raises.

    Raises:
        ComputationError: Guard exceeded or exactness check failed
    """
    guard = longest_chain_length(m.category.lattice)
    envelope = injective_envelope(m)
    augmentation = envelope.eta
    terms = [envelope.system]
    summands = [envelope.summands]
    differentials = []
    previous = augmentation
    while True:
        split = kernel_cokernel(previous)
        if split.cokernel.is_zero:
            break
        if len(terms) >= guard:
            raise ComputationError(RESOLUTION_GUARD_EXCEEDED_ERROR, value=f"{len(terms)} terms, guard {guard}")
        envelope = injective_envelope(split.cokernel)
        differential = compose_nat(envelope.eta, split.projection)
        terms.append(envelope.system)
        summands.append(envelope.summands)
        differentials.append(differential)
        previous = differential

    resolution = InjectiveResolution(
        source=m,
        terms=tuple(terms),
        augmentation=augmentation,
        differentials=tuple(differentials),
        summands=tuple(summands),
    )
    verify_resolution(resolution)
    log.debug(f"Resolution of {m.label}: term dims {[term.dims for term in resolution.terms]}")
    return resolution


def verify_resolution(r: InjectiveResolution) -> None:
    """
    Exactness by rank bookkeeping at every object and stage.

    Raises:
        ComputationError: The augmentation is not injective, a composite is nonzero,
            or kernel and image dimensions differ
    """
    cat = r.source.category
    incoming_maps = (r.augmentation, *r.differentials)
    for obj in cat.objects:
        if linalg.rank(r.augmentation.components[obj]) != r.source.dims[obj]:
            raise ComputationError(INTERNAL_CONSISTENCY_ERROR, value=f"augmentation not injective at object {obj}")
    for degree, term in enumerate(r.terms):
        incoming = incoming_maps[degree]
        outgoing = r.differentials[degree] if degree < len(r.differentials) else None
        for obj in cat.objects:
            image_rank = linalg.rank(incoming.components[obj])
            outgoing_rank = linalg.rank(outgoing.components[obj]) if outgoing else 0
            if term.dims[obj] - outgoing_rank != image_rank:
                raise ComputationError(
                    INTERNAL_CONSISTENCY_ERROR,
                    value=f"resolution not exact at term {degree}, object {obj}",
                )
            if outgoing and not linalg.is_zero(linalg.product(outgoing.components[obj], incoming.components[obj])):
                raise ComputationError(
                    INTERNAL_CONSISTENCY_ERROR,
                    value=f"consecutive maps do not compose to zero at term {degree}, object {obj}",
                )


def hom_cochain(m: CoefficientSystem, r: InjectiveResolution) -> tuple[tuple[HomBasis, ...], tuple]:
    """
    The cochain complex Hom(M, I^0) -> Hom(M, I^1) -> ... in Hom-basis coordinates.

    Returns:
        tuple: (Hom bases, differential matrices of shape dim_(q+1) x dim_q)
    """
    _same_category(m, r.source)
    bases = tuple(hom_basis(m, term) for term in r.terms)
    differentials = []
    for degree, differential in enumerate(r.differentials):
        source_basis, target_basis = bases[degree], bases[degree + 1]
        columns = [
            target_basis.coordinates(compose_nat(differential, transformation))
            for transformation in source_basis.basis
        ]
        differentials.append(linalg.matrix(
            [[column[row] for column in columns] for row in range(target_basis.dim)],
            (target_basis.dim, source_basis.dim),
        ))
    return bases, tuple(differentials)


def ext_and_hom_complex(m: CoefficientSystem, r: InjectiveResolution) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Cohomology dimensions of Hom(M, I^*) together with the dimensions of its terms."""
    bases, differentials = hom_cochain(m, r)
    ranks = [linalg.rank(differential) for differential in differentials]
    ext = []
    for degree, basis in enumerate(bases):
        outgoing = ranks[degree] if degree < len(ranks) else 0
        incoming = ranks[degree - 1] if degree > 0 else 0
        ext.append(basis.dim - outgoing - incoming)
    return tuple(ext), tuple(basis.dim for basis in bases)


def ext_dims(
    m: CoefficientSystem,
    n: CoefficientSystem,
    resolution: InjectiveResolution | None = None,
) -> tuple[int, ...]:
    """
    Dimensions of Ext^q(M, N) for q = 0 .. length of the resolution of N.

    Args:
        m: First argument
        n: Second argument, resolved injectively
        resolution: Precomputed resolution of N, reused when given

    Returns:
        tuple[int, ...]: Ext^0, Ext^1, ...
    """
    _same_category(m, n)
    resolution = resolution or injective_resolution(n)
    ext, _ = ext_and_hom_complex(m, resolution)
    return ext


def hom_complex_dims(m: CoefficientSystem, r: InjectiveResolution) -> tuple[int, ...]:
    """dim Hom(M, I^q) for every term, without taking cohomology."""
    _same_category(m, r.source)
    return tuple(hom_basis(m, term).dim for term in r.terms)
