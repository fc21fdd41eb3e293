import random

import pytest

from app.core.exceptions import ComputationError
from app.services.coefficient_service import (
    atom_1h,
    constant_q,
    direct_sum,
    injective_ivh,
    regular_weyl_module,
    trivial_weyl_module,
    validate,
    validate_natural,
    zero_system,
)
from app.services.homology_service import (
    compare_hom_formula,
    compose_nat,
    ext_and_hom_complex,
    ext_dims,
    hom_1h_formula,
    hom_basis,
    hom_cochain,
    hom_complex_dims,
    identity_nat,
    injective_envelope,
    injective_resolution,
    kernel_cokernel,
    zero_nat,
)
from app.services.group_service import longest_chain_length
from app.utils import linalg


def test_hom_constant_to_constant(d8):
    """Endomorphisms of Q are the scalars."""
    basis = hom_basis(constant_q(d8), constant_q(d8))
    assert basis.dim == 1
    assert validate_natural(basis.basis[0]).ok


@pytest.mark.parametrize("h, dim", [(0, 1)] + [(h, 0) for h in range(1, 8)])
def test_hom_atom_to_constant(d8, h, dim):
    """Only the bottom atom maps into Q."""
    assert hom_basis(atom_1h(d8, h), constant_q(d8)).dim == dim


def test_hom_constant_to_bottom_atom(d8):
    """Q has no map onto the bottom atom."""
    assert hom_basis(constant_q(d8), atom_1h(d8, 0)).dim == 0


def test_hom_basis_elements_are_natural(d8):
    """Every basis transformation commutes with the structure maps."""
    source = direct_sum([(constant_q(d8), 1), (atom_1h(d8, 0), 1)])
    target = injective_ivh(d8, 0, regular_weyl_module(d8, 0))
    basis = hom_basis(source, target)
    assert basis.dim > 0
    for transformation in basis.basis:
        assert validate_natural(transformation).ok


def test_hom_coordinates(d8):
    """Basis vectors have unit coordinates in their own basis."""
    basis = hom_basis(constant_q(d8), injective_ivh(d8, 0, regular_weyl_module(d8, 0)))
    for k, transformation in enumerate(basis.basis):
        coordinates = basis.coordinates(transformation)
        assert coordinates == [1 if j == k else 0 for j in range(basis.dim)]


def test_hom_across_categories(c2, d8):
    """Hom needs both systems over the same category."""
    with pytest.raises(ComputationError) as error:
        hom_basis(constant_q(c2), constant_q(d8))
    assert error.value.key == "category_mismatch_error_key"


@pytest.mark.parametrize("h", range(8))
def test_hom_into_injective_is_weyl_invariants(d8, h):
    """Hom(Q, I(V_h)) is the WH-invariants of V_h, one-dimensional for both module choices."""
    assert hom_basis(constant_q(d8), injective_ivh(d8, h, trivial_weyl_module(d8, h))).dim == 1
    assert hom_basis(constant_q(d8), injective_ivh(d8, h, regular_weyl_module(d8, h))).dim == 1


def test_identity_and_zero_transformations(d8):
    """Identity and zero are natural and compose as expected."""
    m = constant_q(d8)
    identity = identity_nat(m)
    zero = zero_nat(m, atom_1h(d8, 0))
    assert validate_natural(identity).ok
    assert validate_natural(zero).ok
    composite = compose_nat(zero, identity)
    assert all(linalg.is_zero(component) for component in composite.components)


def test_kernel_and_cokernel_of_identity(d8):
    """The identity has zero kernel and cokernel."""
    split = kernel_cokernel(identity_nat(constant_q(d8)))
    assert split.kernel.is_zero
    assert split.cokernel.is_zero


def test_kernel_and_cokernel_of_zero(d8):
    """The zero map keeps everything."""
    m = constant_q(d8)
    n = atom_1h(d8, 3)
    split = kernel_cokernel(zero_nat(m, n))
    assert split.kernel.dims == m.dims
    assert split.cokernel.dims == n.dims
    assert validate(split.kernel).ok
    assert validate(split.cokernel).ok
    assert validate_natural(split.inclusion).ok
    assert validate_natural(split.projection).ok


def test_envelope_of_an_atom(d8):
    """1_h embeds into a single injective supported above h."""
    envelope = injective_envelope(atom_1h(d8, 3))
    assert [module.class_index for module in envelope.summands] == [3]
    assert validate(envelope.system).ok
    assert validate_natural(envelope.eta).ok


def test_envelope_of_zero(d8):
    """The zero system needs no injectives."""
    envelope = injective_envelope(zero_system(d8))
    assert envelope.system.is_zero
    assert envelope.summands == ()


def test_bottom_atom_resolution(bottom_resolution):
    """0 -> 1_0 -> I0 -> I1 -> I2 -> 0 over D8."""
    assert [term.dims for term in bottom_resolution.terms] == [
        (1, 1, 1, 1, 1, 1, 1, 1),
        (0, 1, 1, 1, 3, 3, 1, 3),
        (0, 0, 0, 0, 2, 2, 0, 2),
    ]
    assert bottom_resolution.length == 2
    assert [sorted(module.class_index for module in summands) for summands in bottom_resolution.summands] == [
        [0], [1, 2, 3], [4, 5],
    ]


def test_first_term_is_constant(d8, bottom_resolution):
    """The envelope of the bottom atom is the constant system."""
    assert hom_basis(constant_q(d8), bottom_resolution.terms[0]).dim == 1
    assert hom_basis(bottom_resolution.terms[0], constant_q(d8)).dim == 1


def test_resolution_maps_are_natural(bottom_resolution):
    """Augmentation and differentials are natural and compose to zero."""
    maps = (bottom_resolution.augmentation, *bottom_resolution.differentials)
    for transformation in maps:
        assert validate_natural(transformation).ok
    for first, second in zip(maps, maps[1:]):
        assert all(linalg.is_zero(component) for component in compose_nat(second, first).components)


@pytest.mark.parametrize("name", ["c2", "s3", "d8", "q8", "a4"])
def test_resolution_length_is_bounded(name, request):
    """Atoms resolve within the longest chain of subgroups."""
    cat = request.getfixturevalue(name)
    guard = longest_chain_length(cat.lattice)
    for h in cat.objects:
        resolution = injective_resolution(atom_1h(cat, h))
        assert 1 <= len(resolution.terms) <= guard


def test_top_atom_is_injective(d8):
    """The atom at G/G is its own envelope."""
    resolution = injective_resolution(atom_1h(d8, 7))
    assert len(resolution.terms) == 1
    assert resolution.terms[0].dims == atom_1h(d8, 7).dims


@pytest.mark.parametrize("h", [0, 3, 6])
def test_injectives_resolve_in_one_step(d8, h):
    """An injective has a resolution with a single term."""
    injective = injective_ivh(d8, h, regular_weyl_module(d8, h))
    resolution = injective_resolution(injective)
    assert len(resolution.terms) == 1
    assert resolution.terms[0].dims == injective.dims


def test_ext_constant_into_bottom_atom(d8, bottom_resolution):
    """Ext(Q, 1_0) vanishes although the Hom complex does not."""
    m = constant_q(d8)
    ext, hom_complex = ext_and_hom_complex(m, bottom_resolution)
    assert ext == (0, 0, 0)
    assert hom_complex == (1, 3, 2)
    assert hom_complex_dims(m, bottom_resolution) == hom_complex


@pytest.mark.parametrize("h, ext", [
    (0, (1, 0, 0)),
    (1, (0, 1, 0)),
    (2, (0, 1, 0)),
    (3, (0, 1, 0)),
    (4, (0, 0, 1)),
    (5, (0, 0, 1)),
    (6, (0, 0, 0)),
    (7, (0, 0, 0)),
])
def test_ext_atoms_into_bottom_atom(d8, bottom_resolution, h, ext):
    """Ext(1_h, 1_0) sits in one degree for the atoms with a nonzero group."""
    assert ext_dims(atom_1h(d8, h), bottom_resolution.source, bottom_resolution) == ext


def test_ext_recomputes_the_resolution(d8):
    """Without a resolution ext_dims resolves the second argument itself."""
    assert ext_dims(atom_1h(d8, 0), atom_1h(d8, 0)) == (1, 0, 0)


def test_ext_into_injective_is_concentrated(d8):
    """Ext^q(M, I) = 0 for q > 0."""
    injective = injective_ivh(d8, 3, trivial_weyl_module(d8, 3))
    assert ext_dims(constant_q(d8), injective) == (1,)


def test_hom_cochain_shapes(d8, bottom_resolution):
    """Differentials map Hom(M, I^q) to Hom(M, I^(q+1))."""
    bases, differentials = hom_cochain(constant_q(d8), bottom_resolution)
    assert [basis.dim for basis in bases] == [1, 3, 2]
    assert [differential.shape for differential in differentials] == [(3, 1), (2, 3)]
    assert linalg.is_zero(linalg.product(differentials[1], differentials[0]))


def test_hom_formula_on_the_resolution(bottom_resolution):
    """The kernel formula matches the solver on I0 and I1."""
    for term in bottom_resolution.terms[:2]:
        assert all(comparison.agrees for comparison in compare_hom_formula(term))


def test_hom_formula_needs_weyl_invariants(bottom_resolution):
    """On I2 the plain kernel formula overcounts at the Klein four classes."""
    comparisons = compare_hom_formula(bottom_resolution.terms[2])
    disagreements = [comparison.class_index for comparison in comparisons if not comparison.agrees]
    assert disagreements == [4, 5]
    for comparison in comparisons:
        assert comparison.weyl_invariant_formula == comparison.hom_dim


def test_hom_formula_values(bottom_resolution):
    """Hom(1_h, I1) is one-dimensional exactly at the order two classes."""
    term = bottom_resolution.terms[1]
    assert [hom_1h_formula(term, h, weyl_invariant=True) for h in range(8)] == [0, 1, 1, 1, 0, 0, 0, 0]


@pytest.mark.parametrize("source, target", [
    ("constant", "atom"),
    ("atom", "constant"),
    ("atom", "injective"),
    ("constant", "injective"),
])
def test_ext_zero_is_hom(d8, source, target):
    """Ext^0(M, N) = dim Hom(M, N)."""
    systems = {
        "constant": constant_q(d8),
        "atom": atom_1h(d8, 3),
        "injective": injective_ivh(d8, 1, regular_weyl_module(d8, 1)),
    }
    m, n = systems[source], systems[target]
    assert ext_dims(m, n)[0] == hom_basis(m, n).dim


def _random_system(cat, rng: random.Random):
    h = rng.randrange(len(cat.objects))
    match rng.choice(["constant", "atom", "sum", "injective"]):
        case "constant":
            return constant_q(cat)
        case "atom":
            return atom_1h(cat, h)
        case "sum":
            other = rng.choice([constant_q(cat), atom_1h(cat, rng.randrange(len(cat.objects)))])
            return direct_sum([(atom_1h(cat, h), rng.randint(1, 2)), (other, 1)])
        case _:
            return injective_ivh(cat, h, regular_weyl_module(cat, h))


@pytest.mark.parametrize("name", ["S3", "D8"])
@pytest.mark.parametrize("seed", range(25))
def test_ext_zero_is_hom_on_random_pairs(request, name, seed):
    """Ext^0(M, N) = dim Hom(M, N) for drawn constants, atoms, sums and injectives."""
    cat = request.getfixturevalue(name.lower())
    rng = random.Random(seed)
    m, n = _random_system(cat, rng), _random_system(cat, rng)
    assert ext_dims(m, n)[0] == hom_basis(m, n).dim


@pytest.mark.parametrize("name", ["S3", "D8"])
@pytest.mark.parametrize("seed", range(10))
def test_ext_into_random_regular_injectives_vanishes(request, name, seed):
    """Ext^q(M, I(R[WH])) = 0 for q > 0."""
    cat = request.getfixturevalue(name.lower())
    rng = random.Random(1000 + seed)
    m = _random_system(cat, rng)
    h = rng.randrange(len(cat.objects))
    injective = injective_ivh(cat, h, regular_weyl_module(cat, h))
    ext = ext_dims(m, injective)
    assert ext[0] == hom_basis(m, injective).dim
    assert not any(ext[1:])


def test_hom_is_additive(d8):
    """Hom turns direct sums in either argument into sums of dimensions."""
    parts = [constant_q(d8), atom_1h(d8, 0), atom_1h(d8, 4)]
    target = injective_ivh(d8, 0, regular_weyl_module(d8, 0))
    total = direct_sum([(part, 1) for part in parts])
    assert hom_basis(total, target).dim == sum(hom_basis(part, target).dim for part in parts)
    assert hom_basis(target, total).dim == sum(hom_basis(target, part).dim for part in parts)
