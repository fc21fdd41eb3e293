import pytest

from app.core.exceptions import ComputationError
from app.services.coefficient_service import atom_1h, constant_q
from app.services.configuration_service import admissible_basis, betti
from app.services.descriptor_service import load_lattice, parse_representation
from app.services.pipeline_service import (
    check_hypothesis,
    cohomology_table,
    constant_q_cohomology,
    decompose_homology,
    e2_page,
    e2_totals,
    fixed_dims,
    fixed_rep_dim,
    make_representation,
    realize_system,
    regular_representation,
    undetermined_degrees,
)

E2_HOM_Q3 = {
    (0, 0): 1, (7, 0): 3, (14, 0): 2,
    (0, 1): 3, (3, 1): 9, (6, 1): 6,
    (0, 2): 2, (1, 2): 6, (2, 2): 4,
}

E2_HOM_Q4 = {
    (0, 0): 1, (7, 0): 6, (14, 0): 11, (21, 0): 6,
    (0, 1): 3, (3, 1): 18, (6, 1): 33, (9, 1): 18,
    (0, 2): 2, (1, 2): 12, (2, 2): 22, (3, 2): 12,
}


def _atoms(row):
    return {h: multiplicity for h, multiplicity in enumerate(row.atom_multiplicities) if multiplicity}


@pytest.fixture(scope="module")
def regular_q3(d8_lattice):
    return decompose_homology(d8_lattice, regular_representation(d8_lattice), 3)


@pytest.fixture(scope="module")
def regular_q4(d8_lattice):
    return decompose_homology(d8_lattice, regular_representation(d8_lattice), 4)


def test_regular_representation(d8_lattice):
    """R[G] has dimension |G| and [G:H] fixed dimensions."""
    v = regular_representation(d8_lattice)
    assert v.dimension == 8
    assert v.label == "regular"
    assert fixed_dims(d8_lattice, v) == (8, 4, 4, 4, 2, 2, 2, 1)
    assert check_hypothesis(d8_lattice, v) == []


def test_free_representation(d8_lattice):
    """Several copies of R[G] scale every fixed dimension."""
    v = regular_representation(d8_lattice, 2)
    assert v.label == "free:2"
    assert fixed_dims(d8_lattice, v) == (16, 8, 8, 8, 4, 4, 4, 2)


def test_orbit_representation(d8_lattice):
    """R[G/Z] is fixed by the centre and has one dimension per H-orbit."""
    v = make_representation(d8_lattice, [(3, 1)], label="orbits:3x1")
    assert v.dimension == 4
    assert fixed_rep_dim(d8_lattice, v, 0) == 4
    assert fixed_rep_dim(d8_lattice, v, 3) == 4
    assert fixed_rep_dim(d8_lattice, v, 7) == 1


@pytest.mark.parametrize("summands", [[], [(8, 1)], [(0, 0)], [(-1, 2)]])
def test_invalid_representations(d8_lattice, summands):
    """Summands need a known class and a positive multiplicity."""
    with pytest.raises(ComputationError) as error:
        make_representation(d8_lattice, summands)
    assert error.value.key == "invalid_representation_error_key"


def test_hypothesis_violations(d8_lattice):
    """The trivial representation has the same fixed line at every subgroup."""
    violations = check_hypothesis(d8_lattice, make_representation(d8_lattice, [(7, 1)]))
    assert violations
    assert all(violation.lower_dim == violation.upper_dim == 1 for violation in violations)
    assert (0, 7) in {(violation.lower, violation.upper) for violation in violations}


def test_decompose_rejects_violations(d8_lattice):
    """Decomposition needs strictly dropping fixed dimensions."""
    with pytest.raises(ComputationError) as error:
        decompose_homology(d8_lattice, make_representation(d8_lattice, [(7, 1)]), 3)
    assert error.value.key == "hypothesis_violation_error_key"
    assert error.value.exit_code == 1


def test_decompose_rejects_no_points(d8_lattice):
    """At least one configuration point is needed."""
    with pytest.raises(ComputationError) as error:
        decompose_homology(d8_lattice, regular_representation(d8_lattice), 0)
    assert error.value.key == "invalid_point_count_error_key"


def test_regular_decomposition_q3(regular_q3):
    """Conf(R[D8], 3) has homology in degrees 0, 1, 2, 3, 6, 7 and 14."""
    assert regular_q3.degrees == (0, 1, 2, 3, 6, 7, 14)
    rows = {row.degree: row for row in regular_q3.rows}
    assert rows[0].constant_multiplicity == 1
    assert _atoms(rows[0]) == {7: 5}
    assert _atoms(rows[1]) == {4: 3, 5: 3, 6: 3}
    assert _atoms(rows[2]) == {4: 2, 5: 2, 6: 2}
    assert _atoms(rows[3]) == {1: 3, 2: 3, 3: 3}
    assert _atoms(rows[6]) == {1: 2, 2: 2, 3: 2}
    assert _atoms(rows[7]) == {0: 3}
    assert _atoms(rows[14]) == {0: 2}
    assert all(row.constant_multiplicity == 0 for row in regular_q3.rows[1:])


def test_regular_decomposition_q4(regular_q4):
    """Four points: 4! - 1 top atoms in degree 0 and six copies in the first rows."""
    assert _atoms(regular_q4.row(0)) == {7: 23}
    assert _atoms(regular_q4.row(3)) == {h: 6 for h in range(1, 7)}
    assert _atoms(regular_q4.row(21)) == {0: 6}
    assert regular_q4.row(4) is None


def test_single_point(d8_lattice):
    """Conf(V, 1) = V is contractible."""
    table = decompose_homology(d8_lattice, regular_representation(d8_lattice), 1)
    assert table.degrees == (0,)
    assert _atoms(table.rows[0]) == {}


def test_top_fixed_plane_adds_no_atoms(d8_lattice):
    """When V^G is not a line the degree zero row is the constant system alone."""
    table = decompose_homology(d8_lattice, parse_representation(d8_lattice, "free:2"), 3)
    assert table.row(0).constant_multiplicity == 1
    assert _atoms(table.row(0)) == {}
    mixed = decompose_homology(d8_lattice, parse_representation(d8_lattice, "orbits:0x1,7x1"), 3)
    assert mixed.fixed_dims == (9, 5, 5, 5, 3, 3, 3, 2)
    assert _atoms(mixed.row(0)) == {}


def test_c2_decomposition():
    """C2 acting on the plane by swapping coordinates, two points."""
    lat = load_lattice("C2")
    table = decompose_homology(lat, regular_representation(lat), 2)
    assert table.degrees == (0, 1)
    assert _atoms(table.row(0)) == {1: 1}
    assert _atoms(table.row(1)) == {0: 1}


def test_realize_system(d8, regular_q3):
    """Rows become direct sums of the constant system and atoms."""
    degree_zero = realize_system(d8, regular_q3, 0)
    assert degree_zero.dims == (1, 1, 1, 1, 1, 1, 1, 6)
    assert degree_zero.label == "Q ⊕ 5·1_7"
    assert realize_system(d8, regular_q3, 7).dims == (3, 0, 0, 0, 0, 0, 0, 0)
    assert realize_system(d8, regular_q3, 5).is_zero


def test_realize_system_on_another_category(c2, regular_q3):
    """The table must come from the same lattice as the category."""
    with pytest.raises(ComputationError) as error:
        realize_system(c2, regular_q3, 0)
    assert error.value.key == "category_mismatch_error_key"


def test_e2_page_q3(d8, regular_q3, bottom_resolution):
    """Against the bottom atom the Hom table fills rows 0 to 2 and Ext loses degree zero."""
    page = e2_page(d8, regular_q3, atom_1h(d8, 0), bottom_resolution)
    assert page.length == 3
    assert page.hom_complex == E2_HOM_Q3
    assert page.ext == {cell: value for cell, value in E2_HOM_Q3.items() if cell[0] != 0}
    assert e2_totals(page) == {3: 6, 4: 13, 7: 9, 14: 2}
    assert page.coefficient == "1_0"


def test_e2_page_q4(d8, regular_q4, bottom_resolution):
    """Four points against the bottom atom."""
    page = e2_page(d8, regular_q4, atom_1h(d8, 0), bottom_resolution)
    assert page.hom_complex == E2_HOM_Q4
    assert page.ext == {cell: value for cell, value in E2_HOM_Q4.items() if cell[0] != 0}


def test_e2_page_against_constant_collapses(d8, regular_q3):
    """Q is injective, so only row zero survives."""
    page = e2_page(d8, regular_q3, constant_q(d8))
    assert page.length == 1
    assert page.ext == {(0, 0): 1, (7, 0): 3, (14, 0): 2}


def test_e2_page_on_another_category(c2, d8, regular_q3):
    """M must live over the category of the page."""
    with pytest.raises(ComputationError) as error:
        e2_page(d8, regular_q3, constant_q(c2))
    assert error.value.key == "category_mismatch_error_key"


def _ranks(rows):
    return {row.degree: (row.hom, row.ext, row.upper_bound) for row in rows}


def test_cohomology_table_q3(d8, regular_q3, bottom_resolution):
    """Three points: degrees 3 and 4 are only bounded, the rest are read off the page."""
    page = e2_page(d8, regular_q3, atom_1h(d8, 0), bottom_resolution)
    assert undetermined_degrees(page) == (3, 4)
    assert _ranks(cohomology_table(page)) == {
        0: (1, 0, False),
        1: (3, 0, False),
        2: (2, 0, False),
        3: (6, 6, True),
        4: (13, 13, True),
        7: (9, 9, False),
        14: (2, 2, False),
    }


def test_cohomology_table_q4(d8, regular_q4, bottom_resolution):
    """Four points: bounds 12 and 40 in degrees 3 and 4."""
    page = e2_page(d8, regular_q4, atom_1h(d8, 0), bottom_resolution)
    assert undetermined_degrees(page) == (3, 4)
    assert _ranks(cohomology_table(page)) == {
        0: (1, 0, False),
        1: (3, 0, False),
        2: (2, 0, False),
        3: (12, 12, True),
        4: (40, 40, True),
        5: (12, 12, False),
        7: (39, 39, False),
        10: (18, 18, False),
        14: (11, 11, False),
        21: (6, 6, False),
    }


def test_cohomology_table_ext_column_matches_totals(d8, regular_q4, bottom_resolution):
    """The ext column is the antidiagonal sum of the Ext table."""
    page = e2_page(d8, regular_q4, atom_1h(d8, 0), bottom_resolution)
    rows = cohomology_table(page)
    assert {row.degree: row.ext for row in rows if row.ext} == e2_totals(page)


def test_cohomology_table_against_constant_is_exact(d8, regular_q3):
    """A single row cannot carry a differential, so nothing is bounded."""
    page = e2_page(d8, regular_q3, constant_q(d8))
    rows = cohomology_table(page)
    assert undetermined_degrees(page) == ()
    assert [(row.degree, row.hom, row.ext) for row in rows] == [(0, 1, 1), (7, 3, 3), (14, 2, 2)]
    assert not any(row.upper_bound for row in rows)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_constant_cohomology_is_the_orbit_space(d8, d8_lattice, q):
    """With constant coefficients the answer is the cohomology of Conf(R^8, q)."""
    table = decompose_homology(d8_lattice, regular_representation(d8_lattice), q)
    assert constant_q_cohomology(d8, table) == betti(8, q).ranks


def test_multiplicities_count_admissible_monomials(d8_lattice, regular_q4):
    """Atom multiplicities in positive degree equal the admissible basis of the fixed space."""
    for row in regular_q4.rows[1:]:
        for h, multiplicity in enumerate(row.atom_multiplicities):
            n = regular_q4.fixed_dims[h]
            expected = 0
            if n >= 2 and row.degree % (n - 1) == 0 and row.degree // (n - 1) < regular_q4.q:
                expected = len(admissible_basis(n, regular_q4.q, row.degree // (n - 1)))
            assert multiplicity == expected


def test_betti_mass(regular_q4):
    """Across all degrees every class carries q! in total."""
    for h in range(len(regular_q4.fixed_dims)):
        mass = sum(
            row.atom_multiplicities[h] + row.constant_multiplicity
            for row in regular_q4.rows
        )
        assert mass == 24
