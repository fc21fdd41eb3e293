import pytest
from fastapi.testclient import TestClient
from typer.testing import CliRunner

from app.main import app
from app.services.coefficient_service import atom_1h
from app.services.descriptor_service import load_lattice, load_orbit_category
from app.services.homology_service import injective_resolution


@pytest.fixture(scope="session")
def c2():
    return load_orbit_category("C2")


@pytest.fixture(scope="session")
def s3():
    return load_orbit_category("S3")


@pytest.fixture(scope="session")
def d8():
    return load_orbit_category("D8")


@pytest.fixture(scope="session")
def q8():
    return load_orbit_category("Q8")


@pytest.fixture(scope="session")
def a4():
    return load_orbit_category("A4")


@pytest.fixture(scope="session")
def d8_lattice():
    return load_lattice("D8")


@pytest.fixture(scope="session")
def bottom_resolution(d8):
    """Injective resolution of the atom at the trivial subgroup of D8."""
    return injective_resolution(atom_1h(d8, 0))


@pytest.fixture
def client():
    with TestClient(app) as test_client:
        yield test_client


@pytest.fixture
def runner():
    return CliRunner()
