"""
Command service

Turns a parsed CommandConfig into the artifact it asks for, as a string.
"""
from app.core.logger import log
from app.models.category import OrbitCategory
from app.models.coefficient import CoefficientSystem
from app.models.pipeline import DecompositionTable
from app.schemas.command import Command, CommandConfig, OutputFormat
from app.services.configuration_service import betti
from app.services.descriptor_service import (
    load_coefficient,
    load_lattice,
    load_orbit_category,
    parse_representation,
)
from app.services.homology_service import ext_and_hom_complex, hom_basis, injective_resolution
from app.services.orbit_category_service import export_lattice_dot, export_quiver_dot
from app.services.pipeline_service import cohomology_table, constant_q_cohomology, decompose_homology, e2_page
from app.services import report_service
from app.utils import renderers


def _json(schema) -> str:
    return schema.model_dump_json(indent=2) + "\n"


def _table(config: CommandConfig, title: str, header: list[str], rows: list[list[str]]) -> str:
    if config.format == OutputFormat.CSV:
        return renderers.to_csv(header, rows)
    return renderers.to_text(title, header, rows)


def _decomposition(config: CommandConfig) -> DecompositionTable:
    lat = load_lattice(config.group)
    return decompose_homology(lat, parse_representation(lat, config.representation), config.points)


def _coefficient(config: CommandConfig, cat: OrbitCategory, descriptor: str) -> CoefficientSystem:
    return load_coefficient(cat, descriptor, config.points, config.representation)


def _lattice(config: CommandConfig) -> str:
    lat = load_lattice(config.group)
    if config.format == OutputFormat.JSON:
        return _json(report_service.lattice_report(lat))
    if config.format == OutputFormat.DOT:
        return export_lattice_dot(lat)
    return _table(config, f"Subgroup classes of {config.group}", *renderers.lattice_rows(lat))


def _orbit_category(config: CommandConfig) -> str:
    cat = load_orbit_category(config.group)
    if config.format == OutputFormat.JSON:
        return _json(report_service.category_report(cat))
    if config.format == OutputFormat.DOT:
        return export_quiver_dot(cat)
    title = f"Orbit category of {config.group}: {cat.morphism_count} morphisms"
    return _table(config, title, *renderers.category_rows(cat))


def _betti(config: CommandConfig) -> str:
    table = betti(config.dimension, config.points)
    if config.format == OutputFormat.JSON:
        return _json(report_service.betti_report(table))
    return _table(config, f"Betti numbers of Conf(R^{table.n}, {table.q})", *renderers.betti_rows(table))


def _decompose(config: CommandConfig) -> str:
    table = _decomposition(config)
    if config.format == OutputFormat.JSON:
        return _json(report_service.decomposition_report(table, config.group))
    if config.format == OutputFormat.CSV:
        return renderers.to_csv(*renderers.decomposition_csv_rows(table))
    title = f"Homology coefficient systems of Conf({table.representation.label}, {table.q}) over {config.group}"
    return renderers.to_text(title, *renderers.decomposition_rows(table))


def _resolve(config: CommandConfig) -> str:
    cat = load_orbit_category(config.group)
    resolution = injective_resolution(_coefficient(config, cat, config.coefficient))
    if config.format == OutputFormat.JSON:
        return _json(report_service.resolution_report(resolution))
    return _table(config, f"Injective resolution of {resolution.source.label}", *renderers.resolution_rows(resolution))


def _hom(config: CommandConfig) -> str:
    cat = load_orbit_category(config.group)
    basis = hom_basis(_coefficient(config, cat, config.source), _coefficient(config, cat, config.coefficient))
    if config.format == OutputFormat.JSON:
        return _json(report_service.hom_report(basis))
    rows = [[basis.source.label, basis.target.label, str(basis.dim)]]
    return _table(config, f"Hom over {config.group}", ["source", "target", "dim"], rows)


def _ext(config: CommandConfig) -> str:
    cat = load_orbit_category(config.group)
    m = _coefficient(config, cat, config.source)
    n = _coefficient(config, cat, config.coefficient)
    ext, hom_complex = ext_and_hom_complex(m, injective_resolution(n))
    if config.format == OutputFormat.JSON:
        return _json(report_service.ext_report(m, n, ext, hom_complex))
    return _table(config, f"Ext^q({m.label}, {n.label})", *renderers.ext_rows(ext, hom_complex))


def _e2_page(config: CommandConfig) -> str:
    cat = load_orbit_category(config.group)
    page = e2_page(cat, _decomposition(config), _coefficient(config, cat, config.coefficient))
    if config.format == OutputFormat.JSON:
        return _json(report_service.e2_report(page, config.group))
    if config.format == OutputFormat.CSV:
        return renderers.e2_csv(page)
    return renderers.e2_text(page)


def _cohomology(config: CommandConfig) -> str:
    cat = load_orbit_category(config.group)
    table = _decomposition(config)
    page = e2_page(cat, table, _coefficient(config, cat, config.coefficient))
    rows = cohomology_table(page)
    if config.format == OutputFormat.JSON:
        return _json(report_service.cohomology_report(page, rows, table.representation.label, config.group))
    title = f"H^n_G(Conf({table.representation.label}, {table.q}); {page.coefficient})"
    return _table(config, title, *renderers.cohomology_rows(rows))


def _constant_cohomology(config: CommandConfig) -> str:
    cat = load_orbit_category(config.group)
    table = _decomposition(config)
    dims = constant_q_cohomology(cat, table)
    if config.format == OutputFormat.JSON:
        return _json(report_service.constant_cohomology_report(table, dims, config.group))
    title = f"Equivariant cohomology of Conf({table.representation.label}, {table.q}) with constant coefficients"
    return _table(config, title, *renderers.degree_rows(dims))


HANDLERS = {
    Command.LATTICE: _lattice,
    Command.ORBITCAT: _orbit_category,
    Command.BETTI: _betti,
    Command.DECOMPOSE: _decompose,
    Command.RESOLVE: _resolve,
    Command.HOM: _hom,
    Command.EXT: _ext,
    Command.E2PAGE: _e2_page,
    Command.COHOMOLOGY: _cohomology,
    Command.CONSTQ: _constant_cohomology,
}


def execute(config: CommandConfig) -> str:
    """
    Compute and render the artifact of one command.

    Raises:
        ComputationError: Any descriptor or domain error
    """
    log.info(f"Running {config.command.value} on {config.group} as {config.format.value}")
    return HANDLERS[config.command](config)
