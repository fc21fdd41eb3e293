import json

from typer.testing import CliRunner

from app.cli import cli
from app.core.logger import configure
from app.schemas.category import OrbitCategorySchema
from app.services.descriptor_service import load_orbit_category
from app.services.report_service import category_report


def test_betti_json(runner: CliRunner):
    """betti emits a versioned JSON document."""
    result = runner.invoke(cli, ["betti", "-n", "8", "-q", "3", "-f", "json"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["ranks"] == {"0": 1, "7": 3, "14": 2}
    assert data["total"] == 6


def test_betti_csv(runner: CliRunner):
    """CSV has a header and one row per degree."""
    result = runner.invoke(cli, ["betti", "-n", "2", "-q", "4", "-f", "csv"])
    assert result.exit_code == 0
    assert result.stdout == "degree,rank\n0,1\n1,6\n2,11\n3,6\n"


def test_betti_text(runner: CliRunner):
    """Text output carries a title."""
    result = runner.invoke(cli, ["betti"])
    assert result.exit_code == 0
    assert "Betti numbers of Conf(R^2, 3)" in result.stdout


def test_lattice_dot(runner: CliRunner):
    """Hasse diagram of D8."""
    result = runner.invoke(cli, ["lattice", "-g", "D8", "-f", "dot"])
    assert result.exit_code == 0
    assert result.stdout.startswith("digraph G {")
    assert result.stdout.count("->") == 11


def test_orbitcat_json(runner: CliRunner):
    """Orbit category of C2 as JSON."""
    result = runner.invoke(cli, ["orbitcat", "-g", "C2", "-f", "json"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["hom_sizes"] == [[2, 1], [0, 1]]
    assert len(data["composition"]) == 8


def test_decompose_text(runner: CliRunner):
    """The degree zero row of Conf(R[D8], 3)."""
    result = runner.invoke(cli, ["decompose", "-g", "D8", "-q", "3"])
    assert result.exit_code == 0
    assert "Q ⊕ 5·1_7" in result.stdout
    assert "3·1_1 ⊕ 3·1_2 ⊕ 3·1_3" in result.stdout


def test_decompose_csv(runner: CliRunner):
    """One column per atom."""
    result = runner.invoke(cli, ["decompose", "-q", "3", "-f", "csv"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "degree,constant,atom_0,atom_1,atom_2,atom_3,atom_4,atom_5,atom_6,atom_7"
    assert lines[1] == "0,1,0,0,0,0,0,0,0,5"
    assert lines[-1] == "14,0,2,0,0,0,0,0,0,0"


def test_resolve_text(runner: CliRunner):
    """Term dimensions are grouped by subgroup order."""
    result = runner.invoke(cli, ["resolve", "-c", "atom:0"])
    assert result.exit_code == 0
    assert "1;1,1,1;1,1,1;1" in result.stdout
    assert "0;1,1,1;3,3,1;3" in result.stdout
    assert "0;0,0,0;2,2,0;2" in result.stdout


def test_resolve_homology(runner: CliRunner):
    """homology:<n> resolves a homology coefficient system."""
    result = runner.invoke(cli, ["resolve", "-c", "homology:7", "-q", "3", "-f", "json"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["source"] == "3·1_0"
    assert data["terms"][0]["dims"] == [3, 3, 3, 3, 3, 3, 3, 3]


def test_hom_json(runner: CliRunner):
    """Hom(1_0, Q) over D8."""
    result = runner.invoke(cli, ["hom", "-s", "atom:0", "-c", "constQ", "-f", "json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["dim"] == 1


def test_ext_of_a_homology_system(runner: CliRunner):
    """Ext(H_3, 1_0) sits in degree one."""
    result = runner.invoke(cli, ["ext", "-s", "homology:3", "-c", "atom:0", "-f", "json"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["ext"] == [0, 9, 0]
    assert data["hom_complex"] == [0, 9, 0]


def test_e2page_csv(runner: CliRunner):
    """Hom block first, then Ext, rows q descending."""
    result = runner.invoke(cli, ["e2page", "-q", "3", "-c", "atom:0", "-f", "csv"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "table,q," + ",".join(str(p) for p in range(15))
    assert lines[1].startswith("hom,2,2,6,4,")
    assert lines[3].startswith("hom,0,1,")
    assert lines[4].startswith("ext,2,,6,4,")
    assert len(lines) == 7


def test_e2page_text(runner: CliRunner):
    """Both tables are printed."""
    result = runner.invoke(cli, ["e2page", "-q", "3"])
    assert result.exit_code == 0
    assert "Hom(H_p, I^q) against 1_0" in result.stdout
    assert "Ext^q(H_p, 1_0)" in result.stdout


def test_cohomology_csv(runner: CliRunner):
    """One row per total degree, degrees 3 and 4 flagged as bounds."""
    result = runner.invoke(cli, ["cohomology", "-q", "3", "-c", "atom:0", "-f", "csv"])
    assert result.exit_code == 0
    assert result.stdout == (
        "n,hom,ext,status\n"
        "0,1,0,exact\n"
        "1,3,0,exact\n"
        "2,2,0,exact\n"
        "3,6,6,upper bound\n"
        "4,13,13,upper bound\n"
        "7,9,9,exact\n"
        "14,2,2,exact\n"
    )


def test_cohomology_text(runner: CliRunner):
    """Text table under its title."""
    result = runner.invoke(cli, ["cohomology", "-q", "4"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0].rstrip() == "H^n_G(Conf(regular, 4); 1_0)"
    assert any(line.split()[:3] == ["4", "40", "40"] and "upper bound" in line for line in lines)
    assert any(line.split() == ["21", "6", "6", "exact"] for line in lines)


def test_cohomology_json(runner: CliRunner):
    """JSON rows carry the bound flag."""
    result = runner.invoke(cli, ["cohomology", "-q", "4", "-f", "json"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    rows = {row["degree"]: row for row in data["rows"]}
    assert rows[3] == {"degree": 3, "hom": 12, "ext": 12, "upper_bound": True}
    assert rows[5] == {"degree": 5, "hom": 12, "ext": 12, "upper_bound": False}
    assert data["representation"] == "regular"


def test_cohomology_rejects_dot(runner: CliRunner):
    """DOT is not a cohomology format."""
    result = runner.invoke(cli, ["cohomology", "-f", "dot"])
    assert result.exit_code == 2


def test_long_titles_are_not_wrapped(runner: CliRunner):
    """The title stays on one line even above a narrow table."""
    result = runner.invoke(cli, ["decompose", "-g", "C2", "-q", "2"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0].rstrip() == "Homology coefficient systems of Conf(regular, 2) over C2"


def test_constq_json(runner: CliRunner):
    """Constant coefficients give the Betti numbers of the orbit space."""
    result = runner.invoke(cli, ["constq", "-q", "4", "-f", "json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["dims"] == {"0": 1, "7": 6, "14": 11, "21": 6}


def test_output_file(runner: CliRunner, tmp_path):
    """--output writes the artifact instead of printing it."""
    target = tmp_path / "betti.csv"
    result = runner.invoke(cli, ["betti", "-f", "csv", "-o", str(target)])
    assert result.exit_code == 0
    assert result.stdout == ""
    assert target.read_text(encoding="utf-8") == "degree,rank\n0,1\n1,3\n2,2\n"


def test_unknown_group(runner: CliRunner):
    """Unknown groups are parse errors."""
    result = runner.invoke(cli, ["lattice", "-g", "D7"])
    assert result.exit_code == 2
    assert "unknown_group_descriptor_error_key" in result.output


def test_unsupported_format(runner: CliRunner):
    """dot is only available for lattice and orbitcat."""
    result = runner.invoke(cli, ["betti", "-f", "dot"])
    assert result.exit_code == 2
    assert "unsupported_format_error_key" in result.output


def test_invalid_points(runner: CliRunner):
    """q = 0 is a parse error."""
    result = runner.invoke(cli, ["decompose", "-q", "0"])
    assert result.exit_code == 2
    assert "invalid_point_count_error_key" in result.output


def test_invalid_coefficient(runner: CliRunner):
    """Malformed coefficient descriptors are parse errors."""
    result = runner.invoke(cli, ["resolve", "-c", "atom:x"])
    assert result.exit_code == 2
    assert "invalid_coefficient_descriptor_error_key" in result.output


def test_hypothesis_violation(runner: CliRunner):
    """A domain error exits with status 1."""
    result = runner.invoke(cli, ["decompose", "-r", "orbits:7x1"])
    assert result.exit_code == 1
    assert "hypothesis_violation_error_key" in result.output


def test_invalid_class(runner: CliRunner):
    """Atoms need an existing class."""
    result = runner.invoke(cli, ["resolve", "-g", "C2", "-c", "atom:5"])
    assert result.exit_code == 1
    assert "invalid_class_index_error_key" in result.output


def test_json_round_trip(runner: CliRunner):
    """JSON artifacts re-parse into the report they were written from."""
    result = runner.invoke(cli, ["orbitcat", "-g", "S3", "-f", "json"])
    assert result.exit_code == 0
    parsed = OrbitCategorySchema.model_validate_json(result.stdout)
    assert parsed == category_report(load_orbit_category("S3"))


def test_output_is_deterministic(runner: CliRunner):
    """Identical invocations give identical bytes."""
    arguments = ["e2page", "-g", "D8", "-q", "3", "-f", "csv"]
    assert runner.invoke(cli, arguments).stdout == runner.invoke(cli, arguments).stdout


def test_verbose_logs_to_stderr_only(runner: CliRunner):
    """-v adds DEBUG lines on stderr and leaves the artifact untouched."""
    try:
        result = runner.invoke(cli, ["-v", "decompose", "-g", "C2", "-q", "2", "-f", "csv"])
    finally:
        configure()
    assert result.exit_code == 0
    assert result.stdout.startswith("degree,constant")
    assert "DEBUG" in result.stderr
    assert "Decomposition of Conf" in result.stderr
    assert "DEBUG" not in result.stdout


def test_orbitcat_s3_dot(runner: CliRunner):
    """The S3 quiver has one node per subgroup class."""
    result = runner.invoke(cli, ["orbitcat", "-g", "S3", "-f", "dot"])
    assert result.exit_code == 0
    assert result.stdout.startswith("digraph G {")
    assert result.stdout.count("loops=") == 4
