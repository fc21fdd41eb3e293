"""
Aligned text and CSV renderings of computed tables.

Text goes through rich with colour disabled and a fixed console width, so the
same table always renders to the same bytes.
"""
import csv
from io import StringIO
from typing import Sequence

from rich import box
from rich.console import Console
from rich.table import Table
from rich.text import Text

from app.core.settings import settings
from app.models.category import OrbitCategory
from app.models.configuration import BettiTable
from app.models.group import SubgroupLattice
from app.models.homology import InjectiveResolution
from app.models.pipeline import CohomologyRow, DecompositionRow, DecompositionTable, E2Page

Rows = list[list[str]]


def to_text(title: str, header: Sequence[str], rows: Rows) -> str:
    table = Table(box=box.SIMPLE, show_edge=False)
    for column in header:
        table.add_column(column, justify="right" if column.isdigit() else "left")
    for row in rows:
        table.add_row(*(Text(cell) for cell in row))
    output = StringIO()
    console = Console(file=output, width=settings.TEXT_WIDTH, color_system=None, force_terminal=False)
    console.print(Text(title), soft_wrap=True)
    console.print(table)
    return output.getvalue()


def to_csv(header: Sequence[str], rows: Rows) -> str:
    output = StringIO()
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return output.getvalue()


def _levels(lat: SubgroupLattice, values: Sequence[int]) -> str:
    """Values grouped by subgroup order, e.g. "0;1,1,1;3,3,1;3"."""
    return ";".join(
        ",".join(str(values[index]) for index in indices)
        for indices in lat.levels().values()
    )


def lattice_rows(lat: SubgroupLattice) -> tuple[list[str], Rows]:
    header = ["class", "order", "label", "conjugates", "normalizer", "weyl", "above"]
    rows = [
        [
            str(conjugacy_class.index),
            str(lat.class_order(conjugacy_class.index)),
            lat.label(conjugacy_class.index),
            str(len(conjugacy_class.members)),
            str(lat.normalizers[conjugacy_class.representative].order),
            str(lat.weyl[conjugacy_class.index].order),
            " ".join(
                str(upper) for upper in range(lat.class_count)
                if upper != conjugacy_class.index and lat.is_subconjugate(conjugacy_class.index, upper)
            ),
        ]
        for conjugacy_class in lat.classes
    ]
    return header, rows


def category_rows(cat: OrbitCategory) -> tuple[list[str], Rows]:
    """Hom-set sizes, sources as rows and targets as columns."""
    header = ["source", *(str(obj) for obj in cat.objects)]
    rows = [
        [f"{source}: {cat.label(source)}", *(str(len(cat.hom(source, target))) for target in cat.objects)]
        for source in cat.objects
    ]
    return header, rows


def betti_rows(table: BettiTable) -> tuple[list[str], Rows]:
    return ["degree", "rank"], [[str(degree), str(table.rank(degree))] for degree in table.degrees]


def render_row(row: DecompositionRow) -> str:
    """H_n as "Q ⊕ 5·1_7"."""
    parts = ["Q"] if row.constant_multiplicity else []
    for h, multiplicity in enumerate(row.atom_multiplicities):
        if multiplicity:
            parts.append(f"1_{h}" if multiplicity == 1 else f"{multiplicity}·1_{h}")
    return " ⊕ ".join(parts) or "0"


def decomposition_rows(table: DecompositionTable) -> tuple[list[str], Rows]:
    header = ["n", "H_n"]
    return header, [[str(row.degree), render_row(row)] for row in table.rows]


def decomposition_csv_rows(table: DecompositionTable) -> tuple[list[str], Rows]:
    classes = range(len(table.fixed_dims))
    header = ["degree", "constant", *(f"atom_{h}" for h in classes)]
    rows = [
        [str(row.degree), str(row.constant_multiplicity), *(str(value) for value in row.atom_multiplicities)]
        for row in table.rows
    ]
    return header, rows


def resolution_rows(r: InjectiveResolution) -> tuple[list[str], Rows]:
    lat = r.source.category.lattice
    header = ["term", "dims", "summands"]
    rows = [
        [
            f"I^{degree}",
            _levels(lat, term.dims),
            " ".join(
                f"I({module.class_index}, dim {module.dim})"
                for module in (r.summands[degree] if r.summands else ())
            ),
        ]
        for degree, term in enumerate(r.terms)
    ]
    return header, rows


def ext_rows(ext: Sequence[int], hom_complex: Sequence[int]) -> tuple[list[str], Rows]:
    return ["q", "ext", "hom"], [
        [str(degree), str(ext[degree]), str(hom_complex[degree])] for degree in range(len(ext))
    ]


def e2_grid(page: E2Page, cells: dict[tuple[int, int], int]) -> tuple[list[str], Rows]:
    """Rows q descending, columns p ascending, zero cells blank."""
    columns = range(page.top_degree + 1)
    header = ["q", *(str(p) for p in columns)]
    rows = [
        [str(q), *(str(cells[(p, q)]) if cells.get((p, q)) else "" for p in columns)]
        for q in reversed(range(page.length))
    ]
    return header, rows


def e2_csv(page: E2Page) -> str:
    columns = range(page.top_degree + 1)
    header = ["table", "q", *(str(p) for p in columns)]
    rows = []
    for name, cells in (("hom", page.hom_complex), ("ext", page.ext)):
        _, grid = e2_grid(page, cells)
        rows.extend([name, *row] for row in grid)
    return to_csv(header, rows)


def e2_text(page: E2Page) -> str:
    hom_header, hom_grid = e2_grid(page, page.hom_complex)
    ext_header, ext_grid = e2_grid(page, page.ext)
    return (
        to_text(f"Hom(H_p, I^q) against {page.coefficient}, q = {page.q}", hom_header, hom_grid)
        + to_text(f"Ext^q(H_p, {page.coefficient}), q = {page.q}", ext_header, ext_grid)
    )


def degree_rows(dims: dict[int, int]) -> tuple[list[str], Rows]:
    return ["degree", "dim"], [[str(degree), str(dim)] for degree, dim in sorted(dims.items())]


def cohomology_rows(rows: Sequence[CohomologyRow]) -> tuple[list[str], Rows]:
    return ["n", "hom", "ext", "status"], [
        [str(row.degree), str(row.hom), str(row.ext), "upper bound" if row.upper_bound else "exact"]
        for row in rows
    ]
