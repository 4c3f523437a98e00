from __future__ import annotations

import pytest

from regchi.table import OPEN_CELLS, TABLE, dash_cells, verify_table


def test_layout():
    assert len(TABLE) == 38
    assert sum(len(v) for v in TABLE.values()) == 49
    assert OPEN_CELLS == ((6, 6),)
    assert sorted(dash_cells()) == [(2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 6)]
    assert set(TABLE) | set(dash_cells()) | set(OPEN_CELLS) == {
        (r, c) for r in range(2, 11) for c in range(2, 7)
    }


def test_cells_from_examples():
    report = verify_table(cells=[(3, 3), (9, 3), (6, 6)])
    by_cell = {(c.r, c.chi): c for c in report.cells}
    c33 = by_cell[(3, 3)]
    assert c33.ok and c33.minimality == "enumerated" and c33.graphs[0].order == 6
    c93 = by_cell[(9, 3)]
    assert c93.constructions_ok and c93.graphs[0].order == 16
    assert c93.minimality == "unchecked"
    assert report.open_cells == [{"r": 6, "chi": 6, "status": "open in table", "resolved_by": "resolve-66"}]


def test_extra_witness_at_96():
    # the enumerated (9|6)-graphs on 12 vertices include one more than the table names
    report = verify_table(cells=[(9, 6)])
    cell = report.cells[0]
    assert cell.ok and cell.minimality == "enumerated"
    assert cell.detail.startswith("6 witness")


def test_constructions_only_full_table():
    report = verify_table(minimality=False)
    assert report.ok and len(report.cells) == 38 and report.graph_count == 49


@pytest.mark.slow
def test_full_table_with_minimality():
    report = verify_table()
    assert report.ok, [c.to_dict() for c in report.cells if not c.ok]
    statuses = {(c.r, c.chi): c.minimality for c in report.cells}
    assert statuses[(9, 3)] == "unchecked"
    assert all(s in ("enumerated", "lower-bound", "enumerated-below") for k, s in statuses.items() if k != (9, 3))
