import dataclasses

import pytest

from minrank_atlas import catalog
from minrank_atlas.bounds import BoundsRow
from minrank_atlas.catalog import (
    FIXTURE_COLUMNS,
    FixtureRow,
    compute_all,
    compute_row,
    corpus_integrity_mismatches,
    diff,
    load_atlas,
    load_fixtures,
    table_lines,
)
from minrank_atlas.graphs import Graph, is_isomorphic


def test_load_atlas_spot_entries(atlas_entries):
    assert len(atlas_entries) == 1252
    assert atlas_entries[0].atlas_number == 1
    assert atlas_entries[0].graph == Graph.empty(1)
    g52 = atlas_entries[51].graph
    assert (g52.order, g52.size()) == (5, 10)
    g1252 = atlas_entries[1251].graph
    assert (g1252.order, g1252.size()) == (7, 21)
    assert is_isomorphic(atlas_entries[13].graph, Graph.path(4))


def test_load_atlas_error_names_line(tmp_path):
    p = tmp_path / "bad.g6"
    p.write_text("@\nA_\nzz!!\n")
    with pytest.raises(ValueError, match="bad.g6:3"):
        load_atlas(p)


def test_load_fixtures_spot_rows(fixtures_by_atlas, fixture_rows):
    assert len(fixture_rows) == 1162
    r52 = fixtures_by_atlas[52]
    assert (r52.mr, r52.np_ub, r52.nop_ub, r52.path_ub) == (1, 1, 2, 3)
    assert r52.con and not r52.mr_by_hand
    r558 = fixtures_by_atlas[558]
    assert (r558.lb, r558.ub, r558.mr, r558.mr_by_hand) == (3, 4, 3, True)
    r2 = fixtures_by_atlas[2]
    assert not r2.con
    assert r2.zfs_lb is None and r2.diam_lb is None and r2.cc_ub is None
    assert r2.np_ub is None and r2.nop_ub is None and r2.path_ub is None
    assert r2.is_flag is None and r2.cv is False and r2.tree is False


def test_fixture_gaps_match_untranscribed_ranges(fixtures_by_atlas):
    missing = set(range(1, 1253)) - set(fixtures_by_atlas)
    assert missing == set(range(181, 241)) | set(range(331, 361))


def _write_fixture(tmp_path, rows):
    header = "\t".join(FIXTURE_COLUMNS)
    body = "\n".join("\t".join(r) for r in rows)
    p = tmp_path / "t.tsv"
    p.write_text(header + "\n" + body + "\n")
    return p


GOOD_ROW = ["3", "2", "1", "1", "F", "1", "1", "T", "1", "1", "1", "", "", "", "F", "F", "T"]


def test_load_fixtures_errors(tmp_path):
    p = tmp_path / "t.tsv"
    p.write_text("atlas\twrong\n")
    with pytest.raises(ValueError, match="header"):
        load_fixtures(p)

    bad_lb = GOOD_ROW.copy()
    bad_lb[5], bad_lb[6] = "2", "1"
    with pytest.raises(ValueError, match="exceeds"):
        load_fixtures(_write_fixture(tmp_path, [bad_lb]))

    bad_mr = GOOD_ROW.copy()
    bad_mr[3] = "9"
    with pytest.raises(ValueError, match="outside"):
        load_fixtures(_write_fixture(tmp_path, [bad_mr]))

    with pytest.raises(ValueError, match="duplicate"):
        load_fixtures(_write_fixture(tmp_path, [GOOD_ROW, GOOD_ROW]))

    short = GOOD_ROW[:-1]
    with pytest.raises(ValueError, match="fields"):
        load_fixtures(_write_fixture(tmp_path, [short]))

    bad_bool = GOOD_ROW.copy()
    bad_bool[7] = "Q"
    with pytest.raises(ValueError, match="T or F"):
        load_fixtures(_write_fixture(tmp_path, [bad_bool]))


def test_corpus_integrity(atlas_entries, fixture_rows):
    assert corpus_integrity_mismatches(atlas_entries, fixture_rows) == []


def test_corpus_integrity_catches_faults(atlas_entries, fixture_rows):
    broken = dataclasses.replace(fixture_rows[0], size=99)
    out = corpus_integrity_mismatches(atlas_entries, [broken])
    assert len(out) == 1 and out[0].column == "size"


def test_compute_row_spots(atlas_entries, forbidden):
    row52 = compute_row(atlas_entries[51], forbidden)
    assert (row52.lb, row52.ub) == (1, 1)
    row1 = compute_row(atlas_entries[0], forbidden)
    assert (row1.lb, row1.ub, row1.mr_exact, row1.zfs_lb, row1.cc_ub) == (0, 0, 0, 0, 0)
    row175 = compute_row(atlas_entries[174], forbidden)
    assert row175.np_ub == 2


def _echo_rows(fixtures):
    """BoundsRow objects mirroring the fixture values exactly."""
    out = {}
    for f in fixtures:
        out[f.atlas_number] = BoundsRow(
            order=f.order, size=f.size, con=f.con,
            zfs_lb=f.zfs_lb, diam_lb=f.diam_lb, cc_ub=f.cc_ub,
            np_ub=f.np_ub, nop_ub=f.nop_ub, path_ub=f.path_ub,
            is_flag=f.is_flag,
            cv=bool(f.cv), tree=bool(f.tree),
            lb=f.lb, ub=f.ub,
            mr_exact=f.mr if f.lb == f.ub else None,
        )
    return out


def test_diff_reflexive(fixture_rows):
    report = diff(fixture_rows, _echo_rows(fixture_rows))
    assert report.ok and report.rows_checked == len(fixture_rows)


def test_diff_flags_single_perturbation(fixture_rows):
    subset = [f for f in fixture_rows if f.atlas_number <= 52]
    rows = _echo_rows(subset)
    target = next(f for f in subset if f.con and f.zfs_lb is not None and f.zfs_lb > 0)
    rows[target.atlas_number] = dataclasses.replace(
        rows[target.atlas_number], zfs_lb=target.zfs_lb - 1
    )
    report = diff(subset, rows)
    assert len(report.mismatches) == 1
    m = report.mismatches[0]
    assert (m.atlas_number, m.column) == (target.atlas_number, "zfs_lb")
    assert report.by_column() == {"zfs_lb": 1}


def test_diff_requires_matching_domain(fixture_rows):
    with pytest.raises(ValueError, match="no computed row"):
        diff(fixture_rows[:5], {})


def test_diff_checks_ub_one_sided(fixtures_by_atlas):
    # computed ub above the reference is allowed; below is flagged
    f = fixtures_by_atlas[7]  # K3: connected, not a tree, lb = ub = 1
    echo = _echo_rows([f])[7]
    looser = dataclasses.replace(echo, ub=f.ub + 1, mr_exact=None)
    assert diff([f], {7: looser}).ok
    tighter = dataclasses.replace(echo, ub=f.ub - 1, lb=f.lb - 1, mr_exact=None)
    report = diff([f], {7: tighter})
    assert {m.column for m in report.mismatches} == {"lb", "ub", "mr_bracket"}


def test_compute_all_jobs_agree(atlas_entries, forbidden):
    slice_ = atlas_entries[:60]
    assert compute_all(slice_, forbidden, jobs=1) == compute_all(slice_, forbidden, jobs=2)


def test_table_lines_shape(atlas_entries, forbidden):
    rows = compute_all(atlas_entries[:18], forbidden)
    lines = list(table_lines(rows))
    assert lines[0].startswith("atlas\torder\tsize\tlb\tub\tmr_exact")
    assert len(lines) == 19
    assert lines[1].split("\t")[0] == "1"
    assert list(table_lines(rows)) == lines
