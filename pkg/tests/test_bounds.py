import csv
import io

import pytest

from conftest import TABLE_Q
from mixedcage.bounds import (
    CSV_HEADER,
    BoundRow,
    bound_for,
    emit_table,
    reference_table,
    table_rows,
)
from mixedcage.construction import InvalidQError, derive_params
from mixedcage.field import classify_prime_power

TABLE_ORDERS = (192, 252, 320, 480, 672, 1020, 1152, 1440)


@pytest.mark.parametrize(
    "q,row", [(16, (4, 16, 6, 1020)), (17, (4, 17, 6, 1152)), (13, (3, 13, 6, 672)), (7, (1, 7, 6, 192))]
)
def test_bound_for(q, row):
    assert bound_for(q) == BoundRow(q, *row)


def test_bound_for_rejects():
    with pytest.raises(InvalidQError):
        bound_for(12)
    with pytest.raises(InvalidQError):
        bound_for(5)
    assert bound_for(5, force=True).upper_bound == 96


def test_closed_form_agrees_with_params():
    for q in range(7, 300):
        if classify_prime_power(q):
            b = bound_for(q)
            assert b.z == derive_params(q).z
            assert b.upper_bound == 4 * q * q - 4


def test_emit_table():
    doc = emit_table(TABLE_Q)
    rows = list(csv.reader(io.StringIO(doc)))
    assert tuple(rows[0]) == CSV_HEADER
    assert [int(r[4]) for r in rows[1:]] == list(TABLE_ORDERS)


def test_empty_table_is_header_only():
    assert emit_table([]) == ",".join(CSV_HEADER) + "\n"


def test_bad_q_gives_error_row():
    rows = table_rows([8, 12])
    assert rows[0][4] == "252"
    assert rows[1][0] == "12" and rows[1][5] == "error"


def test_verify_flag():
    assert table_rows([8], verify=True) == [("8", "2", "8", "6", "252", "pass", "H_{q,p}")]


def test_text_format_aligned():
    lines = emit_table([7, 19], fmt="text").splitlines()
    assert len(lines) == 3
    assert len({len(ln) for ln in lines}) == 1
    with pytest.raises(ValueError):
        emit_table([7], fmt="xml")


def test_reference_table_matches_construction():
    ref = reference_table()
    assert len(ref) == 19
    by_params = {(r["arcs"], r["edges"]): r for r in ref}
    for q in TABLE_Q:
        b = bound_for(q)
        assert by_params[(b.z, b.r)]["upper_bound"] == b.upper_bound
    assert by_params[(3, 13)]["note"].startswith("prev. 676")
    assert all(r["girth"] == 6 for r in ref)
