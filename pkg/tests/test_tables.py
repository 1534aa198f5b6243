import pytest

from ringcodes import tables as T


def _row(table, label, deep=False):
    for r in T.table_rows(table, deep=deep):
        if r.label == label:
            return r
    raise KeyError(label)


def _cells(row):
    return {c.name: c for c in T.verify_row(row)}


def test_qr7_prime_row():
    cells = _cells(_row(1, "QR'(7)"))
    assert (cells["n"].actual, cells["k"].actual, cells["d"].actual) == (21, 9, 8)
    assert all(c.ok for c in cells.values())


def test_c11_second_family_row():
    cells = _cells(_row(3, "C11(u+u^2,1+u,u)"))
    assert (cells["n"].actual, cells["k"].actual, cells["d"].actual) == (66, 33, 12)
    assert cells["self-dual"].actual


def test_table8_c32():
    cells = _cells(_row(8, "C32"))
    assert cells["w68_2"].actual == {"gamma": 2, "beta": 84}
    assert cells["w68_2"].ok


def test_deep_rows_are_gated():
    default = {(r.table, r.label) for r in T.table_rows("all")}
    deep = {(r.table, r.label) for r in T.table_rows("all", deep=True)}
    assert (1, "QR-bar(31)") in deep - default
    assert (2, "QR(41)") in deep - default
    assert (3, "C19(0,u^2,1+u^2)") in deep - default
    assert (4, "B19(1,u^2,1+u^2,0,1,1)") in deep - default


def test_unknown_table():
    with pytest.raises(ValueError):
        T.table_rows(9)


def test_report_format_marks_failures():
    rows = [_row(1, "QR-bar(7)")]
    report = T.Report([(rows[0], T.verify_row(rows[0]), 0.0)])
    assert not report.ok
    [(row, cell)] = report.failures()
    assert cell.name == "Lee distance" and cell.expected == 6 and cell.actual == 8
    text = T.format_report(report)
    assert "[FAIL] Table 1 QR-bar(7)" in text and "FAIL Lee distance: 8 expected 6" in text


def test_table6_row4_tabulated_vector_is_invalid():
    from ringcodes import extend as E

    x, c, _, _ = T.TABLE6[3]
    assert len(x.split(",")) == 12
    with pytest.raises(E.ExtensionError, match="length"):
        T.idext_code(2, x, c)
    assert len(T.TABLE6_ROW4_CORRECTED.split(",")) == 11
