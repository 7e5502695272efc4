from fractions import Fraction

from fhset.table1 import MATCH, MISMATCH, SKIPPED, ROWS, render, smallest_instance, table1, to_json_rows


def rows_by_key(results):
    return {r.key: r for r in results}


def cells(row):
    return {c.column: c for c in row.cells}


def test_smallest_instances():
    chosen = {row.key: smallest_instance(row, 256) for row in ROWS}
    assert chosen == {
        "kumar": {"p": 3},
        "chung1": {"k": 2, "N": 6, "d": 2},
        "chung2": {"p": 3},
        "cyclotomic_a": {"p": 3, "M": 2},
        "cyclotomic_b": {"q": 3, "M": 2},
        "theorem17": {"N": 5, "k": 2},
    }


def test_rows_skipped_below_limit():
    results = rows_by_key(table1(max_q=4))
    assert results["kumar"].status == MATCH
    assert results["chung1"].status == SKIPPED
    assert results["theorem17"].status == SKIPPED


def test_cyclotomic_a_average_column_at_13_4():
    row = rows_by_key(table1(instances={"cyclotomic_a": {"p": 13, "M": 4}}))["cyclotomic_a"]
    a_a = cells(row)["A_a"]
    assert a_a.expected == Fraction(5, 2) == a_a.actual
    assert a_a.status == MATCH


def test_cyclotomic_b_cross_column_matches():
    row = rows_by_key(table1())["cyclotomic_b"]
    assert cells(row)["A_c"].status == MATCH


def test_nhz_auto_average_matches():
    row = rows_by_key(table1())["chung1"]
    assert cells(row)["A_a"].status == MATCH
    assert cells(row)["A_a"].actual == 0


def test_known_mismatches_are_reported():
    # cells where the tabulated closed form disagrees with brute force
    results = table1()
    bad = {(r.key, c.column) for r in results for c in r.cells if c.status == MISMATCH}
    assert bad == {("chung1", "A_c"), ("chung2", "A_c"), ("cyclotomic_a", "MHC"),
                   ("cyclotomic_b", "MHC")}


def test_render_and_json():
    results = table1()
    text = render(results)
    assert text.splitlines()[-1] == "4 MISMATCH cell(s)"
    rows = to_json_rows(results)
    assert [r["row"] for r in rows] == [row.key for row in ROWS]
    assert all(c["status"] in (MATCH, MISMATCH) for r in rows for c in r["cells"])
