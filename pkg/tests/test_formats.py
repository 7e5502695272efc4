from fractions import Fraction
import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from fhset.constructions import gen_cyclotomic_a, gen_nhz, gen_p2p
from fhset.core import FhsSet
from fhset.formats import (
    AnalysisReport,
    FormatError,
    analyze,
    format_sequences,
    parse_rational,
    parse_sequences,
    rational_str,
    read_sequence_file,
    write_sequence_file,
)


@st.composite
def fhs_sets(draw):
    N, M, L = draw(st.integers(1, 30)), draw(st.integers(1, 12)), draw(st.integers(1, 6))
    return FhsSet(draw(arrays(np.int64, (L, N), elements=st.integers(0, M - 1))), M)


def test_header_and_rows():
    text = format_sequences(gen_cyclotomic_a(13, 4))
    lines = text.splitlines()
    assert lines[0] == "13 4 4"
    assert len(lines) == 5 and all(len(l.split()) == 13 for l in lines[1:])


@settings(max_examples=100)
@given(fhs_sets())
def test_sequence_text_roundtrip(s):
    assert parse_sequences(format_sequences(s)) == s


def test_file_roundtrip(tmp_path):
    s = gen_p2p(5)
    path = tmp_path / "p2p.txt"
    write_sequence_file(s, path)
    assert read_sequence_file(path) == s


def test_trailing_blank_lines_allowed():
    assert parse_sequences("2 2 1\n0 1\n\n\n").shape == (2, 2, 1)


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("2 2\n0 1\n", 1),
    ("2 2 1\n0 1 1\n", 2),
    ("2 2 2\n0 1\n", 2),
    ("2 2 1\n0 x\n", 2),
    ("2 2 1\n0 2\n", 2),
    ("0 2 1\n\n", 1),
    ("2 2 1\n-1 0\n", 2),
])
def test_malformed_files(text, line):
    with pytest.raises(FormatError) as exc:
        parse_sequences(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_error_reports_column():
    with pytest.raises(FormatError) as exc:
        parse_sequences("3 2 1\n0 1 5\n")
    assert exc.value.column == 3


@given(st.fractions())
def test_rational_roundtrip(x):
    s = rational_str(x)
    assert parse_rational(s) == x
    num, den = s.split("/")
    assert int(den) > 0


def test_rational_is_reduced_and_sign_normalized():
    assert rational_str(Fraction(10, 4)) == "5/2"
    assert rational_str(Fraction(3, -6)) == "-1/2"
    assert rational_str(Fraction(4)) == "4/1"
    assert rational_str(None) is None


def test_report_roundtrip():
    r = analyze(gen_nhz(2, 5, 2))
    again = AnalysisReport.from_json(r.to_json())
    assert again == r


def test_report_schema():
    doc = json.loads(analyze(gen_cyclotomic_a(13, 4)).to_json())
    assert set(doc) == {"shape", "provenance", "distribution", "correlation", "bounds", "timing"}
    assert doc["correlation"]["A_a"] == "5/2"
    assert doc["correlation"]["A_c"] == "42/13"
    assert doc["bounds"]["peng_fan"]["verdict"] == "near_optimal"
    assert doc["bounds"]["ahc"]["verdict"] == "optimal"
    assert doc["shape"] == {"N": 13, "M": 4, "L": 4}


def test_report_for_single_sequence():
    doc = json.loads(analyze(FhsSet([[0, 1, 0]], 2)).to_json())
    assert doc["correlation"]["A_c"] is None
    assert doc["correlation"]["cross_max"] is None
    assert doc["bounds"]["ahc"]["verdict"] == "undefined"
