from fractions import Fraction

import pytest

from shadowforge import liedata
from shadowforge.liedata import LieLabel, dim_simple, parse_label
from shadowforge.svoa import long_shadow_dim1


@pytest.mark.parametrize(
    "text, dim",
    [("E8", 248), ("D12", 276), ("A15", 255), ("C10", 210), ("F4", 52), ("B4", 36), ("G2", 14), ("E7,2", 133), ("A1^22", 66), ("U1^23", 23), ("D4,2^2", 56)],
)
def test_dim_simple(text, dim):
    assert dim_simple(parse_label(text)) == dim


def test_label_round_trip():
    for text in ("E7,2", "D4,2^2", "U1^23", "A1", "C2^3"):
        assert str(parse_label(text)) == text


@pytest.mark.parametrize("bad", ["E9", "X3", "D2", "U2", "A", "E8,0", ""])
def test_bad_labels(bad):
    with pytest.raises(ValueError):
        parse_label(bad)


def test_simply_laced_flag():
    assert LieLabel("D", 12).simply_laced_level_one
    assert not LieLabel("E", 7, level=2).simply_laced_level_one
    assert not LieLabel("C", 10).simply_laced_level_one


def test_table_has_twenty_rows():
    assert len(liedata.TABLE) == 20
    assert [e.dim_v1 for e in liedata.TABLE] == [248, 276, 266, 255, 248, 240, 221, 210, 198, 185, 171, 156, 140, 123, 105, 86, 66, 45, 23, 0]


def test_verify_table_all_pass():
    checks = liedata.verify_table()
    assert all(ch.passed for ch in checks)
    data = checks[0].to_json()
    assert data["c"] == [8, 1] and data["expected"] == 248 and data["pass"] and data["lattice_candidate"]
    last = checks[-1]
    assert last.entry.label_text == "0" and last.lie_sum == 0


def test_verify_table_detects_bad_row():
    bad = liedata.TableEntry(Fraction(12), 276, (parse_label("D11"),))
    (check,) = liedata.verify_table([bad])
    assert not check.passed and check.lie_sum == 231


def test_lattice_candidates():
    flags = {e.c: e.lattice_candidate for e in liedata.TABLE}
    assert flags[Fraction(12)] and flags[Fraction(23)]
    assert flags[Fraction(18)] and not flags[Fraction(35, 2)] and not flags[Fraction(31, 2)]


def test_dim_v1_decreasing_past_12():
    dims = [long_shadow_dim1(e.c) for e in liedata.TABLE if e.c >= 12]
    assert dims == sorted(dims, reverse=True)
