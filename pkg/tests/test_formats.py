import pytest

from tourlab import (
    FormatError,
    cyclic_triangle,
    emit_compact,
    emit_tmt,
    format_matching,
    parse_compact,
    parse_matching,
    parse_tmt,
    random_tournament,
    tournament_code,
    tournament_from_code,
    transitive_tournament,
)


def test_tmt_golden_triangle():
    assert emit_tmt(cyclic_triangle()) == "3\n010\n001\n100\n"


def test_tmt_roundtrip():
    for n in (0, 1, 2, 5, 9):
        t = random_tournament(n, seed=n)
        assert parse_tmt(emit_tmt(t)) == t


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("x\n010\n001\n100\n", 1, None),  # header not an integer
        ("-1\n", 1, None),
        ("3\n010\n001\n", 4, None),  # missing row
        ("3\n01\n001\n100\n", 2, 3),  # short row, col points past its end
        ("3\n0100\n001\n100\n", 2, 4),  # long row
        ("3\n012\n001\n100\n", 2, 3),  # bad character
        ("3\n110\n001\n100\n", 2, 1),  # diagonal set
        ("3\n011\n101\n000\n", 3, 1),  # both directions
        ("3\n010\n000\n100\n", 4, 2),  # missing orientation, caught at row 2
        ("3\n010\n001\n100\nextra\n", 5, None),  # trailing content
    ],
)
def test_tmt_diagnostics_carry_position(text, line, col):
    with pytest.raises(FormatError) as exc:
        parse_tmt(text)
    assert exc.value.line == line
    if col is not None:
        assert exc.value.col == col


def test_tmt_capacity_is_not_a_format_error():
    from tourlab import CapacityError

    with pytest.raises(CapacityError):
        parse_tmt("65\n")


def test_compact_golden():
    assert emit_compact(cyclic_triangle()) == "3:2"
    assert emit_compact(transitive_tournament(1)) == "1:0"
    # 6 vertices, 15 triangle bits, 4 hex digits
    assert emit_compact(transitive_tournament(6)) == "6:0000"


def test_compact_roundtrip():
    for n in (0, 1, 3, 7, 12):
        t = random_tournament(n, seed=n + 20)
        assert parse_compact(emit_compact(t)) == t


@pytest.mark.parametrize(
    "text",
    [
        "3",  # no colon
        "3:",  # empty digits
        "3:02",  # wrong digit count
        "3:g",  # not hex
        "-1:0",
        "2:4",  # bit beyond the single triangle bit
        "3.5:0",
    ],
)
def test_compact_rejects(text):
    with pytest.raises(FormatError):
        parse_compact(text)


def test_code_roundtrip_and_orientation():
    t = random_tournament(8, seed=5)
    assert tournament_from_code(8, tournament_code(t)) == t
    # lowest bit is the (1, 0) edge
    assert tournament_code(transitive_tournament(2)) == 0
    assert tournament_code(parse_tmt("2\n00\n10\n")) == 1


def test_matching_text_roundtrip():
    pairs = [(1, 6), (2, 9), (7, 8)]
    assert parse_matching(format_matching(pairs)) == pairs
    assert parse_matching(" 1-6   2-9\n7-8 ") == pairs
    with pytest.raises(ValueError):
        parse_matching("1-")
    with pytest.raises(ValueError):
        parse_matching("12 34")
