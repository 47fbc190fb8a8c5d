"""File format round trips and parse failure reporting."""

from fractions import Fraction

import pytest

from campedelli.errors import DuplicateLine, ParseError
from campedelli.fileio import (MoveDirective, parse_arrangement,
                               parse_journal, print_arrangement,
                               print_journal, resolve_face_names)
from conftest import data_text

FIXTURES = ("fig5.camp", "heptagon.camp", "premax.camp", "mixed_ii.camp")

PURE_HEAD = "campedelli/1 purely_real\n"

SEVEN_LINES = """\
line 100 1 0 0
line 010 0 1 0
line 001 0 0 1
line 110 1 1 -1
line 011 1 -2 3
line 101 2 1 5
line 111 3 -1 -7
"""


def pure(extra=""):
    return PURE_HEAD + SEVEN_LINES + extra


def test_fixtures_are_canonical():
    for name in FIXTURES:
        text = data_text(name)
        af = parse_arrangement(text)
        assert print_arrangement(af) == text, name


def test_journal_fixture_round_trip():
    text = data_text("fig5_chain.journal")
    moves = parse_journal(text)
    assert len(moves) == 7
    assert print_journal(moves) == text
    assert parse_journal(print_journal(moves)) == moves


def test_comments_and_blank_lines_ignored():
    text = "# leading comment\n\n" + pure("\n# done\n")
    af = parse_arrangement(text)
    assert af.kind == "purely_real"
    assert len(af.labeled.lines) == 7
    assert print_arrangement(af) == pure()


def test_full_featured_round_trip():
    text = pure(
        "anchor 1 1 7 ++-\n"
        "facemap home 1 1 7\n"
        "facemap away 10 -1 -1\n"
        "walkanchor home home away\n"
        "move home 3 -7/2\n")
    af = parse_arrangement(text)
    assert af.anchor.signs.code == 0b001
    assert set(af.face_names) == {"home", "away"}
    assert af.walk_anchors == {"home": ("home", "away")}
    assert af.journal == (MoveDirective("home", 3, Fraction(-7, 2)),)
    assert print_arrangement(af) == text


def expect_parse_error(text, fragment):
    with pytest.raises(ParseError) as exc:
        parse_arrangement(text)
    assert fragment in str(exc.value), str(exc.value)
    return str(exc.value)


def test_bad_header():
    expect_parse_error("", "empty file")
    msg = expect_parse_error("campedelli/2 purely_real\n", "expected header")
    assert msg.startswith("line 1, column 1")
    msg = expect_parse_error("campedelli/1 sideways\n", "unknown file kind")
    assert "column 14" in msg


def test_missing_coefficient():
    bad = PURE_HEAD + "line 100 1 0\n"
    msg = expect_parse_error(bad, "missing coefficient")
    assert msg.startswith("line 2")


def test_bad_rational_reports_column():
    bad = PURE_HEAD + "line 100 1 x 0\n"
    msg = expect_parse_error(bad, "bad rational 'x'")
    assert "line 2, column 12" in msg


def test_bad_label():
    bad = PURE_HEAD + "line 200 1 0 0\n"
    expect_parse_error(bad, "bad label '200'")
    bad = PURE_HEAD + "line 000 1 0 0\n"
    expect_parse_error(bad, "bad label '000'")


def test_wrong_line_count():
    expect_parse_error(PURE_HEAD + SEVEN_LINES.replace(
        "line 111 3 -1 -7\n", ""), "expected 7 'line' directives, got 6")


def test_duplicate_geometric_line():
    bad = PURE_HEAD + SEVEN_LINES.replace(
        "line 111 3 -1 -7", "line 111 2 0 0")
    with pytest.raises(DuplicateLine):
        parse_arrangement(bad)


def test_anchor_on_a_line_rejected():
    msg = expect_parse_error(pure("anchor 0 1 1 +++\n"),
                             "anchor point lies on line 0")
    assert msg.startswith("line 9")
    expect_parse_error(pure("anchor 1 1 7 +++\nanchor 1 1 7 +++\n"),
                       "at most one anchor")
    expect_parse_error(pure("anchor 1 1 7 +*+\n"), "bad sign triple")
    expect_parse_error(pure("anchor 0 0 0 +++\n"), "zero triple")


def test_facemap_validation():
    expect_parse_error(pure("facemap 12 1 1 7\n"),
                       "face names must not look like integers")
    expect_parse_error(pure("facemap -3 1 1 7\n"),
                       "face names must not look like integers")
    expect_parse_error(pure("facemap home 1 1 7\nfacemap home -10 1 1\n"),
                       "duplicate face name 'home'")
    expect_parse_error(pure("facemap home 0 1 1\n"),
                       "sample point of 'home' lies on line 0")


def test_walkanchor_validation():
    expect_parse_error(pure("facemap home 1 1 7\nwalkanchor home home far\n"),
                       "unknown face 'far'")
    expect_parse_error(
        pure("facemap home 1 1 7\n"
             "walkanchor home home home\nwalkanchor home home home\n"),
        "duplicate walkanchor")


def test_pure_directives_rejected_in_mixed():
    mixed_text = data_text("mixed_ii.camp")
    expect_parse_error(mixed_text + "line 100 1 0 0\n",
                       "'line' is only valid in purely_real files")
    expect_parse_error(mixed_text + "anchor 1 1 7 +++\n",
                       "'anchor' is only valid in purely_real files")
    expect_parse_error(mixed_text + "move F0 1 2\n",
                       "'move' is only valid in purely_real files")


def test_mixed_directives_rejected_in_pure():
    expect_parse_error(pure("rline 110 1 0 0\n"),
                       "'rline' is only valid in mixed_real files")
    expect_parse_error(pure("cline 100 1 0 0 0 0 1\n"),
                       "'cline' is only valid in mixed_real files")


def test_cline_label_restrictions():
    mixed_text = data_text("mixed_ii.camp")
    expect_parse_error(mixed_text + "cline 010 1 0 0 0 0 1\n",
                       "store one member per pair")
    expect_parse_error(mixed_text + "cline 100 1 0 0 0 0 1\n",
                       "duplicate cline for label 100")
    expect_parse_error(mixed_text + "rline 100 1 2 3\n",
                       "real carriers are labeled 110, 111, 001")
    expect_parse_error(mixed_text + "rline 110 1 2 3\n",
                       "duplicate rline for label 110")


def test_missing_mixed_lines():
    head = "campedelli/1 mixed_real\n"
    body = "rline 110 1 0 0\nrline 111 0 1 0\nrline 001 0 0 1\n"
    expect_parse_error(head + body + "cline 100 1 0 -1/2 1/2 -1/2 -1/2\n",
                       "missing cline for 101")
    expect_parse_error(head + "rline 110 1 0 0\n", "missing rline for 111, 001")


def test_unknown_directive_and_trailing_tokens():
    expect_parse_error(pure("frobnicate 1 2 3\n"),
                       "unknown directive 'frobnicate'")
    msg = expect_parse_error(PURE_HEAD + "line 100 1 0 0 9\n" + SEVEN_LINES,
                             "unexpected trailing token '9'")
    assert "column 16" in msg


def test_journal_parsing_errors():
    with pytest.raises(ParseError, match="expected kind 'journal'"):
        parse_journal(PURE_HEAD)
    with pytest.raises(ParseError, match="only 'move' directives"):
        parse_journal("campedelli/1 journal\nline 100 1 0 0\n")
    with pytest.raises(ParseError, match="bad integer"):
        parse_journal("campedelli/1 journal\nmove F3 x 1/2\n")


def test_resolve_face_names(fig5_file):
    c = fig5_file.labeled.complex
    ids = resolve_face_names(fig5_file, c)
    assert sorted(ids) == sorted(f"P{i}" for i in range(1, 23))
    assert len(set(ids.values())) == 22


def test_resolve_face_names_collision(fig5_file):
    af = parse_arrangement(print_arrangement(fig5_file))
    p1 = af.face_names["P1"]
    af.face_names["Q"] = p1
    with pytest.raises(ParseError, match="sample the same face"):
        resolve_face_names(af, af.labeled.complex)
