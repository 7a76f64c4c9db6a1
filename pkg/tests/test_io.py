"""Text and JSON clutter formats."""

from __future__ import annotations

import json

import pytest

from clutterlab import (
    ClutterParseError,
    clutter_from_json_dict,
    clutter_to_json,
    clutter_to_json_dict,
    clutter_to_text,
    make_clutter,
    parse_clutter,
    parse_clutter_file,
)

EX = make_clutter(5, 3, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 4, 5)])

TEXT = """\
# running example
5 3
1 2 3
1 2 4

1 3 4
2 3 4
1 4 5
"""


def test_parse_text():
    assert parse_clutter(TEXT) == EX


def test_parse_text_duplicates_collapse():
    assert parse_clutter("4 2\n1 2\n1 2\n2 1\n").num_circuits == 1


def test_text_round_trip():
    assert parse_clutter(clutter_to_text(EX)) == EX
    empty = make_clutter(4, 3, [])
    assert parse_clutter(clutter_to_text(empty)) == empty


def test_json_round_trip():
    assert parse_clutter(clutter_to_json(EX)) == EX
    blob = clutter_to_json_dict(EX)
    assert blob == {"n": 5, "d": 3,
                    "circuits": [[1, 2, 3], [1, 2, 4], [1, 3, 4],
                                 [1, 4, 5], [2, 3, 4]]}
    assert clutter_from_json_dict(json.loads(json.dumps(blob))) == EX


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ClutterParseError) as exc:
        parse_clutter("5 3\n1 2\n")
    assert exc.value.line == 2
    with pytest.raises(ClutterParseError) as exc:
        parse_clutter("# only a comment\n5\n")
    assert exc.value.line == 2
    with pytest.raises(ClutterParseError) as exc:
        parse_clutter("5 3\n1 2 x\n")
    assert exc.value.line == 2


def test_parse_rejects_semantic_errors():
    with pytest.raises(ClutterParseError):
        parse_clutter("5 3\n1 2 9\n")      # vertex out of range
    with pytest.raises(ClutterParseError):
        parse_clutter("")                  # no header
    with pytest.raises(ClutterParseError):
        parse_clutter('{"n": 5, "d": 3}')  # missing circuits key
    with pytest.raises(ClutterParseError):
        parse_clutter('{"n": 5, "d": 3, "circuits": "nope"}')
    with pytest.raises(ClutterParseError):
        parse_clutter('{bad json')


def test_parse_file(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text(TEXT)
    assert parse_clutter_file(path) == EX

    jpath = tmp_path / "c.json"
    jpath.write_text(clutter_to_json(EX))
    assert parse_clutter_file(jpath) == EX


def test_parse_file_errors_name_the_file(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("5 3\n1 2\n")
    with pytest.raises(ClutterParseError) as exc:
        parse_clutter_file(path)
    assert "bad.txt" in str(exc.value)
    assert exc.value.line == 2
    with pytest.raises(ClutterParseError):
        parse_clutter_file(tmp_path / "missing.txt")
