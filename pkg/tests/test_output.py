"""Artifact serialization: round-trip floats, CSV/JSON layout, atomic writes."""

import json
import os

import numpy as np
import pytest

from afmsqueeze.output import (
    csv_text,
    format_value,
    json_text,
    meta_block,
    write_text_atomic,
)


@pytest.mark.parametrize(
    "value",
    [0.1, 1.0 / 3.0, 1e-300, 2734453.4935269617, -7.479758e-16, 0.0],
)
def test_format_value_floats_round_trip(value):
    assert float(format_value(value)) == value


def test_format_value_numpy_scalars_round_trip():
    x = np.float64(1.0) / np.float64(3.0)
    text = format_value(float(x))
    assert float(text) == float(x)
    # Direct numpy input must not leak the numpy repr.
    assert "np" not in format_value(np.float64(0.25))
    assert float(format_value(np.float64(0.25))) == 0.25


def test_format_value_specials():
    assert format_value(None) == ""
    assert format_value(True) == "1"
    assert format_value(False) == "0"
    assert format_value(42) == "42"
    assert format_value("text") == "text"


def test_meta_block_contents():
    block = meta_block({"z0_nm": 1.0})
    assert block["inputs"] == {"z0_nm": 1.0}
    assert isinstance(block["version"], str)
    assert block["version"]


def test_csv_layout_with_meta():
    text = csv_text(["a", "b"], [(1.5, None), (2, True)], meta={"inputs": {}, "version": "x"})
    lines = text.split("\n")
    assert lines[0].startswith("# meta: ")
    meta = json.loads(lines[0][len("# meta: "):])
    assert meta["version"] == "x"
    assert lines[1] == "a,b"
    assert lines[2] == "1.5,"
    assert lines[3] == "2,1"
    assert text.endswith("\n")
    assert "\r" not in text


def test_csv_layout_without_meta():
    text = csv_text(["x"], [(1.0,)])
    assert text == "x\n1.0\n"


def test_json_text_is_sorted_and_deterministic():
    a = json_text({"b": 1, "a": [1.5, None]})
    b = json_text({"a": [1.5, None], "b": 1})
    assert a == b
    assert a.index('"a"') < a.index('"b"')
    assert a.endswith("\n")
    assert json.loads(a) == {"a": [1.5, None], "b": 1}


def test_write_text_atomic_creates_and_overwrites(tmp_path):
    target = tmp_path / "artifact.csv"
    write_text_atomic(target, "first\n")
    assert target.read_text() == "first\n"
    write_text_atomic(target, "second\n")
    assert target.read_text() == "second\n"
    # No temp files linger next to the artifact.
    assert [p.name for p in tmp_path.iterdir()] == ["artifact.csv"]


def test_write_text_atomic_sets_readable_mode(tmp_path):
    target = tmp_path / "artifact.txt"
    write_text_atomic(target, "content\n")
    assert (os.stat(target).st_mode & 0o777) == 0o644


def test_write_text_atomic_missing_directory(tmp_path):
    with pytest.raises(OSError):
        write_text_atomic(tmp_path / "absent" / "artifact.txt", "content\n")
