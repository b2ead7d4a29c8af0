import json
from fractions import Fraction

import numpy as np
import pytest

from snstab.config import RunConfig
from snstab.report import Check, close, compare, envelope, render, to_jsonable
from snstab.rng import stream


def test_stream_deterministic_and_distinct():
    a = stream(1, "suite", 0).random(5)
    assert np.array_equal(a, stream(1, "suite", 0).random(5))
    assert not np.array_equal(a, stream(1, "suite", 1).random(5))
    assert not np.array_equal(a, stream(1, "other", 0).random(5))
    assert not np.array_equal(a, stream(2, "suite", 0).random(5))


def test_compare_and_close():
    c = compare("x", Fraction(1, 2), Fraction(2, 3), "<")
    assert c.passed and c.relation == "<"
    assert not compare("y", 1, 2, ">=").passed
    assert compare("z", 1, 2, "<=", shown_rhs=2.0).rhs == 2.0
    assert close("w", 1.0, 1.0 + 1e-12, 1e-9).passed


def test_jsonable_rationals_as_strings():
    assert to_jsonable(Fraction(3, 4)) == "3/4"
    assert to_jsonable(Fraction(4, 2)) == "2"
    assert to_jsonable(np.int64(7)) == "7"
    assert to_jsonable(True) is True and to_jsonable(None) is None
    assert to_jsonable(0.1234567890123456) == 0.123456789012
    assert to_jsonable(Check("a", 1, 2, "<", True))["pass"] is True


def test_render_formats():
    doc = envelope("demo", {"seed": 0}, {"x": Fraction(1, 3), "rows": [{"a": 1, "b": 2}, {"a": 3, "b": 4}]},
                   [compare("x small", Fraction(1, 3), 1, "<")])
    data = json.loads(render(doc, "json"))
    assert set(data) == {"command", "config", "results", "checks"}
    assert data["checks"][0] == {"name": "x small", "lhs": "1/3", "rhs": "1", "relation": "<", "pass": True}
    table = render(doc, "table")
    assert "[PASS] x small" in table and "-- rows --" in table
    csv = render(doc, "csv")
    assert csv.startswith("key,value\n") and "rows[1].b,4" in csv
    with pytest.raises(ValueError):
        render(doc, "xml")


def test_config_defaults_and_validation(monkeypatch):
    monkeypatch.delenv("SNSTAB_CAP", raising=False)
    cfg = RunConfig()
    assert cfg.exhaustive_cap == 8 and cfg.numeric_cap == 5 and cfg.output_format == "table"
    monkeypatch.setenv("SNSTAB_CAP", "9")
    assert RunConfig().exhaustive_cap == 9
    assert "jobs" not in RunConfig(jobs=4).public()
    for bad in ({"output_format": "xml"}, {"exhaustive_cap": 0}, {"c0": 0}, {"eps0": -1}):
        with pytest.raises(ValueError):
            RunConfig(**bad)
    assert RunConfig(c0="3/2").c0 == Fraction(3, 2)
