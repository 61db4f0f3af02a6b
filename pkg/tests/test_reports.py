from __future__ import annotations

import json

import numpy as np

from wreathhopf.datasets import bundled_names, load_action
from wreathhopf.reports import Report, Timer


def test_round_trip():
    rep = Report("demo", {"m": 2}, {"h": True}, {"c": [1, 2]}, {"x": 3}, exit_code=1, timing=0.5)
    rep.verdict("hopfian", False, ["a", "b"])
    back = Report.from_json(rep.to_json())
    assert back == rep
    assert rep.to_json() == back.to_json()


def test_numpy_values_serialise():
    rep = Report("demo", results={"n": np.int64(4), "flag": np.bool_(True), "v": np.arange(3)})
    d = json.loads(rep.to_json())
    assert d["results"] == {"n": 4, "flag": True, "v": [0, 1, 2]}


def test_sorted_keys():
    text = Report("demo", results={"b": 1, "a": 2}).to_json()
    assert text.index('"a"') < text.index('"b"')


def test_timer():
    with Timer() as t:
        sum(range(1000))
    assert t.elapsed >= 0


def test_bundled_actions(tmp_path):
    names = bundled_names()
    assert len(names) >= 8 and "s3_natural" in names
    for name in names:
        act = load_action(name)
        assert act.n >= 1 and act.group.order >= 1
    p = tmp_path / "mine.grp"
    p.write_text("n 2\n(1 2)\n")
    act = load_action(str(p))
    assert act.group.order == 2 and act.name == "mine"
