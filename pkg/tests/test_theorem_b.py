from __future__ import annotations

import pytest

from wreathhopf.abelian import AbelianSpec
from wreathhopf.datasets import bundled_names, load_action
from wreathhopf.finite.theorem_b import CONDITIONS, theoremB_report


def test_s3_natural():
    rep = theoremB_report(load_action("s3_natural"), AbelianSpec((3,)))
    assert rep.failed == []
    assert rep.verdict == "hopfian" and rep.fallback is None
    assert rep.n_p == {3: 1} and rep.n_0 == 0
    assert rep.end_dims == {"F3": 2}
    assert set(CONDITIONS) <= set(rep.licensed_by)


def test_failed_condition_gives_fallback():
    rep = theoremB_report(load_action("c2_trivial"), AbelianSpec((2,)))
    assert "D_classes_nonabelian" in rep.failed
    assert rep.verdict == "undecided_by_theorem_b"
    assert rep.fallback == "hopfian: G is finite"


def test_free_part_note():
    rep = theoremB_report(load_action("s3_natural"), AbelianSpec((0, 2)))
    assert rep.n_0 == 1 and "Q" in rep.end_dims
    assert any("End_QB" in n for n in rep.notes)


def test_trivial_A():
    rep = theoremB_report(load_action("s3_natural"), AbelianSpec((1,)))
    assert rep.verdict == "hopfian"


@pytest.mark.parametrize("name", bundled_names())
def test_no_probe_violations(name):
    rep = theoremB_report(load_action(name), AbelianSpec((2, 3)), budget=64)
    assert rep.as_dict()["probe_violations"] == 0
    assert rep.verdict in ("hopfian", "undecided_by_theorem_b")
