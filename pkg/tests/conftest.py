from __future__ import annotations

import pytest

from wreathhopf.finite import _kernels


@pytest.fixture(params=[b.name for b in _kernels.backends()])
def kernels(request, monkeypatch):
    """Run the test once per available kernel backend."""
    ns = {b.name: b for b in _kernels.backends()}[request.param]
    monkeypatch.setattr(_kernels, "K", ns)
    return ns


_ACCEPTANCE: list = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion."""
    def record(label: str, ok: bool, detail: str = ""):
        line = f"{'PASS' if ok else 'FAIL'} {label}" + (f": {detail}" if detail else "")
        _ACCEPTANCE.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
