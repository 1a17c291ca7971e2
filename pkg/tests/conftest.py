import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# criterion number -> list of (ok, detail); filled by tests/test_acceptance.py
ACCEPTANCE: dict = {}


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path_factory, monkeypatch):
    monkeypatch.setenv("RANK2CN_CACHE_DIR", str(tmp_path_factory.getbasetemp() / "cache"))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        results = ACCEPTANCE[n]
        ok = all(r for r, _ in results)
        bad = [d for r, d in results if not r]
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}"
        if bad:
            line += " -- " + "; ".join(bad)
        tr.write_line(line)
