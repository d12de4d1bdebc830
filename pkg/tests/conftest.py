import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# acceptance criterion id -> (PASS | FAIL | SKIP, message); filled by test_acceptance.py
ACCEPTANCE: dict[str, tuple[str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        status, msg = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{status}] criterion {key}: {msg}")


@pytest.fixture(scope="session")
def corpus():
    from stringyfano.samples import random_canonical_simplices
    return random_canonical_simplices(500, 12, seed=0)


@pytest.fixture(scope="session")
def reflexive_sample():
    from stringyfano.samples import load_reflexive3_sample
    return [r.polytope for r in load_reflexive3_sample()]

