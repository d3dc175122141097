import json
from pathlib import Path

import pytest
from hypothesis import settings

from lowzeros.primes import build_table

settings.register_profile("default", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def table_1e6():
    return build_table(10**6)


@pytest.fixture(scope="session")
def mpmath_zeros():
    """High-precision zeros from tests/fixtures/make_zero_fixture.py (mpmath only)."""
    data = json.loads((FIXTURES / "zeros_mpmath.json").read_text())
    return {k: [float(g) for g in v["zeros"]] for k, v in data.items()}


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
