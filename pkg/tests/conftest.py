import pytest
from hypothesis import HealthCheck, settings

from twisted_thue.stender import StenderParams, stender_unit_basis, theta_field

settings.register_profile(
    "repo", max_examples=60, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

PARAMS = [StenderParams(D, c) for D in (2, 3) for c in (1, -1)]


@pytest.fixture(scope="session")
def stender21():
    """(field, unit basis) of the eps-field for D=2, c=1, at 128 bits."""
    return stender_unit_basis(StenderParams(2, 1))


@pytest.fixture(scope="session")
def stender21_wide():
    return stender_unit_basis(StenderParams(2, 1), precision_bits=256)


@pytest.fixture(scope="session")
def theta21():
    return theta_field(StenderParams(2, 1))


# criterion number -> (verdict, detail), filled by tests/test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        verdict, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}  {detail}")
