import pytest
from hypothesis import HealthCheck, settings

from genus2mcg.mcg import Handedness, set_convention

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# criterion number -> (passed, detail), filled by test_acceptance
ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


@pytest.fixture(autouse=True)
def _standard_convention():
    set_convention(Handedness.STANDARD)
    yield
    set_convention(Handedness.STANDARD)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        results = ACCEPTANCE[n]
        ok = all(passed for passed, _ in results)
        detail = "; ".join(d for _, d in results)
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
