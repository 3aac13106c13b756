import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from torusbundle.appell_humbert import decompose  # noqa: E402
from torusbundle.classify import build_iwasawa  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def iwasawa():
    return build_iwasawa()


@pytest.fixture(scope="session")
def iwasawa_deformed():
    return build_iwasawa(deformed=True)


@pytest.fixture(scope="session")
def iwasawa_decomp(iwasawa):
    return decompose(iwasawa.A, iwasawa.V, iwasawa.U)


@pytest.fixture(scope="session")
def deformed_decomp(iwasawa_deformed):
    return decompose(iwasawa_deformed.A, iwasawa_deformed.V, iwasawa_deformed.U)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        passed, line = RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'} - {line}")
