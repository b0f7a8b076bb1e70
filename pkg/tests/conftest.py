import numpy as np
import pytest

from minda_radii import kernels
from minda_radii.catalog import all_entries

BACKENDS = kernels.available_backends()


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return BACKENDS[request.param]


@pytest.fixture(scope="session")
def entries():
    return all_entries()


def rel_err(a, b):
    return abs(a - b) / max(1.0, abs(b))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# acceptance criteria report their verdicts here; printed after the run
SUITE_LIMIT_S = 60.0
_verdicts = {}
_start = {}


def pytest_sessionstart(session):
    import time
    _start["t"] = time.perf_counter()


@pytest.fixture(scope="session")
def acceptance():
    def record(number, title, ok, detail=""):
        _verdicts[number] = (title, bool(ok), detail)
        return bool(ok)
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    import time
    if not _verdicts:
        return
    elapsed = time.perf_counter() - _start.get("t", time.perf_counter())
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_verdicts):
        title, ok, detail = _verdicts[n]
        tr.write_line(f"criterion {n} {'PASS' if ok else 'FAIL'}: {title}" + (f" [{detail}]" if detail else ""))
    tr.write_line(f"suite runtime {'PASS' if elapsed < SUITE_LIMIT_S else 'FAIL'}: {elapsed:.1f} s (limit {SUITE_LIMIT_S:.0f} s)")


def pytest_sessionfinish(session, exitstatus):
    import time
    elapsed = time.perf_counter() - _start.get("t", time.perf_counter())
    if _verdicts and elapsed >= SUITE_LIMIT_S and exitstatus == 0:
        session.exitstatus = 1
