import sys
from pathlib import Path

import numpy as np
import pytest

from wmstego import RgbImage

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def make_cover(rng, width, height, kind):
    n = width * height * 3
    if kind == "random":
        ch = rng.integers(0, 256, n, dtype=np.uint8)
    elif kind == "constant":
        ch = np.full(n, rng.integers(0, 256), dtype=np.uint8)
    elif kind == "gradient":
        ys, xs = np.mgrid[0:height, 0:width]
        base = (xs * 255 // max(width - 1, 1) + ys * 255 // max(height - 1, 1)) // 2
        ch = np.stack([base, 255 - base, (base * 3) % 256], axis=-1).astype(np.uint8).reshape(-1)
    else:
        raise ValueError(kind)
    return RgbImage(width, height, ch)


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = marker.args
        _acceptance.append((number, title, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_acceptance):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
