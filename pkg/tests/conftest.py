import os
import sys
from functools import lru_cache

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from orbigw import (assemble_I, build_extended_git, build_mirror_map, extract_F, extract_mu,
                    invert_mirror_map, j_components, resolve_extension, validate_target)

import reference_data as P

TARGETS = {
    "x7": ((1, 1, 1, 1, 3), (7,), "auto"),
    "x44": ((1, 1, 1, 1, 1, 3), (4, 4), "auto"),
    "x17": ((2, 2, 3, 3, 7), (17,), [{"alpha": a} for a in P.X17_EXTENSION]),
    "x24": ((1, 4, 4, 6, 9), (24,), P.X24_EXTENSION),
    "quintic": ((1, 1, 1, 1, 1), (5,), "auto"),
}


class Run:
    """Every intermediate of one target at one truncation."""

    def __init__(self, name, D):
        weights, degrees, ext = TARGETS[name]
        self.target = validate_target(weights, degrees)
        self.git = build_extended_git(self.target, resolve_extension(self.target, ext))
        self.I = assemble_I(self.git, D)
        self.mu = extract_mu(self.I, self.git)
        self.mirror_map = build_mirror_map(self.mu, self.git)
        self.inverse = invert_mirror_map(self.mirror_map)
        self.J = j_components(self.I, self.mu, self.inverse)
        self.F = extract_F(self.J, self.git)


@lru_cache(maxsize=None)
def run(name, D):
    return Run(name, D)


@pytest.fixture(scope="session")
def runs():
    return run


# one PASS/FAIL line per acceptance criterion in the terminal summary

_RESULTS = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, text = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _RESULTS[number] = (report.passed, text)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        passed, text = _RESULTS[number]
        terminalreporter.write_line("%s criterion %d: %s" % ("PASS" if passed else "FAIL",
                                                              number, text))
