import sys

import pytest

import ramsey_trees.limits as limits


@pytest.fixture(autouse=True)
def _restore_limits():
    """Keep the global size guards from leaking between tests."""
    saved = (limits.max_leaves(), limits.max_enumeration())
    yield
    limits.set_max_leaves(saved[0])
    limits.set_max_enumeration(saved[1])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
