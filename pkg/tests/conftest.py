import pytest


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow checks")


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow; opt in with --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
            if item.module.__name__.endswith("test_acceptance"):
                k = int(item.name.split("_")[1])
                config._acceptance_lines.append(f"ACCEPTANCE {k}: SKIP (slow; opt in with --runslow)")


@pytest.fixture
def acceptance_log(request):
    return request.config._acceptance_lines


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)
