import pytest


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", help="run the exhaustive k=2 scans")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="exhaustive scan; use --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES
    if LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(LINES, key=lambda k: (int(k.split(".")[0]), k)):
            terminalreporter.write_line(LINES[key])
