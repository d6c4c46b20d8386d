import pytest

CORPUS = [
    (1,),
    (2,),
    (1, 2),
    (1, 2, 3),
    (2, 3, 5),
    (1, 1, 2),
    (2, 4),
    (6, 10, 15),
    (1, 2, 3, 4, 5),
]

_acceptance: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    failed = report.failed
    if report.when == "call" or failed:
        prev = _acceptance.get(number, (None, title))[0]
        status = "FAIL" if failed or prev == "FAIL" else "PASS"
        _acceptance[number] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        status, title = _acceptance[number]
        terminalreporter.write_line(f"{status} [{number}] {title}")
