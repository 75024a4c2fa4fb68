import pytest

_criteria = {}


@pytest.fixture
def criterion(record_property):
    def mark(number, text):
        record_property("criterion", f"{number}. {text}")
    return mark


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or report.failed:
        prev = _criteria.get(props["criterion"], "PASS")
        _criteria[props["criterion"]] = "FAIL" if report.failed or prev == "FAIL" else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"[{_criteria[name]}] {name}")
