import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

# acceptance criteria report, printed after the run
_CRITERIA = {}


@pytest.fixture
def criterion(request):
    def record(number, title):
        _CRITERIA.setdefault(number, [title, True])
        request.node.user_properties.append(("criterion", number))
    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and report.failed:
        for key, number in item.user_properties:
            if key == "criterion":
                _CRITERIA[number][1] = False


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}")
