import pytest

_OUTCOMES = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by the test")
    config.stash[_OUTCOMES] = {}


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None and (report.when == "call" or report.failed):
        number, title = marker.args
        detail = dict(item.user_properties).get("detail", "")
        seen = item.config.stash[_OUTCOMES]
        previous = seen.get(number, (title, "PASS", detail))
        status = "PASS" if report.passed and previous[1] == "PASS" else "FAIL"
        seen[number] = (title, status, detail or previous[2])
    return report


def pytest_terminal_summary(terminalreporter, config):
    seen = config.stash[_OUTCOMES]
    if not seen:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(seen):
        title, status, detail = seen[number]
        line = f"criterion {number:>2}: {status}  {title}"
        terminalreporter.write_line(f"{line}  ({detail})" if detail else line)
