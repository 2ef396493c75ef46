import pytest
from hypothesis import strategies as st

from banach_tarski.words import reduce

_RESULTS: dict[int, tuple[str, bool]] = {}


def raw_letters(max_size=12):
    return st.lists(st.integers(min_value=0, max_value=3), max_size=max_size)


def words(max_size=6):
    return raw_letters(max_size).map(reduce)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and not rep.failed):
        return
    number, title = mark.args
    ok = _RESULTS.get(number, (title, True))[1] and rep.passed
    _RESULTS[number] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_RESULTS):
        title, ok = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")
