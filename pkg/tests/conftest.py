import re

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, title): acceptance criterion, summarised at the end")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    label, title = marker.args
    detail = dict(item.user_properties).get("detail", "")
    _RESULTS[item.nodeid] = (label, title, call.excinfo is None, detail)


def _order(result):
    num, suffix = re.fullmatch(r"(\d+)(\w*)", result[0]).groups()
    return int(num), suffix


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for label, title, ok, detail in sorted(_RESULTS.values(), key=_order):
        tr.write_line(f"criterion {label:<3} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else ""))
