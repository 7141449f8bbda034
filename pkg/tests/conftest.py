"""Collects acceptance-criterion outcomes and prints one line per criterion."""

_outcomes: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or report.failed:
        number, title = props["criterion"]
        prev = _outcomes.get(number)
        failed = report.failed or (prev is not None and prev[1] == "FAIL")
        _outcomes[number] = (title, "FAIL" if failed else "PASS", props.get("detail", ""))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        title, verdict, detail = _outcomes[number]
        line = "criterion %d: %s  %s" % (number, verdict, title)
        if detail:
            line += "  [%s]" % detail
        terminalreporter.write_line(line)
