import re

_AC = re.compile(r"test_ac(\d+)_")
_results: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = _AC.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or report.outcome != "passed":
        if n in _results and _results[n][0] == "FAIL":
            return
        name = report.nodeid.split("::")[-1]
        if report.outcome == "passed":
            _results[n] = ("PASS", name)
        else:
            crash = getattr(report.longrepr, "reprcrash", None)
            msg = crash.message.splitlines()[0] if crash else report.outcome
            _results[n] = ("FAIL", f"{name}: {msg[:100]}")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        status, name = _results[n]
        terminalreporter.write_line(f"AC{n:<2} {status}  {name}")
