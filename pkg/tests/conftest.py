from collections import defaultdict

_outcomes = defaultdict(list)

CRITERIA = {
    1: "presentation golden relations, n=2..8",
    2: "oracle equals formula, n=2..6",
    3: "isomorphism sweep, n=2..8",
    4: "Fibonacci closed form, m=1..64",
    5: "Green ring structure, n=2..8",
    6: "representation theory and Hopf axioms, n=2..8",
    7: "simple-summand criterion, n=3..6",
}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            item.user_properties.append(("criterion", mark.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes[crit].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k, text in CRITERIA.items():
        results = _outcomes.get(k)
        if not results:
            status = "NOT RUN"
        elif all(r == "passed" for r in results):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"criterion {k}: {status}  ({text}; {len(results)} checks)")
