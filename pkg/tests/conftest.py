CRITERIA = {}  # number -> (title, {nodeid: passed})


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            CRITERIA.setdefault(number, (title, {}))[1][item.nodeid] = None


def pytest_runtest_logreport(report):
    for _, results in CRITERIA.values():
        if report.nodeid not in results:
            continue
        if report.failed:
            results[report.nodeid] = False
        elif report.when == "call" and report.passed and results[report.nodeid] is None:
            results[report.nodeid] = True


def pytest_terminal_summary(terminalreporter):
    ran = {n: v for n, v in CRITERIA.items() if any(r is not None for r in v[1].values())}
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ran):
        title, results = ran[number]
        done = [r for r in results.values() if r is not None]
        status = "PASS" if done and all(done) and len(done) == len(results) else "FAIL"
        failing = [nid.split("::")[-1] for nid, r in results.items() if r is False]
        suffix = f"  (failing: {', '.join(failing)})" if failing else ""
        terminalreporter.write_line(f"{status} criterion {number}: {title}{suffix}")
