import re

CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = CRITERION.search(getattr(rep, "nodeid", ""))
            if not m or rep.when not in ("call", "setup"):
                continue
            key = (int(m.group(1)), m.group(2).replace("_", " "))
            if outcome != "passed" or key not in results:
                results[key] = "PASS" if outcome == "passed" else "FAIL"
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for (num, title), verdict in sorted(results.items()):
        terminalreporter.write_line(f"criterion {num:2d}: {verdict}  {title}")
