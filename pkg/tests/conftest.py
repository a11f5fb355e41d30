from __future__ import annotations

import pytest

CRITERIA = {
    1: "J_t vs transversal Betti numbers, t >= n-2, n <= 8",
    2: "oracle vs formula for transversal ideals, m <= 10, linear",
    3: "formula vs EK vs oracle for J_t, n <= 5",
    4: "resolution certificates, m <= 8",
    5: "generator cross-validation and nu counts",
    6: "stability, Borel and radical predicates",
    7: "binomial identity suites",
    8: "DG algebra: commutativity, associativity, Leibniz",
    9: "conjecture scan report",
}

# criterion -> list of (test id, outcome)
_outcomes: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): test belongs to acceptance criterion k")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    rep = (yield).get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        if hasattr(rep, "wasxfail"):
            outcome = "xfailed" if rep.skipped else "xpassed"
        else:
            outcome = rep.outcome
        _outcomes.setdefault(marker.args[0], []).append((item.name, outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k, title in CRITERIA.items():
        results = _outcomes.get(k)
        if not results:
            tr.write_line(f"criterion {k}: NOT RUN  {title}")
            continue
        bad = [name for name, outcome in results if outcome != "passed"]
        status = "PASS" if not bad else "FAIL"
        line = f"criterion {k}: {status}  {title}"
        if bad:
            line += "  (" + ", ".join(f"{name}: {dict(results)[name]}" for name in bad) + ")"
        tr.write_line(line)
