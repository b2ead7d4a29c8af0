from collections import defaultdict

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_CRITERIA = {
    1: "moment identities",
    2: "closed forms F(n,c), G(n,c)",
    3: "projection onto U1",
    4: "Cayley graph spectra",
    5: "Hoffman chain",
    6: "isoperimetry",
    7: "reconstruction",
    8: "two-level optimization",
    9: "family zoo",
    10: "verify all end-to-end",
}
_outcomes: dict[int, list[tuple[str, bool]]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number this test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes[marker.args[0]].append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(_outcomes):
        results = _outcomes[k]
        failed = [name for name, ok in results if not ok]
        mark = "PASS" if not failed else "FAIL"
        line = f"criterion {k:2d} [{mark}] {_CRITERIA.get(k, '')} ({len(results) - len(failed)}/{len(results)} clauses)"
        if failed:
            line += " failing: " + ", ".join(failed)
        tr.write_line(line)
