import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> list of (case, passed, detail), filled by test_acceptance
ACCEPTANCE = {}


@pytest.fixture
def record():
    def _record(criterion: int, case: str, passed: bool, detail: str = ""):
        ACCEPTANCE.setdefault(criterion, []).append((case, passed, detail))
        return passed
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    from test_acceptance import TITLES
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        cases = ACCEPTANCE[n]
        bad = [c for c in cases if not c[1]]
        status = "PASS" if not bad else "FAIL"
        tr.write_line(f"{status}  criterion {n:>2}: {TITLES[n]}  ({len(cases) - len(bad)}/{len(cases)} cases)")
        for case, _, detail in bad:
            tr.write_line(f"        failed: {case}" + (f"  [{detail}]" if detail else ""))
