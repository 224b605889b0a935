import pytest

# (criterion id, passed, detail) lines collected by test_acceptance.py
ACCEPTANCE = []


@pytest.fixture
def record():
    def _record(cid, passed, detail):
        line = f"criterion {cid:>3}: {'PASS' if passed else 'FAIL'}  {detail}"
        ACCEPTANCE.append(line)
        print(line)
        return passed

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
