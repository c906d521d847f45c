import pytest

from owafuzzy import Certain, LinguisticScale, Possibility, Probability

WORKED_LABELS = ("perfect", "large", "moderate", "small", "none")
WORKED_VALUES = (
    (0.75, 1.0, 1.0),
    (0.5, 0.75, 1.0),
    (0.25, 0.5, 0.75),
    (0.0, 0.25, 0.5),
    (0.0, 0.0, 0.25),
)
C1 = Probability((0.0, 0.2, 0.5, 0.2, 0.1))
C2 = Possibility((0.4, 0.2, 0.6, 0.8, 1.0))
C3 = Certain(4)


@pytest.fixture
def worked_scale():
    return LinguisticScale(WORKED_LABELS, WORKED_VALUES)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion" in nodeid and rep.when == "call":
                name = nodeid.split("::")[-1]
                lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(lines, key=lambda t: int(t[0].split("_")[2])):
            terminalreporter.write_line(f"{status}  {name}")
