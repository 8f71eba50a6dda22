import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def partitions(draw, max_size=14, max_parts=None):
    """Random partitions of size at most ``max_size``."""
    n = draw(st.integers(0, max_size))
    parts = []
    while n:
        cap = min(n, parts[-1]) if parts else n
        x = draw(st.integers(1, cap))
        parts.append(x)
        n -= x
        if max_parts and len(parts) == max_parts:
            break
    return tuple(parts)


e_values = st.integers(2, 6)


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES: dict = {}


def record_acceptance(key: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} {key}: {detail}"
    ACCEPTANCE_LINES[key] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES, key=lambda k: int(k.split("-")[1])):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
