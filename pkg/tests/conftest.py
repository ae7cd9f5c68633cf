import pytest


def appendix_first(N, a=4, x_mult=300, t_window=500):
    """Straight transcription of the reference search loop, used as an oracle."""
    for x in range(N // a + 1, x_mult * N):
        denom = (a * x - N) ** 2
        if denom == 0:
            continue
        t0 = max(1, (2 * N * x) // denom)
        for t in range(t0, t0 + t_window):
            q_square = t**2 * (a * x - N) ** 2 - 2 * t * x * N
            if q_square >= 0:
                q = int(q_square**0.5)
                # float root is exact enough at these sizes; nudge to be safe
                while q * q > q_square:
                    q -= 1
                while (q + 1) * (q + 1) <= q_square:
                    q += 1
                if q * q == q_square:
                    y = t * (a * x - N) - q
                    z = t * (a * x - N) + q
                    if y > 0 and z > 0:
                        return x, t, q, y, z
    return None


@pytest.fixture
def reference_search():
    return appendix_first


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
