from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("repo", deadline=None, max_examples=60)
settings.load_profile("repo")


def rationals(lo=-20, hi=20, max_den=12):
    return st.builds(Fraction, st.integers(lo, hi), st.integers(1, max_den))


def nonzero_rationals(lo=-20, hi=20, max_den=12):
    return rationals(lo, hi, max_den).filter(bool)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in sorted(REPORT, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
