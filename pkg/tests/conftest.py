from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile(
    "pfkit",
    derandomize=True,
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("pfkit")


def rationals(max_num=20, max_den=6):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


def rational_lists(n, **kw):
    return st.lists(rationals(**kw), min_size=n, max_size=n)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
