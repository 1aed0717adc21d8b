from hypothesis import settings, strategies as st

from partalg.setpart import SetPartition

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def set_partitions(draw, m=None, min_m=1, max_m=7):
    if m is None:
        m = draw(st.integers(min_value=min_m, max_value=max_m))
    labels = draw(st.lists(st.integers(min_value=0, max_value=m - 1), min_size=m, max_size=m))
    return SetPartition.from_labels(labels)


@st.composite
def half_level_partitions(draw, kc):
    """Partitions of 2*kc points keeping kc and 2*kc in one block."""
    labels = draw(st.lists(st.integers(min_value=0, max_value=2 * kc - 1), min_size=2 * kc, max_size=2 * kc))
    labels[2 * kc - 1] = labels[kc - 1]
    return SetPartition.from_labels(labels)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
