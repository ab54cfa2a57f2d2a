import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from mwpsas import Instance, Partition, validate_instance  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@st.composite
def instances(draw, max_n=7, max_m=5, max_weight=6):
    """Valid general instances, small enough for the naive oracle."""
    n = draw(st.integers(2, max_n))
    m_count = draw(st.integers(1, max_m))
    machines = draw(st.integers(1, n - 1))
    n_weights = draw(st.lists(st.integers(1, max_weight), min_size=n, max_size=n))
    m_weights = draw(st.lists(st.integers(1, max_weight), min_size=m_count, max_size=m_count))
    assoc = draw(
        st.lists(st.frozensets(st.integers(1, m_count)), min_size=n, max_size=n)
    )
    # patch coverage: every M-id goes somewhere
    assoc = list(assoc)
    for j in range(1, m_count + 1):
        if not any(j in s for s in assoc):
            k = draw(st.integers(0, n - 1))
            assoc[k] = assoc[k] | {j}
    return validate_instance(
        Instance(n, m_count, machines, tuple(n_weights), tuple(m_weights), tuple(assoc))
    )


@st.composite
def instance_and_partition(draw, **kw):
    """An instance plus a random partition of N with any number of blocks."""
    inst = draw(instances(**kw))
    labels = draw(st.lists(st.integers(0, inst.n_count - 1), min_size=inst.n_count, max_size=inst.n_count))
    blocks: dict[int, list[int]] = {}
    for i, lab in zip(inst.n_ids, labels):
        blocks.setdefault(lab, []).append(i)
    return inst, Partition.of(blocks[k] for k in sorted(blocks))


@pytest.fixture
def weighted3():
    """N={1,2,3}, M={a,b}; M(1)={a}, M(2)={a,b}, M(3)={b}; p=(2,1,3), (4,5); m=2."""
    return validate_instance(
        Instance(3, 2, 2, (2, 1, 3), (4, 5), (frozenset({1}), frozenset({1, 2}), frozenset({2})))
    )


@pytest.fixture
def tiny():
    """N={1,2}, M={a}, both associated with a, unit weights, one machine."""
    return validate_instance(Instance(2, 1, 1, (1, 1), (1,), (frozenset({1}), frozenset({1}))))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
