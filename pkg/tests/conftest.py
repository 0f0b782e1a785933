import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from npnsig import kernels  # noqa: E402
from npnsig.truthtable import NPTransform, TruthTable  # noqa: E402

BACKENDS = sorted(kernels.available_backends())


@pytest.fixture(params=BACKENDS)
def backend(request):
    previous = kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(previous)


@st.composite
def tables(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return TruthTable(n, draw(st.integers(0, (1 << (1 << n)) - 1)))


@st.composite
def transforms(draw, n):
    perm = draw(st.permutations(range(n)))
    neg = draw(st.integers(0, (1 << n) - 1))
    out = draw(st.integers(0, 1))
    return NPTransform(tuple(perm), neg, out)


@st.composite
def table_and_transform(draw, min_n=1, max_n=8):
    t = draw(tables(min_n, max_n))
    return t, draw(transforms(t.n))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for line in results:
        terminalreporter.write_line(line)
