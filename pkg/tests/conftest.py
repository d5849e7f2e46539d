import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quotient_closed.quiver import builtin  # noqa: E402
from quotient_closed.weyl import weyl_group  # noqa: E402


@pytest.fixture(scope="session")
def A1():
    return builtin("A1")


@pytest.fixture(scope="session")
def A2():
    return builtin("A2")


@pytest.fixture(scope="session")
def A3():
    return builtin("A3")


@pytest.fixture(scope="session")
def D4():
    return builtin("D4")


@pytest.fixture(scope="session")
def triangle():
    return builtin("triangle")


@pytest.fixture
def ev():
    """``ev(q, "1 2 1")`` -> group element."""
    def _ev(q, word):
        if isinstance(word, str):
            word = tuple(int(x) for x in word.split())
        return weyl_group(q).evaluate(word)
    return _ev
