import pytest

from domcore import enumerate_connected


@pytest.fixture(scope="session")
def corpus6():
    """All connected graphs with up to six vertices, as (n, graph) pairs."""
    out = []
    for n in range(1, 7):
        out.extend((n, g) for g in enumerate_connected(n))
    return out


@pytest.fixture(scope="session")
def corpus7(corpus6):
    """All connected graphs with up to seven vertices."""
    return corpus6 + [(7, g) for g in enumerate_connected(7)]
