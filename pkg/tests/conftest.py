import pytest

from bordersub import enumerate_maximal_components


@pytest.fixture(scope="session")
def components_n3():
    """The complete n=3 component enumeration, computed once per session."""
    return enumerate_maximal_components(3)
