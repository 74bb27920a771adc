import pytest

from cssep.testbed import build_corpus


@pytest.fixture(scope="session")
def corpus():
    """Seeded class-member corpus shared by the acceptance and testbed suites."""
    return build_corpus()
