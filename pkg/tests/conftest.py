import pytest

from tourlab import enumerate_all, random_tournament


@pytest.fixture(scope="session")
def corpus():
    """Canonical representatives per vertex count, built once."""
    return {n: list(enumerate_all(n)) for n in range(1, 7)}


@pytest.fixture(scope="session")
def random_pool():
    """Seeded random tournaments across sizes, shared by sampling tests."""
    return [random_tournament(n, seed) for n in range(2, 9) for seed in range(5)]
