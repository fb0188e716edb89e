import random

import pytest


@pytest.fixture
def rng():
    """Deterministic RNG; tests that need fresh streams reseed locally."""
    return random.Random(0xC0FFEE)
