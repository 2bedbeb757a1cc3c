import os
import random

import pytest


@pytest.fixture
def rng():
    """Deterministic RNG; override the seed with HLSB_SEED."""
    seed = int(os.environ.get("HLSB_SEED", "1729"))
    return random.Random(seed)
