import numpy as np
import pytest

# ranks whose column sums are (5, 5, 9, 14, 12)
BREAKING_STRENGTH_RANKS = np.array(
    [
        [1, 2, 3, 4, 5],
        [1, 2, 4, 5, 3],
        [3, 1, 2, 5, 4],
    ]
)


@pytest.fixture
def example_ranks():
    return BREAKING_STRENGTH_RANKS.copy()
