# Lives at the repository root so the flat modules are importable from tests/.
import numpy as np
import pytest

from triality import TrialitySymmetricMap


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def symbolic_map():
    return TrialitySymmetricMap.symbolic()
