import numpy as np
import pytest

from pncsim.block_code import SUPPORTED_CODES, make_bch


@pytest.fixture(scope="session", params=SUPPORTED_CODES, ids=lambda nk: f"{nk[0]},{nk[1]}")
def code(request):
    return make_bch(*request.param)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240815)
