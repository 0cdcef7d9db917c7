import pathlib
import sys

import numpy as np
import pytest

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from commutant_lab import Tolerance  # noqa: E402


@pytest.fixture
def tol():
    return Tolerance()


def diag(*values) -> np.ndarray:
    return np.diag(np.asarray(values, dtype=float)).astype(complex)


SWAP2 = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
