import pathlib
import sys

import numpy as np
import pytest

SRC = pathlib.Path(__file__).resolve().parents[1] / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from beattydim import BinaryMatrix, ParamTuple  # noqa: E402


def random_binary(rng, m):
    while True:
        rows = rng.integers(0, 2, size=(m, m))
        if rows.sum() > 0:
            return BinaryMatrix(rows.tolist())


def random_irreducible(rng, m):
    while True:
        A = random_binary(rng, m)
        if A.is_irreducible():
            return A


def random_primitive(rng, m):
    while True:
        A = random_irreducible(rng, m)
        if A.is_primitive():
            return A


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


# representative tuples for every region with a closed form
REGION_TUPLES = {
    "R1": ParamTuple(1, 0, "sqrt(5)", 0),
    "R2": ParamTuple("3/2", 0, 3, 0),
    "R3": ParamTuple("sqrt(2)", 0, 3, 0),
    "R4": ParamTuple("sqrt(2)", 0, "sqrt(3)", 0),
    "R5": ParamTuple("sqrt(2)", 0, "2+sqrt(2)", 0),
    "R7": ParamTuple(1, 0, 2, 0),
    "R8": ParamTuple(2, 1, 4, 0),
    "R9": ParamTuple(2, 0, 4, 2),
    "R10": ParamTuple(2, 0, 3, 0),
}
