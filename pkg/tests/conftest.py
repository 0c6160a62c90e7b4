from pathlib import Path

import numpy as np
import pytest

from chaincodes import ChainRingSpec, MixedCode

DATA = Path(__file__).resolve().parent.parent / "data"

EX2_G = [
    [7, 6, 5, 4, 1, 2, 3],
    [6, 4, 0, 2, 2, 0, 1],
    [4, 4, 2, 4, 0, 1, 2],
    [2, 6, 6, 2, 1, 0, 1],
]
EX2_CHI = [
    [7, 6, 5, 4, 2, 4, 6],
    [6, 4, 0, 2, 4, 0, 2],
    [4, 4, 2, 4, 0, 2, 4],
    [2, 6, 6, 2, 2, 0, 2],
]
EX2_STANDARD = [
    [1, 0, 3, 2, 0, 0, 0],
    [0, 6, 6, 0, 1, 0, 0],
    [0, 4, 2, 0, 0, 1, 0],
    [0, 0, 2, 0, 0, 0, 1],
]
EX3_PARITY = [
    [0, 1, 0, 0, 1, 2, 0],
    [5, 0, 1, 0, 1, 3, 3],
    [6, 0, 0, 1, 0, 0, 0],
]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def z8z4():
    return ChainRingSpec(2, 3, 2)


@pytest.fixture
def z4z2():
    return ChainRingSpec(2, 2, 1)


@pytest.fixture
def z9z3():
    return ChainRingSpec(3, 2, 1)


@pytest.fixture
def ex2(z8z4):
    return MixedCode(z8z4, 4, 3, EX2_G)


@pytest.fixture
def ex2_standard(z8z4):
    return MixedCode(z8z4, 4, 3, EX2_STANDARD)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
