from pathlib import Path

import pytest

from data.models import DegreeSet
from families.psl2 import psl2_graph, psl2_spec_from_q
from graphs.prime_graph import PrimeGraph, complement
from tests.strategies import cycle_graph

SAMPLES_DIR = Path(__file__).resolve().parent.parent / "data" / "samples"


@pytest.fixture
def samples_dir() -> Path:
    return SAMPLES_DIR


@pytest.fixture
def c5() -> PrimeGraph:
    return cycle_graph((2, 3, 5, 7, 11))


@pytest.fixture
def c7() -> PrimeGraph:
    return cycle_graph((2, 3, 5, 7, 11, 13, 17))


@pytest.fixture
def c7_complement(c7) -> PrimeGraph:
    return complement(c7)


@pytest.fixture
def empty4() -> PrimeGraph:
    return PrimeGraph((2, 3, 5, 7))


@pytest.fixture
def psl2_11() -> PrimeGraph:
    return psl2_graph(psl2_spec_from_q(11))


@pytest.fixture
def psl2_16() -> PrimeGraph:
    return psl2_graph(psl2_spec_from_q(16))


@pytest.fixture
def s5_degrees() -> DegreeSet:
    return DegreeSet(name="S5", degrees=(1, 4, 5, 6))


@pytest.fixture
def psl2_5_degrees() -> DegreeSet:
    return DegreeSet(name="PSL2(5)", degrees=(1, 3, 4, 5))


@pytest.fixture
def c5_degrees() -> DegreeSet:
    return DegreeSet(name="c5_control", degrees=(1, 6, 15, 35, 77, 22))
