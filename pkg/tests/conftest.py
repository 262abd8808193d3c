import random
from pathlib import Path

import pytest
from hypothesis import settings

from dfadist.automata import Dfa

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def example_a() -> Dfa:
    """Four-state unary cycle; accepts a^n except multiples of four."""
    return Dfa("a", [(1,), (2,), (3,), (0,)], 0, {1, 2, 3})


@pytest.fixture
def example_b() -> Dfa:
    """Five-state unary automaton with a three-cycle tail."""
    return Dfa("a", [(1,), (2,), (3,), (4,), (2,)], 0, {1, 2, 3})


@pytest.fixture
def odd_length() -> Dfa:
    """Two-state automaton of the odd-length unary words."""
    return Dfa("a", [(1,), (0,)], 0, {1})


@pytest.fixture
def empty_lang() -> Dfa:
    return Dfa("a", [(0,)], 0, set())


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)
