"""Shared fixtures."""
import hypothesis
import pytest

from thetalab.config import get_settings
from thetalab.core.combinat import LSpec

hypothesis.settings.register_profile("fast", max_examples=25, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=200, deadline=None)
hypothesis.settings.load_profile("fast")


@pytest.fixture
def fresh_settings():
    """Re-read settings from the environment for the duration of a test."""
    get_settings.cache_clear()
    yield get_settings
    get_settings.cache_clear()


@pytest.fixture
def petersen() -> LSpec:
    """G(5,2,{1}): disjoint pairs are adjacent."""
    return LSpec.of(5, 2, [1])
