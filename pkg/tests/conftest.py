from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "examples_data"


@pytest.fixture
def data_dir() -> Path:
    return DATA
