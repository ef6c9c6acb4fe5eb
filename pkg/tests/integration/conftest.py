from typing import Dict, Generator
import pytest
from app.core.settings import get_settings
from app.core.symmetry import family_axial, sp2_example


@pytest.fixture(autouse=True)
def settings_cache() -> Generator[None, None, None]:
    """
    Ensure settings read from the environment by one test do not
    leak into the next through the cached instance.
    """
    get_settings.cache_clear()
    yield None
    get_settings.cache_clear()


@pytest.fixture(scope="session")
def sp2_instance() -> Dict:
    """The serialized Sp(2) example, as written by the family command."""
    return sp2_example().to_dict()


@pytest.fixture(scope="session")
def axial_instance() -> Dict:
    """A serialized member of the axial Sp(1) family."""
    return family_axial(0.25).to_dict()
