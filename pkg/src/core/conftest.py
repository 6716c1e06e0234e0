import warnings

import pytest

from core.__seedwork.domain.exceptions import UnresolvedFieldWarning


@pytest.fixture(autouse=True)
def unresolved_fields_are_reported():
    """Resolution warnings stay visible but never turn into errors inside tests."""
    with warnings.catch_warnings():
        warnings.simplefilter('always', UnresolvedFieldWarning)
        yield
