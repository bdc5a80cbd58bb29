import json

import pytest

from orbitduality import data


@pytest.fixture(scope="session")
def f4_bundle():
    return data.load_builtin_bundle("f4")


@pytest.fixture(scope="session")
def f4_pair(f4_bundle):
    return data.dual_pair(f4_bundle)


@pytest.fixture(scope="session")
def f4_params(f4_bundle):
    return data.parameter_set(f4_bundle, "F4(a3)")


@pytest.fixture()
def f4_doc():
    """Mutable plain-dict copy of the shipped bundle document."""
    return json.loads(data.builtin_bundle_text("f4"))
