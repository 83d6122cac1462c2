import json
from importlib import resources

import pytest

from macfarlane.dirichlet import GroupInput
from macfarlane.quatalg import AlgebraDesc


def fixture_path(name):
    return resources.files("macfarlane") / "fixtures" / name


def load_group(name):
    return GroupInput.from_json(json.loads(fixture_path(name).read_text()))


@pytest.fixture
def torus_group():
    return load_group("punctured_torus.json")


@pytest.fixture
def whitehead_group():
    return load_group("whitehead.json")


@pytest.fixture
def unit_desc():
    return AlgebraDesc(1, 1, 1)
