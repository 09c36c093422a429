import pytest

from knot_uncertainty import create_app
from knot_uncertainty.models.closed_form import TwoModeState
from knot_uncertainty.models.geometry import KnotSpec, ParameterizationKind, TorusSpec
from knot_uncertainty.models.state import Superposition

THIN = ParameterizationKind.THIN_TORUS
EXACT = ParameterizationKind.EXACT


@pytest.fixture
def app():
    return create_app('testing')


@pytest.fixture
def trefoil():
    return KnotSpec(2, 3)


@pytest.fixture
def torus():
    return TorusSpec.from_scale(1.0, 10.0)


@pytest.fixture
def choice_one():
    return Superposition.build(2, [(0, 1.0), (2, 1.0)])


@pytest.fixture
def choice_two():
    return Superposition.build(2, [(0, 1.0), (5, 1.0)])


@pytest.fixture
def choice_one_state():
    return TwoModeState(0, 2, 2, 3)


@pytest.fixture
def choice_two_state():
    return TwoModeState(0, 5, 2, 3)
