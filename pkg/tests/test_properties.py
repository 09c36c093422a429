import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from knot_uncertainty.models.geometry import KnotSpec, ParameterizationKind, TorusSpec
from knot_uncertainty.models.state import Superposition
from knot_uncertainty.services.geometry_service import AXES, GeometryService
from knot_uncertainty.services.quantum_service import QuantumService

KNOTS = [KnotSpec(2, 3), KnotSpec(3, 4), KnotSpec(2, 5), KnotSpec(3, 5)]
GAMMAS = [5.0, 10.0, 50.0]

knots = st.sampled_from(KNOTS)
gammas = st.sampled_from(GAMMAS)
kinds = st.sampled_from(list(ParameterizationKind))
angles = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False, allow_infinity=False)
amplitudes = st.complex_numbers(min_magnitude=0.05, max_magnitude=10.0, allow_nan=False, allow_infinity=False)


@st.composite
def superpositions(draw, p, min_modes=1):
    numbers = draw(st.lists(st.integers(-12, 12), min_size=min_modes, max_size=5, unique=True))
    coefficients = draw(st.lists(amplitudes, min_size=len(numbers), max_size=len(numbers)))
    return Superposition.build(p, list(zip(numbers, coefficients)))


@given(knot=knots, gamma=gammas, kind=kinds, phi=angles)
def test_embedding_and_tangent_are_periodic(knot, gamma, kind, phi):
    torus = TorusSpec.from_scale(1.0, gamma)
    for func in (GeometryService.embed, GeometryService.tangent):
        start = np.array(func(torus, knot, phi, kind))
        turned = np.array(func(torus, knot, phi + knot.period, kind))
        assert np.allclose(start, turned, rtol=1e-12, atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(data=st.data(), knot=knots)
def test_superpositions_are_normalized(data, knot):
    psi = data.draw(superpositions(knot.p))
    assert abs(float(np.sum(np.abs(psi.amplitudes) ** 2)) - 1.0) < 1e-12
    assert abs(QuantumService.norm(psi, knot) - 1.0) < 1e-12


@settings(max_examples=25, deadline=None)
@given(data=st.data(), knot=knots, gamma=gammas)
def test_robertson_holds_for_the_exact_curve(data, knot, gamma):
    psi = data.draw(superpositions(knot.p, min_modes=2))
    torus = TorusSpec.from_scale(1.0, gamma)
    report = QuantumService.standard_deviations(psi, torus, knot, ParameterizationKind.EXACT)
    for axis in AXES:
        mean = getattr(report, f'mean_{axis}')
        assert getattr(report, f'mean_{axis}2') - mean ** 2 >= -1e-14
        ur = QuantumService.robertson_pair(psi, torus, knot, axis, ParameterizationKind.EXACT, report=report)
        assert ur.satisfied
