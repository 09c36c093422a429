import math

import numpy as np
import pytest

from knot_uncertainty.models.geometry import KnotSpec, ParameterizationKind, TorusSpec
from knot_uncertainty.models.reports import Commutator, URRelation, URSource, WeightPreset
from knot_uncertainty.models.state import QuadratureConfig, Superposition
from knot_uncertainty.services.geometry_service import AXES, GeometryService
from knot_uncertainty.services.quadrature_service import QuadratureService
from knot_uncertainty.services.quantum_service import QuantumService, parse_expression
from knot_uncertainty.utils.exceptions import (
    DuplicateMode,
    InvalidInput,
    NegativeVariance,
    NoConvergence,
    NonPositive,
    NonRealExpectation,
    PeriodMismatch,
    ZeroMRL,
    ZeroState,
)

THIN = ParameterizationKind.THIN_TORUS
EXACT = ParameterizationKind.EXACT
SQRT2 = math.sqrt(2.0)


class TestSuperposition:

    def test_equal_weights_normalized(self):
        psi = QuantumService.make_superposition(2, [(0, 1), (2, 1)])
        assert np.allclose(psi.amplitudes, [1 / SQRT2, 1 / SQRT2], atol=1e-15)

    def test_single_imaginary_amplitude(self):
        psi = QuantumService.make_superposition(3, [(1, 2j)])
        assert abs(psi.amplitudes[0]) == pytest.approx(1.0, abs=1e-15)
        assert psi.amplitudes[0] == pytest.approx(1j)

    def test_duplicate_modes(self):
        with pytest.raises(DuplicateMode):
            QuantumService.make_superposition(2, [(0, 1), (0, 1)])

    @pytest.mark.parametrize('modes', [[], [(0, 0), (1, 0)]])
    def test_zero_state(self, modes):
        with pytest.raises(ZeroState):
            QuantumService.make_superposition(2, modes)

    def test_non_positive_period(self):
        with pytest.raises(NonPositive):
            QuantumService.make_superposition(0, [(0, 1)])

    def test_wavefunction_is_periodic(self, choice_two):
        phi = np.linspace(-3.0, 3.0, 101)
        assert np.allclose(choice_two.evaluate(phi), choice_two.evaluate(phi + choice_two.period), atol=1e-12)

    def test_lz_variance(self, choice_two):
        assert choice_two.lz_variance() == pytest.approx(1.25 ** 2, abs=1e-12)

    def test_norm(self, choice_one, trefoil):
        assert QuantumService.norm(choice_one, trefoil) == pytest.approx(1.0, abs=1e-12)


class TestQuadrature:

    def test_constant(self):
        cfg = QuadratureConfig(n_start=16)
        value = QuadratureService.quadrature_integrate(lambda phi: np.ones_like(phi), 4 * math.pi, cfg)
        assert value.real == pytest.approx(4 * math.pi, rel=1e-13)

    def test_cosine_squared(self):
        cfg = QuadratureConfig(n_start=16)
        value = QuadratureService.quadrature_integrate(lambda phi: np.cos(1.5 * phi) ** 2, 4 * math.pi, cfg)
        assert value.real == pytest.approx(2 * math.pi, rel=1e-13)

    def test_triple_product(self):
        cfg = QuadratureConfig(n_start=16)
        value = QuadratureService.quadrature_integrate(
            lambda phi: np.cos(phi) * np.cos(1.5 * phi) * np.cos(2.5 * phi), 4 * math.pi, cfg
        )
        assert value.real == pytest.approx(math.pi, rel=1e-13)

    def test_non_periodic_integrand_does_not_converge(self):
        cfg = QuadratureConfig(n_start=16, max_doublings=2)
        with pytest.raises(NoConvergence):
            QuadratureService.quadrature_integrate(lambda phi: phi, 2 * math.pi, cfg)

    @pytest.mark.parametrize('kwargs', [{'n_start': 8}, {'tol': 0.0}, {'max_doublings': 0}])
    def test_invalid_config(self, kwargs):
        with pytest.raises(InvalidInput):
            QuadratureConfig(**kwargs)

    def test_default_config_scales_with_p(self):
        assert QuantumService.default_config(KnotSpec(3, 4)).n_start == 768

    @pytest.mark.parametrize('bandwidth, expected', [(0, 512), (96, 512), (512, 1024), (8264, 16384)])
    def test_starting_points(self, bandwidth, expected):
        cfg = QuadratureConfig(n_start=512)
        assert QuadratureService.starting_points(cfg, bandwidth) == expected

    def test_high_mode_is_not_aliased(self, trefoil, torus):
        psi = Superposition.build(2, [(0, 1.0), (1026, 1.0)])
        default = QuantumService.expect_coordinate(psi, torus, trefoil, 'x', THIN)
        fine = QuantumService.expect_coordinate(psi, torus, trefoil, 'x', THIN, QuadratureConfig(n_start=65536))
        # no harmonic of x meets the 1026/p beat, so the mean vanishes
        assert abs(default) < 1e-12
        assert abs(default - fine) < 1e-12


class TestExpectations:

    def test_choice_one_first_moments(self, choice_one, torus, trefoil):
        assert QuantumService.expect_coordinate(choice_one, torus, trefoil, 'x', THIN) == pytest.approx(0.5, abs=1e-12)
        assert QuantumService.expect_coordinate(choice_one, torus, trefoil, 'y', THIN) == pytest.approx(0.0, abs=1e-12)
        assert QuantumService.expect_coordinate(choice_one, torus, trefoil, 'z', THIN) == pytest.approx(0.0, abs=1e-12)

    def test_choice_one_second_moments(self, choice_one, torus, trefoil):
        gamma = torus.gamma
        expect = lambda expr: QuantumService.expect_coordinate(choice_one, torus, trefoil, expr, THIN)
        assert expect('x2') == pytest.approx(0.5 + 5 / (16 * gamma ** 2), abs=1e-12)
        assert expect('y^2') == pytest.approx(0.5 + 3 / (16 * gamma ** 2), abs=1e-12)
        assert expect('z2') == pytest.approx(0.5 / gamma ** 2, abs=1e-12)
        assert expect('zx') == pytest.approx(0.0, abs=1e-12)
        assert expect(('z', 'y')) == pytest.approx(0.0, abs=1e-12)

    def test_choice_two_mean_x(self, choice_two, torus, trefoil):
        value = QuantumService.expect_coordinate(choice_two, torus, trefoil, 'x', THIN)
        assert value == pytest.approx(0.025, abs=1e-12)

    def test_period_mismatch(self, torus, trefoil):
        psi = Superposition.build(3, [(0, 1), (3, 1)])
        with pytest.raises(PeriodMismatch):
            QuantumService.expect_coordinate(psi, torus, trefoil, 'x', THIN)

    @pytest.mark.parametrize('expr', ['w', 'xyz', '', 'x3'])
    def test_unsupported_expression(self, expr):
        with pytest.raises(InvalidInput):
            parse_expression(expr)

    def test_parse_expression_forms(self):
        assert parse_expression('x') == ('x',)
        assert parse_expression('x^2') == ('x', 'x')
        assert parse_expression('zy') == ('z', 'y')

    def test_lz_moments(self, choice_one):
        assert QuantumService.expect_Lz_power(choice_one, 1) == pytest.approx(0.5, abs=1e-15)
        assert QuantumService.expect_Lz_power(choice_one, 2) == pytest.approx(0.5, abs=1e-15)
        with pytest.raises(InvalidInput):
            QuantumService.expect_Lz_power(choice_one, 3)

    def test_eigenstate_has_no_lz_spread(self):
        psi = Superposition.build(2, [(3, 1)])
        mean = QuantumService.expect_Lz_power(psi, 1)
        assert QuantumService.expect_Lz_power(psi, 2) - mean ** 2 == pytest.approx(0.0, abs=1e-15)


class TestStandardDeviations:

    def test_negative_variance_raises(self):
        with pytest.raises(NegativeVariance):
            QuantumService._sigma(0.0, 1.0, 'x')

    def test_rounding_negative_variance_is_clamped(self):
        assert QuantumService._sigma(0.25 - 1e-15, 0.5, 'x') == 0.0

    def test_imaginary_expectation_raises(self):
        with pytest.raises(NonRealExpectation):
            QuantumService._real(complex(1.0, 1e-6), 'x')

    def test_rounding_imaginary_part_is_dropped(self):
        assert QuantumService._real(complex(1.0, 1e-14), 'x') == 1.0

    def test_choice_one(self, choice_one, torus, trefoil):
        report = QuantumService.standard_deviations(choice_one, torus, trefoil, THIN)
        tol = 5 / torus.gamma ** 2
        assert report.sigma_x == pytest.approx(0.5, abs=tol)
        assert report.sigma_y == pytest.approx(1 / SQRT2, abs=tol)
        assert report.sigma_z == pytest.approx(1 / (SQRT2 * torus.gamma), abs=1e-12)
        assert report.sigma_Lz == pytest.approx(0.5, abs=1e-12)
        assert report.kind == THIN

    def test_choice_two(self, choice_two, torus, trefoil):
        report = QuantumService.standard_deviations(choice_two, torus, trefoil, THIN)
        assert report.sigma_x == pytest.approx(1 / SQRT2, abs=5 / torus.gamma ** 2)
        assert report.sigma_Lz == pytest.approx(1.25, abs=1e-12)

    @pytest.mark.parametrize('kind', [EXACT, THIN])
    def test_variances_are_nonnegative(self, choice_two, torus, trefoil, kind):
        report = QuantumService.standard_deviations(choice_two, torus, trefoil, kind)
        for axis in AXES:
            mean = getattr(report, f'mean_{axis}')
            assert getattr(report, f'mean_{axis}2') - mean ** 2 >= -1e-14


class TestRobertson:

    def test_choice_one_y(self, choice_one, torus, trefoil):
        ur = QuantumService.robertson_pair(choice_one, torus, trefoil, 'y', THIN)
        assert ur.relation == URRelation.Y_LZ
        assert ur.source == URSource.QUADRATURE
        assert ur.lhs == pytest.approx(1 / (2 * SQRT2), abs=1e-3)
        assert ur.rhs == pytest.approx(0.25, abs=1e-12)
        assert ur.satisfied
        assert ur.margin == pytest.approx(1 / (2 * SQRT2) - 0.25, abs=2e-3)

    def test_choice_one_x_has_zero_rhs(self, choice_one, torus, trefoil):
        ur = QuantumService.robertson_pair(choice_one, torus, trefoil, 'x', THIN)
        assert ur.rhs < 1e-10
        assert ur.satisfied

    def test_thin_closed_form_z_commutator(self, choice_one, torus, trefoil):
        ur = QuantumService.robertson_pair(choice_one, torus, trefoil, 'z', THIN,
                                           commutator=Commutator.THIN_CLOSED_FORM)
        gamma = torus.gamma
        assert ur.signed_rhs == pytest.approx(-3 * 3 / (8 * gamma * 2), abs=1e-12)
        assert ur.signed_margin == pytest.approx((2 * SQRT2 + 3 * 3 / 2) / (8 * gamma), abs=2e-3)
        # the linearized commutator overstates |<[z, Lz]>| at first order in 1/gamma
        assert not ur.satisfied

    def test_tangent_z_is_satisfied(self, choice_one, torus, trefoil):
        ur = QuantumService.robertson_pair(choice_one, torus, trefoil, 'z', THIN)
        assert ur.rhs < 1e-12
        assert ur.satisfied

    def test_thin_commutator_requires_thin_kind(self, choice_one, torus, trefoil):
        with pytest.raises(InvalidInput):
            QuantumService.commutator_expectation(choice_one, torus, trefoil, 'z', EXACT,
                                                  commutator=Commutator.THIN_CLOSED_FORM)

    @pytest.mark.parametrize('axis', AXES)
    def test_eigenstate_saturates(self, torus, trefoil, axis):
        psi = Superposition.build(2, [(1, 1)])
        ur = QuantumService.robertson_pair(psi, torus, trefoil, axis, EXACT)
        assert ur.lhs == pytest.approx(0.0, abs=1e-12)
        assert ur.rhs == pytest.approx(0.0, abs=1e-12)
        assert ur.satisfied

    def test_generic_bound(self):
        assert QuantumService.robertson_bound(0.5, 0.5, -0.5, 1.0) == (0.25, -0.25)


class TestMeanResultantLength:

    def test_choices(self, choice_one, choice_two, torus, trefoil):
        assert QuantumService.mean_resultant_length(choice_one, torus, trefoil, THIN) == pytest.approx(0.5, abs=1e-12)
        assert QuantumService.mean_resultant_length(choice_two, torus, trefoil, THIN) == pytest.approx(0.025, abs=1e-12)

    def test_eigenstate_sits_at_center(self, torus, trefoil):
        psi = Superposition.build(2, [(1, 1)])
        assert QuantumService.mean_resultant_length(psi, torus, trefoil, THIN) == pytest.approx(0.0, abs=1e-12)

    def test_non_positive_weight(self, choice_one, torus, trefoil):
        with pytest.raises(InvalidInput):
            QuantumService.mean_resultant_length(choice_one, torus, trefoil, THIN, weight=0.0)

    @pytest.mark.parametrize('state', ['choice_one', 'choice_two'])
    def test_inequality(self, request, torus, trefoil, state):
        check = QuantumService.mrl_inequality(request.getfixturevalue(state), torus, trefoil, THIN)
        assert check.satisfied
        assert check.weight == pytest.approx(11.0)
        assert check.bound == pytest.approx(math.sqrt(1.2))
        assert check.printed_bound == pytest.approx(1.1)


class TestCombined:

    def test_choice_one_lhs(self, choice_one, torus, trefoil):
        ur = QuantumService.combined_ur(choice_one, torus, trefoil, THIN)
        assert ur.relation == URRelation.COMBINED
        assert ur.weight == pytest.approx(1.1)
        assert ur.lhs == pytest.approx(math.sqrt(3) / 2, abs=1e-2)
        assert ur.lhs >= 0.5
        assert ur.satisfied

    @pytest.mark.parametrize('state', ['choice_one', 'choice_two'])
    @pytest.mark.parametrize('preset', list(WeightPreset))
    def test_both_presets(self, request, torus, trefoil, state, preset):
        psi = request.getfixturevalue(state)
        ur = QuantumService.combined_ur(psi, torus, trefoil, THIN, weight=preset.weight(torus.gamma))
        assert ur.satisfied

    def test_eigenstate(self, torus, trefoil):
        psi = Superposition.build(2, [(1, 1)])
        with pytest.raises(ZeroMRL):
            QuantumService.combined_ur(psi, torus, trefoil, THIN)


class TestSpectralExactness:

    @pytest.mark.parametrize('gamma', [10.0, 100.0])
    @pytest.mark.parametrize('modes', [(0, 2), (0, 5)])
    @pytest.mark.parametrize('expr', ['x', 'y', 'z', 'x2', 'y2', 'z2', 'zx', 'zy'])
    def test_doubling_past_bandwidth(self, trefoil, gamma, modes, expr):
        torus = TorusSpec.from_scale(1.0, gamma)
        psi = Superposition.build(2, [(n, 1.0) for n in modes])
        factors = parse_expression(expr)

        def integrand(phi):
            point = GeometryService.embed_thin(torus, trefoil, phi)
            value = psi.density(phi)
            for axis in factors:
                value = value * getattr(point, axis)
            return value

        bound = QuantumService.bandwidth_bound(psi, trefoil)
        coarse = QuadratureService.rectangle_rule(integrand, trefoil.period, bound).real
        fine = QuadratureService.rectangle_rule(integrand, trefoil.period, 2 * bound).real
        assert abs(fine - coarse) < 1e-12 * max(1.0, abs(fine))

    def test_bandwidth_bound(self, choice_two, trefoil):
        assert QuantumService.bandwidth_bound(choice_two, trefoil) == 96
