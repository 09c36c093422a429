import math
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from knot_uncertainty.models.geometry import KnotSpec, ParameterizationKind, TorusSpec
from knot_uncertainty.models.reports import (
    Commutator,
    ExpectationReport,
    MRLCheck,
    URRelation,
    URReport,
    URSource,
)
from knot_uncertainty.models.state import QuadratureConfig, Superposition
from knot_uncertainty.services.geometry_service import AXES, GeometryService
from knot_uncertainty.services.quadrature_service import QuadratureService
from knot_uncertainty.utils.constants import IMAGINARY_TOL, VARIANCE_CLAMP, ZERO_MRL_TOL
from knot_uncertainty.utils.exceptions import (
    InvalidInput,
    NegativeVariance,
    NonRealExpectation,
    PeriodMismatch,
    ZeroMRL,
)
from knot_uncertainty.utils.logger import get_logger

logger = get_logger(__name__)

Expression = Union[str, Sequence[str]]


def parse_expression(expr: Expression) -> Tuple[str, ...]:
    """'x' -> ('x',), 'x2' / 'x^2' -> ('x', 'x'), 'zx' -> ('z', 'x'), ('z', 'y') unchanged"""
    if isinstance(expr, str):
        text = expr.replace('^', '').replace('*', '').strip()
        if len(text) == 2 and text[1] == '2':
            text = text[0] * 2
        factors = tuple(text)
    else:
        factors = tuple(expr)

    if not 1 <= len(factors) <= 2 or any(axis not in AXES for axis in factors):
        raise InvalidInput(f"Unsupported coordinate expression {expr!r}; use monomials of degree 1-2 in x, y, z")
    return factors


class QuantumService:
    """Expectation values, standard deviations and Robertson bounds on a knot"""

    @staticmethod
    def make_superposition(p: int, modes: Sequence[Tuple[int, complex]], hbar: float = 1.0) -> Superposition:
        return Superposition.build(p, modes, hbar)

    @staticmethod
    def default_config(k: KnotSpec) -> QuadratureConfig:
        return QuadratureConfig.for_knot(k.p)

    @staticmethod
    def bandwidth_bound(psi: Superposition, k: KnotSpec) -> int:
        """Grid size past which every integrand of this module is resolved"""
        return int(math.ceil(8 * k.p * (psi.max_abs_mode / k.p + k.q / k.p + 2)))

    @staticmethod
    def _check_period(psi: Superposition, k: KnotSpec):
        if psi.p != k.p:
            raise PeriodMismatch(f"State period p={psi.p} does not match knot p={k.p}")

    @staticmethod
    def _real(value: complex, label: str) -> float:
        if abs(value.imag) > IMAGINARY_TOL * max(1.0, abs(value.real)):
            raise NonRealExpectation(f"<{label}> has imaginary part {value.imag:.3e}")
        return value.real

    @staticmethod
    def expect_function(psi: Superposition, k: KnotSpec, func, cfg: Optional[QuadratureConfig] = None,
                        label: str = 'f') -> float:
        """<psi| f(phi) |psi> for a real multiplicative operator f"""
        QuantumService._check_period(psi, k)
        cfg = cfg or QuantumService.default_config(k)

        def integrand(phi):
            amplitude = psi.evaluate(phi)
            return np.conj(amplitude) * func(phi) * amplitude

        value = QuadratureService.quadrature_integrate(
            integrand, k.period, cfg, bandwidth=QuantumService.bandwidth_bound(psi, k)
        )
        return QuantumService._real(value, label)

    @staticmethod
    def norm(psi: Superposition, k: KnotSpec, cfg: Optional[QuadratureConfig] = None) -> float:
        return QuantumService.expect_function(psi, k, lambda phi: np.ones_like(phi), cfg, label='1')

    @staticmethod
    def expect_coordinate(psi: Superposition, t: TorusSpec, k: KnotSpec, expr: Expression,
                          kind: ParameterizationKind, cfg: Optional[QuadratureConfig] = None) -> float:
        factors = parse_expression(expr)

        def monomial(phi):
            point = GeometryService.embed(t, k, phi, kind)
            value = np.ones_like(phi)
            for axis in factors:
                value = value * getattr(point, axis)
            return value

        return QuantumService.expect_function(psi, k, monomial, cfg, label=''.join(factors))

    @staticmethod
    def expect_Lz_power(psi: Superposition, r: int) -> float:
        """Exact mode-space sum; Lz psi_n = (n/p) hbar psi_n"""
        if r not in (1, 2):
            raise InvalidInput(f"Only Lz and Lz^2 are supported (r={r})")
        weights = np.abs(psi.amplitudes) ** 2
        return float(np.sum(weights * psi.lz_eigenvalues() ** r))

    @staticmethod
    def _sigma(second: float, first: float, label: str) -> float:
        variance = second - first * first
        if variance < -VARIANCE_CLAMP:
            raise NegativeVariance(f"Variance of {label} is {variance:.3e}")
        if variance < 0:
            logger.debug(f"Clamped variance of {label} ({variance:.3e}) to zero")
            variance = 0.0
        return math.sqrt(variance)

    @staticmethod
    def standard_deviations(psi: Superposition, t: TorusSpec, k: KnotSpec, kind: ParameterizationKind,
                            cfg: Optional[QuadratureConfig] = None) -> ExpectationReport:
        means = {
            name: QuantumService.expect_coordinate(psi, t, k, name, kind, cfg)
            for name in ('x', 'y', 'z', 'x2', 'y2', 'z2', 'zx', 'zy')
        }
        mean_lz = QuantumService.expect_Lz_power(psi, 1)
        mean_lz2 = QuantumService.expect_Lz_power(psi, 2)

        report = ExpectationReport(
            mean_x=means['x'],
            mean_y=means['y'],
            mean_z=means['z'],
            mean_x2=means['x2'],
            mean_y2=means['y2'],
            mean_z2=means['z2'],
            mean_zx=means['zx'],
            mean_zy=means['zy'],
            mean_Lz=mean_lz,
            mean_Lz2=mean_lz2,
            sigma_x=QuantumService._sigma(means['x2'], means['x'], 'x'),
            sigma_y=QuantumService._sigma(means['y2'], means['y'], 'y'),
            sigma_z=QuantumService._sigma(means['z2'], means['z'], 'z'),
            sigma_Lz=QuantumService._sigma(mean_lz2, mean_lz, 'Lz'),
            kind=kind,
        )
        logger.info(f"Standard deviations ({kind.value}) for p={k.p}, q={k.q}, gamma={t.gamma}")
        return report

    @staticmethod
    def commutator_expectation(psi: Superposition, t: TorusSpec, k: KnotSpec, coord: str,
                               kind: ParameterizationKind, cfg: Optional[QuadratureConfig] = None,
                               commutator: Commutator = Commutator.TANGENT) -> float:
        """<[coord, Lz]> / (i hbar)"""
        if commutator == Commutator.THIN_CLOSED_FORM and kind != ParameterizationKind.THIN_TORUS:
            raise InvalidInput("The thin closed-form commutator needs the thin-torus kind")

        def func(phi):
            if commutator == Commutator.THIN_CLOSED_FORM:
                return GeometryService.commutator_rhs_thin(coord, t, k, phi)
            return getattr(GeometryService.tangent(t, k, phi, kind), coord)

        return QuantumService.expect_function(psi, k, func, cfg, label=f'[{coord},Lz]')

    @staticmethod
    def robertson_bound(sigma_a: float, sigma_b: float, commutator_expectation: float, hbar: float):
        """(lhs, signed rhs) of sigma_A sigma_B >= (hbar/2)|<[A,B]>/(i hbar)|"""
        return sigma_a * sigma_b, 0.5 * hbar * commutator_expectation

    @staticmethod
    def robertson_pair(psi: Superposition, t: TorusSpec, k: KnotSpec, coord: str,
                       kind: ParameterizationKind, cfg: Optional[QuadratureConfig] = None,
                       commutator: Commutator = Commutator.TANGENT,
                       report: Optional[ExpectationReport] = None) -> URReport:
        report = report or QuantumService.standard_deviations(psi, t, k, kind, cfg)
        expectation = QuantumService.commutator_expectation(psi, t, k, coord, kind, cfg, commutator)
        lhs, signed_rhs = QuantumService.robertson_bound(
            getattr(report, f'sigma_{coord}'), report.sigma_Lz, expectation, psi.hbar
        )
        return URReport.build(
            URRelation.for_axis(coord), lhs, signed_rhs, URSource.QUADRATURE,
            hbar_a=psi.hbar * t.a, commutator=commutator,
        )

    @staticmethod
    def mean_resultant_length(psi: Superposition, t: TorusSpec, k: KnotSpec, kind: ParameterizationKind,
                              cfg: Optional[QuadratureConfig] = None, weight: float = None,
                              report: Optional[ExpectationReport] = None) -> float:
        weight = 1.0 + t.gamma if weight is None else weight
        if not weight > 0:
            raise InvalidInput(f"z weight must be positive (got {weight})")
        report = report or QuantumService.standard_deviations(psi, t, k, kind, cfg)
        return math.sqrt(report.mean_x ** 2 + report.mean_y ** 2 + weight * report.mean_z ** 2)

    @staticmethod
    def mrl_inequality(psi: Superposition, t: TorusSpec, k: KnotSpec, kind: ParameterizationKind,
                       cfg: Optional[QuadratureConfig] = None,
                       report: Optional[ExpectationReport] = None) -> MRLCheck:
        weight = 1.0 + t.gamma
        R = QuantumService.mean_resultant_length(psi, t, k, kind, cfg, weight, report)
        bound = t.a * math.sqrt(1.0 + 2.0 / t.gamma)
        return MRLCheck(
            R=R,
            weight=weight,
            bound=bound,
            printed_bound=t.a * (1.0 + 1.0 / t.gamma),
            satisfied=R <= bound,
        )

    @staticmethod
    def combined_ur(psi: Superposition, t: TorusSpec, k: KnotSpec, kind: ParameterizationKind,
                    cfg: Optional[QuadratureConfig] = None, weight: float = None,
                    commutator: Commutator = Commutator.TANGENT,
                    report: Optional[ExpectationReport] = None) -> URReport:
        """sigma~_R sigma_Lz >= (hbar / 2R) sqrt(sum of squared commutator expectations)"""
        weight = 1.0 + 1.0 / t.gamma if weight is None else weight
        report = report or QuantumService.standard_deviations(psi, t, k, kind, cfg)
        R = QuantumService.mean_resultant_length(psi, t, k, kind, cfg, weight, report)
        if R <= ZERO_MRL_TOL * t.a:
            raise ZeroMRL("Mean resultant length is zero; the normalized combined spread is undefined")

        spread = math.sqrt(report.sigma_x ** 2 + report.sigma_y ** 2 + weight * report.sigma_z ** 2)
        rx, ry, rz = (
            QuantumService.commutator_expectation(psi, t, k, axis, kind, cfg, commutator)
            for axis in AXES
        )
        lhs = spread / R * report.sigma_Lz
        rhs = psi.hbar / (2.0 * R) * math.sqrt(rx ** 2 + ry ** 2 + weight * rz ** 2)
        return URReport.build(
            URRelation.COMBINED, lhs, rhs, URSource.QUADRATURE,
            hbar_a=psi.hbar * t.a, commutator=commutator, weight=weight,
        )
