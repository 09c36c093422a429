from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from knot_uncertainty.models.closed_form import ChoiceClass, ClosedFormReport, TwoModeState
from knot_uncertainty.models.geometry import KnotSpec, ParameterizationKind, TorusSpec
from knot_uncertainty.models.reports import (
    Commutator,
    Discrepancy,
    ExpectationReport,
    RunConfig,
    URRelation,
    VerificationBundle,
)
from knot_uncertainty.models.state import Superposition
from knot_uncertainty.services.analytic_service import AnalyticService
from knot_uncertainty.services.geometry_service import AXES, GeometryService
from knot_uncertainty.services.quantum_service import QuantumService
from knot_uncertainty.utils.constants import (
    DISCREPANCY_FACTOR,
    LZ_EXACT_TOL,
    RANDOM_GAMMAS,
    RANDOM_KNOTS,
    RANDOM_MAX_ABS_MODE,
    RANDOM_MAX_MODES,
    RANDOM_MIN_MODES,
    UR_MARGIN_REL,
)
from knot_uncertainty.utils.exceptions import InvalidInput, ZeroMRL
from knot_uncertainty.utils.logger import get_logger
from knot_uncertainty.utils.validators import validate_gamma_list, validate_trials

logger = get_logger(__name__)

FIRST_ORDER_FIELDS = ('mean_x', 'mean_y', 'mean_z', 'sigma_x', 'sigma_y', 'sigma_z')
SECOND_ORDER_FIELDS = ('mean_x2', 'mean_y2', 'mean_z2', 'mean_zx', 'mean_zy')
EXACT_FIELDS = ('mean_Lz', 'mean_Lz2', 'sigma_Lz')

SWEEP_COLUMNS = [
    'gamma',
    'embedding_sup_error',
    'margin_x_thin', 'margin_y_thin', 'margin_z_thin',
    'margin_x_exact', 'margin_y_exact', 'margin_z_exact',
    'max_discrepancy',
    'all_satisfied',
]


class VerificationService:
    """Assembles the reports behind each CLI sub-command"""

    @staticmethod
    def build_inputs(cfg: RunConfig, gamma: Optional[float] = None) -> Tuple[TorusSpec, KnotSpec, Superposition]:
        torus = GeometryService.new_torus_from_scale(cfg.a, cfg.gamma if gamma is None else gamma)
        knot = GeometryService.new_knot(cfg.p, cfg.q)
        psi = QuantumService.make_superposition(cfg.p, [(n, 1.0) for n in cfg.modes], cfg.hbar)
        return torus, knot, psi

    @staticmethod
    def describe_inputs(cfg: RunConfig, torus: TorusSpec, knot: KnotSpec, psi: Superposition) -> dict:
        """Run flags plus the derived torus, knot and normalized state"""
        data = cfg.to_dict()
        data['torus'] = torus.to_dict()
        data['knot'] = knot.to_dict()
        data['state'] = psi.to_dict()
        state = VerificationService.two_mode_state(cfg)
        if state is not None:
            data['two_mode'] = state.to_dict()
        return data

    @staticmethod
    def two_mode_state(cfg: RunConfig) -> Optional[TwoModeState]:
        if len(cfg.modes) != 2:
            return None
        n, k = cfg.modes
        return TwoModeState(n, k, cfg.p, cfg.q)

    @staticmethod
    def discrepancies(expectations: ExpectationReport, closed: ClosedFormReport,
                      a: float, gamma: float) -> List[Discrepancy]:
        """Closed form against quadrature, field by field"""
        entries = []
        for name in ClosedFormReport.MOMENT_FIELDS:
            closed_value = getattr(closed, name)
            measured = getattr(expectations, name)
            delta = abs(measured - closed_value)

            if name == 'mean_zy' and closed.choice == ChoiceClass.CHOICE_I:
                # printed a^2/(8 gamma^2) is checked as a bound on the measured value
                tolerance = a * a / (4 * gamma ** 2)
                entries.append(Discrepancy(name, closed_value, measured, delta, tolerance,
                                           abs(measured) <= tolerance, criterion='abs_bound'))
                continue

            if name in FIRST_ORDER_FIELDS:
                tolerance = DISCREPANCY_FACTOR * a / gamma ** 2
            elif name in SECOND_ORDER_FIELDS:
                tolerance = DISCREPANCY_FACTOR * a * a / gamma ** 2
            else:
                tolerance = LZ_EXACT_TOL
            entries.append(Discrepancy(name, closed_value, measured, delta, tolerance, delta <= tolerance))
        return entries

    @staticmethod
    def cmd_table(cfg: RunConfig) -> VerificationBundle:
        torus, knot, psi = VerificationService.build_inputs(cfg)
        expectations = QuantumService.standard_deviations(psi, torus, knot, cfg.kind)
        bundle = VerificationBundle(
            inputs=VerificationService.describe_inputs(cfg, torus, knot, psi), expectations=expectations
        )

        state = VerificationService.two_mode_state(cfg)
        if state is None:
            bundle.warnings.append(f"{len(cfg.modes)} modes given; closed forms need exactly two, closed side omitted")
            return bundle

        bundle.closed_forms = AnalyticService.closed_report(state, torus, cfg.hbar)
        bundle.discrepancies = VerificationService.discrepancies(expectations, bundle.closed_forms, cfg.a, cfg.gamma)
        bundle.warnings.extend(AnalyticService.resonance_scan(state))

        failed = [d.field for d in bundle.discrepancies if not d.passed]
        if failed:
            logger.warning(f"⚠️ Discrepancies outside tolerance: {', '.join(failed)}")
        else:
            logger.info(f"✅ Table reproduced for modes {list(cfg.modes)} at gamma={cfg.gamma}")
        return bundle

    @staticmethod
    def cmd_verify_ur(cfg: RunConfig) -> VerificationBundle:
        torus, knot, psi = VerificationService.build_inputs(cfg)
        expectations = QuantumService.standard_deviations(psi, torus, knot, cfg.kind)
        bundle = VerificationBundle(
            inputs=VerificationService.describe_inputs(cfg, torus, knot, psi), expectations=expectations
        )
        weight = cfg.weight_preset.weight(cfg.gamma)

        for axis in AXES:
            bundle.uncertainty_relations.append(
                QuantumService.robertson_pair(psi, torus, knot, axis, cfg.kind, report=expectations)
            )
        if cfg.thin_commutator:
            if cfg.kind != ParameterizationKind.THIN_TORUS:
                raise InvalidInput("--thin-commutator needs --kind thin")
            for axis in AXES:
                bundle.uncertainty_relations.append(
                    QuantumService.robertson_pair(psi, torus, knot, axis, cfg.kind,
                                                  commutator=Commutator.THIN_CLOSED_FORM, report=expectations)
                )

        bundle.mrl = QuantumService.mrl_inequality(psi, torus, knot, cfg.kind, report=expectations)
        try:
            bundle.combined.append(
                QuantumService.combined_ur(psi, torus, knot, cfg.kind, weight=weight, report=expectations)
            )
        except ZeroMRL:
            bundle.warnings.append("Mean resultant length is zero; combined relation undefined and skipped")

        state = VerificationService.two_mode_state(cfg)
        if state is not None:
            bundle.closed_forms = AnalyticService.closed_report(state, torus, cfg.hbar)
            bundle.warnings.extend(AnalyticService.resonance_scan(state))
            if bundle.closed_forms.choice != ChoiceClass.ZERO_MEAN:
                bundle.uncertainty_relations.extend(AnalyticService.closed_ur_bounds(state, torus, cfg.hbar))
                combined = AnalyticService.closed_mrl_and_combined(state, torus, cfg.hbar, weight)
                bundle.combined.extend(AnalyticService.combined_reports(combined, cfg.hbar * cfg.a))
                bundle.warnings.append("Closed-form z relation reads the printed RHS denominator 's' as 8")

        bundle.warnings.extend(VerificationService.signed_only_warnings(bundle))
        violated = [r.name for r in bundle.gate_reports() if not r.satisfied]
        if violated:
            logger.warning(f"⚠️ Violated relations: {', '.join(violated)}")
        else:
            logger.info(f"✅ All uncertainty relations hold for modes {list(cfg.modes)}")
        return bundle

    @staticmethod
    def signed_only_warnings(bundle: VerificationBundle) -> List[str]:
        """Non-gating reports that fail against |rhs| but hold with the signed rhs"""
        gate = set(map(id, bundle.gate_reports()))
        messages = []
        for r in bundle.uncertainty_relations + bundle.combined:
            if id(r) in gate or r.satisfied or r.signed_margin < 0:
                continue
            messages.append(
                f"{r.name} ({r.source.value}, {r.commutator.value}) holds only in its signed form: "
                f"lhs - signed_rhs = {r.signed_margin:.6g} but lhs < |rhs| = {r.rhs:.6g}"
            )
        return messages

    @staticmethod
    def sweep_row(cfg: RunConfig, gamma: float) -> dict:
        torus, knot, psi = VerificationService.build_inputs(cfg, gamma)
        row = {'gamma': gamma, 'embedding_sup_error': GeometryService.embedding_sup_error(torus, knot)}
        satisfied = True

        for kind in (ParameterizationKind.THIN_TORUS, ParameterizationKind.EXACT):
            report = QuantumService.standard_deviations(psi, torus, knot, kind)
            for axis in AXES:
                ur = QuantumService.robertson_pair(psi, torus, knot, axis, kind, report=report)
                row[f'margin_{axis}_{kind.value}'] = ur.margin
                satisfied = satisfied and ur.satisfied
            if kind == cfg.kind:
                measured = report

        state = VerificationService.two_mode_state(cfg)
        closed = AnalyticService.closed_report(state, torus, cfg.hbar)
        entries = VerificationService.discrepancies(measured, closed, cfg.a, gamma)
        row['max_discrepancy'] = max(d.delta for d in entries)
        row['all_satisfied'] = satisfied
        return row

    @staticmethod
    def cmd_sweep_gamma(cfg: RunConfig, gammas: Sequence[float]) -> pd.DataFrame:
        """One row per gamma, in input order"""
        ok, message = validate_gamma_list(gammas)
        if not ok:
            raise InvalidInput(message)
        if VerificationService.two_mode_state(cfg) is None:
            raise InvalidInput("sweep-gamma compares against closed forms and needs exactly two modes")

        rows = [VerificationService.sweep_row(cfg, gamma) for gamma in gammas]
        logger.info(f"Swept {len(rows)} aspect ratio(s)")
        return pd.DataFrame(rows, columns=SWEEP_COLUMNS)

    @staticmethod
    def random_state(rng: np.random.Generator):
        p, q = RANDOM_KNOTS[int(rng.integers(len(RANDOM_KNOTS)))]
        gamma = RANDOM_GAMMAS[int(rng.integers(len(RANDOM_GAMMAS)))]
        size = int(rng.integers(RANDOM_MIN_MODES, RANDOM_MAX_MODES + 1))
        numbers = rng.choice(np.arange(-RANDOM_MAX_ABS_MODE, RANDOM_MAX_ABS_MODE + 1), size=size, replace=False)
        amplitudes = rng.normal(size=size) + 1j * rng.normal(size=size)
        modes = [(int(n), complex(c)) for n, c in zip(numbers, amplitudes)]
        return p, q, gamma, modes

    @staticmethod
    def cmd_random_property(cfg: RunConfig, trials: int) -> dict:
        """Robertson campaign over seeded random superpositions, Exact kind"""
        ok, message = validate_trials(trials)
        if not ok:
            raise InvalidInput(message)

        rng = np.random.default_rng(cfg.seed)
        kind = ParameterizationKind.EXACT
        min_margin = {URRelation.for_axis(axis).value: None for axis in AXES}
        violations = []

        for trial in range(trials):
            p, q, gamma, modes = VerificationService.random_state(rng)
            torus = GeometryService.new_torus_from_scale(cfg.a, gamma)
            knot = GeometryService.new_knot(p, q)
            psi = QuantumService.make_superposition(p, modes, cfg.hbar)
            report = QuantumService.standard_deviations(psi, torus, knot, kind)

            for axis in AXES:
                ur = QuantumService.robertson_pair(psi, torus, knot, axis, kind, report=report)
                current = min_margin[ur.name]
                min_margin[ur.name] = ur.margin if current is None else min(current, ur.margin)
                if not ur.satisfied:
                    violations.append({
                        'trial': trial,
                        'p': p,
                        'q': q,
                        'gamma': gamma,
                        'modes': [n for n, _ in modes],
                        'relation': ur.name,
                        'margin': ur.margin,
                    })

        if violations:
            logger.warning(f"⚠️ {len(violations)} Robertson violation(s) in {trials} trials")
        else:
            logger.info(f"✅ {trials} random states, no Robertson violations")

        return {
            'trials': trials,
            'seed': cfg.seed,
            'kind': kind.value,
            'margin_threshold': -UR_MARGIN_REL * cfg.hbar * cfg.a,
            'min_margin': min_margin,
            'violation_count': len(violations),
            'violations': violations,
        }
