import itertools
import math
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from knot_uncertainty.models.closed_form import (
    ChoiceClass,
    CircleReport,
    CircleSpec,
    ClosedFormReport,
    CombinedClosedForm,
    TwoModeState,
)
from knot_uncertainty.models.geometry import TorusSpec
from knot_uncertainty.models.reports import Commutator, URRelation, URReport, URSource
from knot_uncertainty.utils.exceptions import UnsupportedChoice
from knot_uncertainty.utils.logger import get_logger

logger = get_logger(__name__)

Rational = Union[int, Fraction]

SQRT2 = math.sqrt(2.0)

# Thin-torus harmonics as ((p coefficient, q coefficient), order in 1/gamma);
# frequency in units of 1/p is cp*p + cq*q
_EVEN_MOMENTS = {
    'x': ('x',),
    'x2': ('x', 'x'),
    'y2': ('y', 'y'),
    'z2': ('z', 'z'),
    'zy': ('z', 'y'),
}
_PLANAR_HARMONICS = (((1, 0), 0), ((1, 1), 1), ((1, -1), 1))
_HARMONICS = {
    'x': _PLANAR_HARMONICS,
    'y': _PLANAR_HARMONICS,
    'z': (((0, 1), 1),),
}
# highest 1/gamma order each printed closed form keeps
_KEPT_ORDER = {'x': 1, 'x2': 0, 'y2': 2, 'z2': 2, 'zy': 2}
# terms of this order and above sit inside the discrepancy tolerance
_ABSORBED_ORDER = 2


def _harmonics(axis: str):
    for (cp, cq), order in _HARMONICS[axis]:
        yield (cp, cq), order
        yield (-cp, -cq), order


def _combinations(name: str):
    """(symbolic frequency, order) of every product term of a moment"""
    for terms in itertools.product(*(list(_harmonics(axis)) for axis in _EVEN_MOMENTS[name])):
        form = (sum(t[0][0] for t in terms), sum(t[0][1] for t in terms))
        yield form, sum(t[1] for t in terms)


class AnalyticService:
    """Closed-form selection-rule results for the two-mode state"""

    @staticmethod
    def kron(cond_lhs: Rational, cond_rhs: Rational) -> int:
        return 1 if Fraction(cond_lhs) == Fraction(cond_rhs) else 0

    @staticmethod
    def classify(s: TwoModeState) -> ChoiceClass:
        if AnalyticService.kron(s.separation, s.p):
            return ChoiceClass.CHOICE_I
        if AnalyticService.kron(s.separation, s.p + s.q):
            return ChoiceClass.CHOICE_II
        return ChoiceClass.ZERO_MEAN

    # ------------------------------------------------------------------
    # Moments
    # ------------------------------------------------------------------

    @staticmethod
    def _first_moments(s: TwoModeState, a: float, inv_gamma: float):
        delta_p = AnalyticService.kron(s.separation, s.p)
        delta_pq = AnalyticService.kron(s.separation, s.p + s.q)
        mean_x = 0.5 * a * delta_p + 0.25 * a * inv_gamma * delta_pq

        if delta_p:
            source = 'a/2 from delta(|k-n|, p)'
        elif delta_pq:
            source = 'a/(4 gamma) from delta(|k-n|, p+q)'
        else:
            source = 'no delta fired'
        provenance = {
            'mean_x': source,
            'mean_y': 'odd integrand, identically 0',
            'mean_z': 'odd integrand, identically 0',
        }
        return (mean_x, 0.0, 0.0), provenance

    @staticmethod
    def closed_first_moments(s: TwoModeState, t: TorusSpec) -> Tuple[float, float, float]:
        values, _ = AnalyticService._first_moments(s, t.a, t.inverse_gamma)
        return values

    @staticmethod
    def zy_delta_expression(s: TwoModeState, t: TorusSpec) -> float:
        """Eight-term delta expression for <zy>, each condition in exact rationals"""
        return AnalyticService._zy_delta_expression(s, t.a, t.inverse_gamma)

    @staticmethod
    def _zy_delta_expression(s: TwoModeState, a: float, inv_gamma: float) -> float:
        kron = AnalyticService.kron
        alpha = Fraction(-s.q, s.p)
        r = Fraction(s.k - s.n, s.p)
        a2 = a * a
        return (
            a2 * inv_gamma / 2 * kron(alpha, 1)
            + a2 * inv_gamma ** 2 / 4 * kron(1 - alpha, alpha)
            + a2 * inv_gamma / 4 * (kron(alpha, 1 + r) + kron(alpha, 1 - r))
            + a2 * inv_gamma ** 2 / 8 * (
                kron(alpha, 1 + alpha + r)
                + kron(alpha, 1 + alpha - r)
                + kron(alpha, 1 - alpha + r)
                + kron(alpha, 1 - alpha - r)
            )
        )

    @staticmethod
    def _second_moments(s: TwoModeState, a: float, inv_gamma: float):
        a2 = a * a
        choice = AnalyticService.classify(s)
        if choice == ChoiceClass.CHOICE_I:
            mean_zy = a2 * inv_gamma ** 2 / 8
            zy_source = 'choice I: a^2/(8 gamma^2) as printed'
        elif choice == ChoiceClass.CHOICE_II:
            mean_zy = a2 * inv_gamma / 4
            zy_source = 'choice II: a^2/(4 gamma) from delta(|k-n|, p+q)'
        else:
            mean_zy = AnalyticService._zy_delta_expression(s, a, inv_gamma)
            zy_source = 'eight-term delta expression'

        values = (
            a2 / 2,
            a2 / 2 + a2 * inv_gamma ** 2 / 4,
            a2 * inv_gamma ** 2 / 2,
            0.0,
            mean_zy,
        )
        provenance = {
            'mean_x2': 'choice independent: a^2/2',
            'mean_y2': 'choice independent: a^2/2 + a^2/(4 gamma^2)',
            'mean_z2': 'choice independent: a^2/(2 gamma^2)',
            'mean_zx': 'odd integrand, identically 0',
            'mean_zy': zy_source,
        }
        return values, provenance

    @staticmethod
    def closed_second_moments(s: TwoModeState, t: TorusSpec) -> Tuple[float, float, float, float, float]:
        values, _ = AnalyticService._second_moments(s, t.a, t.inverse_gamma)
        return values

    @staticmethod
    def closed_lz_moments(s: TwoModeState, hbar: float = 1.0) -> Tuple[float, float, float]:
        """(<Lz>, <Lz^2>, sigma_Lz) by mode algebra"""
        mean_lz = (s.n + s.k) * hbar / (2 * s.p)
        mean_lz2 = (s.n ** 2 + s.k ** 2) * hbar ** 2 / (2 * s.p ** 2)
        sigma_lz = s.separation * hbar / (2 * s.p)
        return mean_lz, mean_lz2, sigma_lz

    @staticmethod
    def _sigmas(s: TwoModeState, a: float, inv_gamma: float, hbar: float):
        choice = AnalyticService.classify(s)
        sigma_z = a * inv_gamma / SQRT2
        if choice == ChoiceClass.CHOICE_I:
            return a / 2, a / SQRT2, sigma_z, hbar / 2
        if choice == ChoiceClass.CHOICE_II:
            return a / SQRT2, a / SQRT2, sigma_z, hbar * (s.p + s.q) / (2 * s.p)

        (x2, y2, z2, _, _), _ = AnalyticService._second_moments(s, a, inv_gamma)
        _, _, sigma_lz = AnalyticService.closed_lz_moments(s, hbar)
        return math.sqrt(x2), math.sqrt(y2), math.sqrt(z2), sigma_lz

    @staticmethod
    def closed_sigmas(s: TwoModeState, t: TorusSpec, hbar: float = 1.0) -> Tuple[float, float, float, float]:
        return AnalyticService._sigmas(s, t.a, t.inverse_gamma, hbar)

    # ------------------------------------------------------------------
    # Uncertainty relations
    # ------------------------------------------------------------------

    @staticmethod
    def _require_choice(s: TwoModeState) -> ChoiceClass:
        choice = AnalyticService.classify(s)
        if choice == ChoiceClass.ZERO_MEAN:
            raise UnsupportedChoice(
                f"Closed-form UR bounds exist only for |n-k| in {{p, p+q}} (|n-k|={s.separation})"
            )
        return choice

    @staticmethod
    def closed_ur_bounds(s: TwoModeState, t: TorusSpec, hbar: float = 1.0) -> List[URReport]:
        """Printed LHS/RHS of the three relations; rhs is |printed|, signed_rhs keeps the sign"""
        choice = AnalyticService._require_choice(s)
        a, gamma = t.a, t.gamma
        ratio = s.q / s.p
        sigma_x, _, _, sigma_lz = AnalyticService.closed_sigmas(s, t, hbar)

        if choice == ChoiceClass.CHOICE_I:
            y_pair = (a * hbar / (2 * SQRT2), a * hbar / 4 * (1 + s.q / (4 * s.p * gamma ** 2)))
            z_lhs = a * hbar / (2 * SQRT2 * gamma)
        else:
            y_pair = (a * hbar * (1 + ratio) / (2 * SQRT2), a * hbar * (1 + ratio) / (8 * gamma))
            z_lhs = a * hbar * (1 + ratio) / (2 * SQRT2 * gamma)
        # printed denominator "s" read as 8
        z_pair = (z_lhs, -3 * a * hbar * s.q / (8 * gamma * s.p))

        pairs = {
            URRelation.X_LZ: (sigma_x * sigma_lz, 0.0),
            URRelation.Y_LZ: y_pair,
            URRelation.Z_LZ: z_pair,
        }
        return [
            URReport.build(relation, lhs, signed_rhs, URSource.CLOSED_FORM,
                           hbar_a=hbar * a, commutator=Commutator.PRINTED)
            for relation, (lhs, signed_rhs) in pairs.items()
        ]

    @staticmethod
    def closed_mrl_and_combined(s: TwoModeState, t: TorusSpec, hbar: float = 1.0,
                                weight: float = None) -> CombinedClosedForm:
        choice = AnalyticService._require_choice(s)
        weight = 1.0 + t.inverse_gamma if weight is None else weight
        mean_x, mean_y, mean_z = AnalyticService.closed_first_moments(s, t)
        R = math.sqrt(mean_x ** 2 + mean_y ** 2 + weight * mean_z ** 2)

        sigma_x, sigma_y, sigma_z, sigma_lz = AnalyticService.closed_sigmas(s, t, hbar)
        lhs = math.sqrt(sigma_x ** 2 + sigma_y ** 2 + weight * sigma_z ** 2) / R * sigma_lz

        if choice == ChoiceClass.CHOICE_I:
            printed_rhs = hbar / 2
        else:
            ratio = s.q / s.p
            printed_rhs = hbar / 2 * (1 + ratio + (3 * ratio) ** 2)

        rx, ry, rz = (r.rhs for r in AnalyticService.closed_ur_bounds(s, t, hbar))
        rss_rhs = math.sqrt(rx ** 2 + ry ** 2 + weight * rz ** 2) / R

        return CombinedClosedForm(R=R, lhs=lhs, printed_rhs=printed_rhs, rss_rhs=rss_rhs, weight=weight)

    @staticmethod
    def combined_reports(combined: CombinedClosedForm, hbar_a: float) -> List[URReport]:
        return [
            URReport.build(URRelation.COMBINED, combined.lhs, combined.printed_rhs, URSource.CLOSED_FORM,
                           hbar_a=hbar_a, commutator=Commutator.PRINTED, weight=combined.weight),
            URReport.build(URRelation.COMBINED, combined.lhs, combined.rss_rhs, URSource.CLOSED_FORM,
                           hbar_a=hbar_a, commutator=Commutator.PRINTED_RSS, weight=combined.weight),
        ]

    # ------------------------------------------------------------------
    # Reports
    # ------------------------------------------------------------------

    @staticmethod
    def _report(s: TwoModeState, a: float, inv_gamma: float, hbar: float) -> ClosedFormReport:
        (mx, my, mz), first_src = AnalyticService._first_moments(s, a, inv_gamma)
        (x2, y2, z2, zx, zy), second_src = AnalyticService._second_moments(s, a, inv_gamma)
        mean_lz, mean_lz2, _ = AnalyticService.closed_lz_moments(s, hbar)
        sigma_x, sigma_y, sigma_z, sigma_lz = AnalyticService._sigmas(s, a, inv_gamma, hbar)
        choice = AnalyticService.classify(s)

        provenance = {**first_src, **second_src}
        provenance['mean_Lz'] = '(n+k) hbar / 2p'
        provenance['mean_Lz2'] = '(n^2+k^2) hbar^2 / 2p^2'
        provenance['sigma_Lz'] = '|n-k| hbar / 2p'
        provenance['sigmas'] = f'{choice.value} row'

        return ClosedFormReport(
            mean_x=mx, mean_y=my, mean_z=mz,
            mean_x2=x2, mean_y2=y2, mean_z2=z2, mean_zx=zx, mean_zy=zy,
            mean_Lz=mean_lz, mean_Lz2=mean_lz2,
            sigma_x=sigma_x, sigma_y=sigma_y, sigma_z=sigma_z, sigma_Lz=sigma_lz,
            choice=choice,
            provenance=provenance,
        )

    @staticmethod
    def closed_report(s: TwoModeState, t: TorusSpec, hbar: float = 1.0) -> ClosedFormReport:
        report = AnalyticService._report(s, t.a, t.inverse_gamma, hbar)
        if report.choice != ChoiceClass.ZERO_MEAN:
            report.ur_rhs = {
                r.name: r.rhs for r in AnalyticService.closed_ur_bounds(s, t, hbar)
            }
            report.provenance['ur_z'] = "printed RHS denominator 's' read as 8"
        return report

    @staticmethod
    def circle_limit(s: TwoModeState, a: float, hbar: float = 1.0) -> ClosedFormReport:
        """Knot closed forms with 1/gamma = 0"""
        return AnalyticService._report(s, a, 0.0, hbar)

    @staticmethod
    def circle_baseline(c: CircleSpec, hbar: float = 1.0) -> CircleReport:
        """Particle on a circle: X = A cos(phi), Y = A sin(phi), modes e^{i n phi}"""
        kron = AnalyticService.kron
        d = abs(c.k - c.n)
        A = c.A
        mean_X = 0.5 * A * kron(d, 1)
        mean_Y = 0.0
        mean_X2 = A * A / 2 + A * A / 4 * kron(d, 2)
        mean_Y2 = A * A / 2 - A * A / 4 * kron(d, 2)
        mean_lz = (c.n + c.k) * hbar / 2
        mean_lz2 = (c.n ** 2 + c.k ** 2) * hbar ** 2 / 2
        sigma_X = math.sqrt(mean_X2 - mean_X ** 2)
        sigma_Y = math.sqrt(mean_Y2 - mean_Y ** 2)
        sigma_lz = d * hbar / 2

        # [X, Lz] = -i hbar Y, [Y, Lz] = i hbar X
        relations = [
            URReport.build(URRelation.X_LZ, sigma_X * sigma_lz, -0.5 * hbar * mean_Y,
                           URSource.CLOSED_FORM, hbar_a=hbar * A),
            URReport.build(URRelation.Y_LZ, sigma_Y * sigma_lz, 0.5 * hbar * mean_X,
                           URSource.CLOSED_FORM, hbar_a=hbar * A),
        ]
        return CircleReport(
            mean_X=mean_X, mean_Y=mean_Y, mean_X2=mean_X2, mean_Y2=mean_Y2,
            mean_Lz=mean_lz, mean_Lz2=mean_lz2,
            sigma_X=sigma_X, sigma_Y=sigma_Y, sigma_Lz=sigma_lz,
            mrl=math.hypot(mean_X, mean_Y),
            relations=relations,
        )

    # ------------------------------------------------------------------
    # Resonances
    # ------------------------------------------------------------------

    @staticmethod
    def moment_support(name: str, p: int, q: int) -> Dict[int, int]:
        """frequency (units of 1/p) -> lowest 1/gamma order at which it appears"""
        support = {}
        for (cp, cq), order in _combinations(name):
            freq = cp * p + cq * q
            support[freq] = min(support.get(freq, order), order)
        return support

    @staticmethod
    def expected_forms(name: str, s: TwoModeState) -> set:
        """Symbolic frequencies at |n-k| that the printed closed form was derived from"""
        if name not in ('x', 'zy'):
            return set()
        if s.separation == s.p:
            return {(1, 0), (-1, 0)}
        if s.separation == s.p + s.q:
            return {(1, 1), (-1, -1)}
        return set()

    @staticmethod
    def resonance_scan(s: TwoModeState) -> List[str]:
        """Terms the printed closed forms do not carry.

        A product term counts when its frequency hits |n-k| through a symbolic
        frequency other than the one the closed form used, or when it is a
        constant only because of this (p, q), as p-q = 0 for the (1, 1) knot.
        Coefficient cancellations are not checked, so a flagged term may vanish.
        """
        d = s.separation
        warnings = []
        for name in _EVEN_MOMENTS:
            threshold = max(_KEPT_ORDER[name], _ABSORBED_ORDER - 1)
            expected = AnalyticService.expected_forms(name, s)
            extra, constant = [], []
            for form, order in _combinations(name):
                freq = form[0] * s.p + form[1] * s.q
                if abs(freq) == d and form not in expected:
                    extra.append(order)
                elif freq == 0 and form != (0, 0):
                    constant.append(order)

            messages = []
            if extra and min(extra) <= threshold:
                messages.append(
                    f"<{name}> has an extra resonance at |n-k|={d} (order 1/gamma^{min(extra)}) "
                    f"not included in the closed form for (p,q)=({s.p},{s.q})"
                )
            if constant and min(constant) <= threshold:
                messages.append(
                    f"<{name}> has an accidental constant term (order 1/gamma^{min(constant)}) "
                    f"not included in the closed form for (p,q)=({s.p},{s.q})"
                )
            for message in messages:
                logger.warning(f"⚠️ {message}")
            warnings.extend(messages)
        return warnings
