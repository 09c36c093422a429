from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from knot_uncertainty.models.geometry import ParameterizationKind
from knot_uncertainty.utils.constants import UR_MARGIN_REL


class URRelation(str, Enum):
    X_LZ = 'X_Lz'
    Y_LZ = 'Y_Lz'
    Z_LZ = 'Z_Lz'
    COMBINED = 'Combined'

    @classmethod
    def for_axis(cls, axis: str) -> 'URRelation':
        return {'x': cls.X_LZ, 'y': cls.Y_LZ, 'z': cls.Z_LZ}[axis]


class URSource(str, Enum):
    QUADRATURE = 'quadrature'
    CLOSED_FORM = 'closed_form'


class Commutator(str, Enum):
    """Which [coord, Lz] the right-hand side is built from"""
    TANGENT = 'tangent'
    THIN_CLOSED_FORM = 'thin_closed_form'
    PRINTED = 'printed'
    PRINTED_RSS = 'printed_rss'


class WeightPreset(str, Enum):
    """z-component weight of the MRL and the combined relation"""
    MRL_GAMMA = 'mrl-gamma'
    INVERSE_GAMMA = 'inverse-gamma'

    def weight(self, gamma: float) -> float:
        if self == WeightPreset.MRL_GAMMA:
            return 1.0 + gamma
        return 1.0 + 1.0 / gamma


@dataclass
class ExpectationReport:
    mean_x: float
    mean_y: float
    mean_z: float
    mean_x2: float
    mean_y2: float
    mean_z2: float
    mean_zx: float
    mean_zy: float
    mean_Lz: float
    mean_Lz2: float
    sigma_x: float
    sigma_y: float
    sigma_z: float
    sigma_Lz: float
    kind: ParameterizationKind

    def to_dict(self):
        data = asdict(self)
        data['kind'] = self.kind.value
        return data

    def sigmas(self) -> Dict[str, float]:
        return {
            'sigma_x': self.sigma_x,
            'sigma_y': self.sigma_y,
            'sigma_z': self.sigma_z,
            'sigma_Lz': self.sigma_Lz,
        }


@dataclass
class URReport:
    """One uncertainty relation: lhs = sigma*sigma, rhs = |signed_rhs|"""
    relation: URRelation
    lhs: float
    rhs: float
    signed_rhs: float
    satisfied: bool
    source: URSource
    commutator: Commutator = Commutator.TANGENT
    weight: Optional[float] = None

    @property
    def margin(self) -> float:
        return self.lhs - self.rhs

    @property
    def signed_margin(self) -> float:
        return self.lhs - self.signed_rhs

    @property
    def name(self) -> str:
        return self.relation.value

    @classmethod
    def build(cls, relation: URRelation, lhs: float, signed_rhs: float, source: URSource,
              hbar_a: float, commutator: Commutator = Commutator.TANGENT,
              weight: Optional[float] = None) -> 'URReport':
        rhs = abs(signed_rhs)
        scale = max(abs(lhs), rhs, abs(hbar_a))
        return cls(
            relation=relation,
            lhs=float(lhs),
            rhs=float(rhs),
            signed_rhs=float(signed_rhs),
            satisfied=bool(lhs - rhs >= -UR_MARGIN_REL * scale),
            source=source,
            commutator=commutator,
            weight=weight,
        )

    def to_dict(self):
        return {
            'name': self.name,
            'source': self.source.value,
            'commutator': self.commutator.value,
            'lhs': self.lhs,
            'rhs': self.rhs,
            'signed_rhs': self.signed_rhs,
            'margin': self.margin,
            'signed_margin': self.signed_margin,
            'satisfied': self.satisfied,
            'weight': self.weight,
        }


@dataclass
class MRLCheck:
    """Mean resultant length against a*sqrt(1 + 2/gamma)"""
    R: float
    weight: float
    bound: float
    printed_bound: float
    satisfied: bool

    def to_dict(self):
        return asdict(self)


@dataclass
class Discrepancy:
    field: str
    closed: float
    quadrature: float
    delta: float
    tolerance: float
    passed: bool
    criterion: str = 'abs_difference'

    def to_dict(self):
        return asdict(self)


@dataclass
class RunConfig:
    p: int = 2
    q: int = 3
    gamma: float = 10.0
    a: float = 1.0
    hbar: float = 1.0
    modes: tuple = (0, 2)
    kind: ParameterizationKind = ParameterizationKind.THIN_TORUS
    weight_preset: WeightPreset = WeightPreset.INVERSE_GAMMA
    seed: int = 42
    output_format: str = 'text'
    thin_commutator: bool = False

    def to_dict(self):
        return {
            'p': self.p,
            'q': self.q,
            'gamma': self.gamma,
            'a': self.a,
            'hbar': self.hbar,
            'modes': list(self.modes),
            'kind': self.kind.value,
            'weight_preset': self.weight_preset.value,
            'seed': self.seed,
            'output_format': self.output_format,
            'thin_commutator': self.thin_commutator,
        }


@dataclass
class VerificationBundle:
    inputs: dict
    expectations: Optional[ExpectationReport] = None
    closed_forms: Optional[object] = None
    uncertainty_relations: List[URReport] = field(default_factory=list)
    mrl: Optional[MRLCheck] = None
    combined: List[URReport] = field(default_factory=list)
    discrepancies: List[Discrepancy] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    @property
    def sigmas(self) -> Dict[str, Dict[str, float]]:
        data = {}
        if self.expectations is not None:
            data['quadrature'] = self.expectations.sigmas()
        if self.closed_forms is not None:
            data['closed_form'] = self.closed_forms.sigmas()
        return data

    def gate_reports(self) -> List[URReport]:
        """Reports whose violation fails the run: quadrature with the true commutator"""
        return [
            r for r in self.uncertainty_relations + self.combined
            if r.source == URSource.QUADRATURE and r.commutator == Commutator.TANGENT
        ]

    def all_checks_pass(self) -> bool:
        if not all(r.satisfied for r in self.gate_reports()):
            return False
        if self.mrl is not None and not self.mrl.satisfied:
            return False
        return all(d.passed for d in self.discrepancies)

    def to_dict(self):
        return {
            'inputs': self.inputs,
            'expectations': self.expectations.to_dict() if self.expectations else None,
            'closed_forms': self.closed_forms.to_dict() if self.closed_forms else None,
            'sigmas': self.sigmas,
            'uncertainty_relations': [r.to_dict() for r in self.uncertainty_relations],
            'mrl': self.mrl.to_dict() if self.mrl else None,
            'combined': [r.to_dict() for r in self.combined],
            'discrepancies': [d.to_dict() for d in self.discrepancies],
            'warnings': list(self.warnings),
        }
