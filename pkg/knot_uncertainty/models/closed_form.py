from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List

from knot_uncertainty.models.geometry import KnotSpec
from knot_uncertainty.utils.exceptions import DuplicateMode, InvalidInput


class ChoiceClass(str, Enum):
    """Two-mode states with nonzero mean position: |n-k| = p or |n-k| = p+q"""
    CHOICE_I = 'ChoiceI'
    CHOICE_II = 'ChoiceII'
    ZERO_MEAN = 'ZeroMean'


@dataclass(frozen=True)
class TwoModeState:
    """(psi_n + psi_k)/sqrt(2) on a (p, q) knot"""
    n: int
    k: int
    p: int
    q: int

    def __post_init__(self):
        if self.n == self.k:
            raise DuplicateMode(f"Two-mode state needs n != k (n=k={self.n})")
        # coprimality and positivity
        KnotSpec(self.p, self.q)

    @property
    def separation(self) -> int:
        return abs(self.k - self.n)

    @property
    def knot(self) -> KnotSpec:
        return KnotSpec(self.p, self.q)

    def to_dict(self):
        return {'n': self.n, 'k': self.k, 'p': self.p, 'q': self.q}


@dataclass
class ClosedFormReport:
    """Closed-form moments, sigmas and UR bounds with the delta that produced each"""
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
    choice: ChoiceClass
    ur_rhs: Dict[str, float] = field(default_factory=dict)
    provenance: Dict[str, str] = field(default_factory=dict)

    MOMENT_FIELDS = (
        'mean_x', 'mean_y', 'mean_z', 'mean_x2', 'mean_y2', 'mean_z2',
        'mean_zx', 'mean_zy', 'mean_Lz', 'mean_Lz2',
        'sigma_x', 'sigma_y', 'sigma_z', 'sigma_Lz',
    )

    def sigmas(self) -> Dict[str, float]:
        return {
            'sigma_x': self.sigma_x,
            'sigma_y': self.sigma_y,
            'sigma_z': self.sigma_z,
            'sigma_Lz': self.sigma_Lz,
        }

    def to_dict(self):
        data = {name: getattr(self, name) for name in self.MOMENT_FIELDS}
        data['choice'] = self.choice.value
        data['ur_rhs'] = dict(self.ur_rhs)
        data['provenance'] = dict(self.provenance)
        return data


@dataclass(frozen=True)
class CircleSpec:
    """Particle on a circle of radius A in the two-mode state (n, k)"""
    A: float
    n: int
    k: int

    def __post_init__(self):
        if not self.A > 0:
            raise InvalidInput(f"Circle radius must be positive (A={self.A})")
        if self.n == self.k:
            raise DuplicateMode(f"Two-mode state needs n != k (n=k={self.n})")


@dataclass
class CircleReport:
    mean_X: float
    mean_Y: float
    mean_X2: float
    mean_Y2: float
    mean_Lz: float
    mean_Lz2: float
    sigma_X: float
    sigma_Y: float
    sigma_Lz: float
    mrl: float
    relations: List = field(default_factory=list)


@dataclass
class CombinedClosedForm:
    R: float
    lhs: float
    printed_rhs: float
    rss_rhs: float
    weight: float
