import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Optional, Union

import numpy as np

from knot_uncertainty.utils.exceptions import DegenerateTorus, NonPositive, NotCoprime
from knot_uncertainty.utils.validators import (
    validate_coprime,
    validate_positive_integers,
    validate_radii,
    validate_scale,
)

Angle = Union[float, np.ndarray]


class ParameterizationKind(str, Enum):
    """Which embedding of the knot curve an operation uses"""
    EXACT = 'exact'
    THIN_TORUS = 'thin'


class Point3(NamedTuple):
    """Cartesian point (or arrays of points when phi is an array)"""
    x: Angle
    y: Angle
    z: Angle


@dataclass(frozen=True)
class TorusSpec:
    """Torus surface eta = eta0 in toroidal coordinates.

    gamma = cosh(eta0) = R/d, beta = sinh(eta0), a^2 = R^2 - d^2.
    """
    a: float
    gamma: float
    beta: float
    R: Optional[float] = None
    d: Optional[float] = None

    @classmethod
    def from_radii(cls, R: float, d: float) -> 'TorusSpec':
        ok, message = validate_radii(R, d)
        if not ok:
            raise DegenerateTorus(message)
        gamma = R / d
        return cls(
            a=math.sqrt(R * R - d * d),
            gamma=gamma,
            beta=math.sqrt(gamma * gamma - 1.0),
            R=float(R),
            d=float(d),
        )

    @classmethod
    def from_scale(cls, a: float, gamma: float) -> 'TorusSpec':
        ok, message = validate_scale(a, gamma)
        if not ok:
            raise DegenerateTorus(message)
        return cls(a=float(a), gamma=float(gamma), beta=math.sqrt(gamma * gamma - 1.0))

    @property
    def inverse_gamma(self) -> float:
        return 1.0 / self.gamma

    @property
    def major_radius(self) -> float:
        return self.R if self.R is not None else self.a * self.gamma / self.beta

    @property
    def minor_radius(self) -> float:
        return self.d if self.d is not None else self.a / self.beta

    def to_dict(self):
        return {
            'a': self.a,
            'gamma': self.gamma,
            'beta': self.beta,
            'R': self.major_radius,
            'd': self.minor_radius,
        }


@dataclass(frozen=True)
class KnotSpec:
    """(p, q) torus knot; the winding number alpha = -q/p is kept as integers"""
    p: int
    q: int
    alpha: tuple = field(init=False)
    nontrivial: bool = field(init=False)

    def __post_init__(self):
        ok, message = validate_positive_integers(self.p, self.q)
        if not ok:
            raise NonPositive(message)
        ok, message = validate_coprime(self.p, self.q)
        if not ok:
            raise NotCoprime(message)
        object.__setattr__(self, 'alpha', (-self.q, self.p))
        object.__setattr__(self, 'nontrivial', self.p >= 2 and self.q >= 2)

    @property
    def alpha_fraction(self) -> Fraction:
        return Fraction(*self.alpha)

    @property
    def alpha_value(self) -> float:
        return self.alpha[0] / self.alpha[1]

    @property
    def period(self) -> float:
        return 2.0 * math.pi * self.p

    def swapped(self) -> 'KnotSpec':
        """The (q, p) knot: topologically equivalent, geometrically different"""
        return KnotSpec(self.q, self.p)

    def to_dict(self):
        return {
            'p': self.p,
            'q': self.q,
            'alpha': f'{self.alpha[0]}/{self.alpha[1]}',
            'nontrivial': self.nontrivial,
        }
