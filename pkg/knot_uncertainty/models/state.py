import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from knot_uncertainty.utils.constants import (
    QUADRATURE_MAX_DOUBLINGS,
    QUADRATURE_MIN_POINTS,
    QUADRATURE_POINTS_PER_P,
    QUADRATURE_TOL,
)
from knot_uncertainty.utils.exceptions import DuplicateMode, InvalidInput, NonPositive, ZeroState
from knot_uncertainty.utils.validators import validate_distinct_modes


@dataclass(frozen=True)
class Superposition:
    """Normalized superposition of Lz eigenfunctions e^{i n phi / p} / sqrt(2 p pi)"""
    p: int
    modes: Tuple[Tuple[int, complex], ...]
    hbar: float = 1.0

    @classmethod
    def build(cls, p: int, modes: Sequence[Tuple[int, complex]], hbar: float = 1.0) -> 'Superposition':
        if p < 1:
            raise NonPositive(f"p must be >= 1 (p={p})")
        if not modes:
            raise ZeroState("A superposition needs at least one mode")

        numbers = [int(n) for n, _ in modes]
        ok, message = validate_distinct_modes(numbers)
        if not ok:
            raise DuplicateMode(message)

        amplitudes = np.array([complex(c) for _, c in modes], dtype=complex)
        norm = math.sqrt(float(np.sum(np.abs(amplitudes) ** 2)))
        if norm == 0.0:
            raise ZeroState("All amplitudes are zero")
        amplitudes = amplitudes / norm

        return cls(
            p=int(p),
            modes=tuple((n, complex(c)) for n, c in zip(numbers, amplitudes)),
            hbar=float(hbar),
        )

    @property
    def mode_numbers(self) -> np.ndarray:
        return np.array([n for n, _ in self.modes], dtype=float)

    @property
    def amplitudes(self) -> np.ndarray:
        return np.array([c for _, c in self.modes], dtype=complex)

    @property
    def period(self) -> float:
        return 2.0 * math.pi * self.p

    @property
    def max_abs_mode(self) -> int:
        return max(abs(n) for n, _ in self.modes)

    def evaluate(self, phi) -> np.ndarray:
        """psi(phi); accepts scalars or arrays"""
        phi = np.asarray(phi, dtype=float)
        phases = np.exp(1j * np.multiply.outer(phi, self.mode_numbers / self.p))
        return phases @ self.amplitudes / math.sqrt(self.period)

    def density(self, phi) -> np.ndarray:
        return np.abs(self.evaluate(phi)) ** 2

    def lz_eigenvalues(self) -> np.ndarray:
        return self.mode_numbers * self.hbar / self.p

    def lz_variance(self) -> float:
        weights = np.abs(self.amplitudes) ** 2
        eigenvalues = self.lz_eigenvalues()
        mean = float(np.sum(weights * eigenvalues))
        return max(float(np.sum(weights * eigenvalues ** 2)) - mean * mean, 0.0)

    def to_dict(self):
        return {
            'p': self.p,
            'hbar': self.hbar,
            'modes': [
                {'n': n, 're': c.real, 'im': c.imag} for n, c in self.modes
            ],
        }


@dataclass(frozen=True)
class QuadratureConfig:
    """Uniform-grid rectangle rule with grid doubling"""
    n_start: int = QUADRATURE_POINTS_PER_P
    max_doublings: int = QUADRATURE_MAX_DOUBLINGS
    tol: float = QUADRATURE_TOL

    def __post_init__(self):
        if self.n_start < QUADRATURE_MIN_POINTS:
            raise InvalidInput(f"n_start must be >= {QUADRATURE_MIN_POINTS} (got {self.n_start})")
        if not self.tol > 0:
            raise InvalidInput(f"tol must be positive (got {self.tol})")
        if self.max_doublings < 1:
            raise InvalidInput(f"max_doublings must be >= 1 (got {self.max_doublings})")

    @classmethod
    def for_knot(cls, p: int) -> 'QuadratureConfig':
        return cls(n_start=QUADRATURE_POINTS_PER_P * p)
