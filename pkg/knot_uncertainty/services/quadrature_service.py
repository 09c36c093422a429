from typing import Callable

import numpy as np

from knot_uncertainty.models.state import QuadratureConfig
from knot_uncertainty.utils.exceptions import NoConvergence
from knot_uncertainty.utils.logger import get_logger

logger = get_logger(__name__)


class QuadratureService:
    """Rectangle rule on one full period of a periodic integrand.

    For a trigonometric polynomial the rule is exact once the number of
    points exceeds the largest frequency (in units of 2*pi/period); smooth
    periodic integrands converge geometrically.
    """

    @staticmethod
    def rectangle_rule(f: Callable, period: float, n_points: int) -> complex:
        phi = np.arange(n_points) * (period / n_points)
        values = np.asarray(f(phi))
        # fixed-order reduction keeps results bit-reproducible
        return complex(np.sum(values) * (period / n_points))

    @staticmethod
    def starting_points(cfg: QuadratureConfig, bandwidth: int = 0) -> int:
        """First grid size: n_start, raised to the power of two above the bandwidth"""
        if bandwidth < cfg.n_start:
            return cfg.n_start
        return 1 << int(bandwidth).bit_length()

    @staticmethod
    def quadrature_integrate(f: Callable, period: float, cfg: QuadratureConfig, bandwidth: int = 0) -> complex:
        """Grid doubling until two successive grids agree, starting above `bandwidth`"""
        n_points = QuadratureService.starting_points(cfg, bandwidth)
        if n_points > cfg.n_start:
            logger.debug(f"Grid raised from {cfg.n_start} to {n_points} for bandwidth {bandwidth}")
        previous = QuadratureService.rectangle_rule(f, period, n_points)

        for doubling in range(1, cfg.max_doublings + 1):
            n_points *= 2
            phi = np.arange(n_points) * (period / n_points)
            values = np.asarray(f(phi))
            current = complex(np.sum(values) * (period / n_points))
            scale = max(abs(current), float(np.sum(np.abs(values))) * period / n_points)

            if abs(current - previous) <= cfg.tol * scale:
                logger.debug(f"Quadrature converged after {doubling} doubling(s), N={n_points}")
                return current
            previous = current

        raise NoConvergence(
            f"Rectangle rule did not reach tol={cfg.tol} within {cfg.max_doublings} doublings "
            f"(N={n_points})"
        )
