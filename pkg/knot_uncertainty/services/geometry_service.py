import numpy as np

from knot_uncertainty.models.geometry import (
    Angle,
    KnotSpec,
    ParameterizationKind,
    Point3,
    TorusSpec,
)
from knot_uncertainty.utils.constants import EMBED_GRID_POINTS
from knot_uncertainty.utils.exceptions import InvalidInput
from knot_uncertainty.utils.logger import get_logger

logger = get_logger(__name__)

AXES = ('x', 'y', 'z')


class GeometryService:
    """Torus knot curve: exact and thin-torus embeddings, tangents, commutators"""

    @staticmethod
    def new_torus_from_radii(R: float, d: float) -> TorusSpec:
        return TorusSpec.from_radii(R, d)

    @staticmethod
    def new_torus_from_scale(a: float, gamma: float) -> TorusSpec:
        return TorusSpec.from_scale(a, gamma)

    @staticmethod
    def new_knot(p: int, q: int) -> KnotSpec:
        return KnotSpec(p, q)

    @staticmethod
    def canonical_phi(k: KnotSpec, phi: Angle) -> Angle:
        """Reduce phi to [0, 2p*pi)"""
        return np.mod(phi, k.period)

    @staticmethod
    def embed_exact(t: TorusSpec, k: KnotSpec, phi: Angle) -> Point3:
        phi = GeometryService.canonical_phi(k, phi)
        theta = k.alpha_value * phi
        denom = t.gamma - np.cos(theta)
        return Point3(
            t.a * t.beta * np.cos(phi) / denom,
            t.a * t.beta * np.sin(phi) / denom,
            t.a * np.sin(theta) / denom,
        )

    @staticmethod
    def embed_thin(t: TorusSpec, k: KnotSpec, phi: Angle) -> Point3:
        phi = GeometryService.canonical_phi(k, phi)
        theta = k.alpha_value * phi
        envelope = 1.0 + np.cos(theta) / t.gamma
        return Point3(
            t.a * np.cos(phi) * envelope,
            t.a * np.sin(phi) * envelope,
            t.a * np.sin(theta) / t.gamma,
        )

    @staticmethod
    def embed(t: TorusSpec, k: KnotSpec, phi: Angle, kind: ParameterizationKind) -> Point3:
        if kind == ParameterizationKind.EXACT:
            return GeometryService.embed_exact(t, k, phi)
        return GeometryService.embed_thin(t, k, phi)

    @staticmethod
    def tangent(t: TorusSpec, k: KnotSpec, phi: Angle, kind: ParameterizationKind) -> Point3:
        """Closed-form d/dphi of the chosen embedding"""
        phi = GeometryService.canonical_phi(k, phi)
        alpha = k.alpha_value
        theta = alpha * phi
        cos_phi, sin_phi = np.cos(phi), np.sin(phi)
        cos_t, sin_t = np.cos(theta), np.sin(theta)

        if kind == ParameterizationKind.EXACT:
            denom = t.gamma - cos_t
            d_denom = alpha * sin_t
            scale = t.a * t.beta / denom ** 2
            return Point3(
                -scale * (sin_phi * denom + cos_phi * d_denom),
                scale * (cos_phi * denom - sin_phi * d_denom),
                t.a * alpha * (t.gamma * cos_t - 1.0) / denom ** 2,
            )

        envelope = 1.0 + cos_t / t.gamma
        d_envelope = -alpha * sin_t / t.gamma
        return Point3(
            t.a * (-sin_phi * envelope + cos_phi * d_envelope),
            t.a * (cos_phi * envelope + sin_phi * d_envelope),
            t.a * alpha * cos_t / t.gamma,
        )

    @staticmethod
    def commutator_rhs_thin(coord: str, t: TorusSpec, k: KnotSpec, phi: Angle) -> Angle:
        """Real factor multiplying i*hbar in [coord, Lz] under the thin-torus closed forms"""
        x, y, z = GeometryService.embed_thin(t, k, phi)
        alpha = k.alpha_value
        if coord == 'x':
            return -(y + alpha * z * x / t.a)
        if coord == 'y':
            return x - alpha * z * y / t.a
        if coord == 'z':
            return alpha * (t.a / t.gamma - t.gamma * z * z / (2.0 * t.a))
        raise InvalidInput(f"Unknown axis '{coord}'")

    @staticmethod
    def thin_commutator_deviation(coord: str, t: TorusSpec, k: KnotSpec, phi: Angle) -> Angle:
        """commutator_rhs_thin minus the thin tangent component"""
        rhs = GeometryService.commutator_rhs_thin(coord, t, k, phi)
        tangent = GeometryService.tangent(t, k, phi, ParameterizationKind.THIN_TORUS)
        return rhs - getattr(tangent, coord)

    @staticmethod
    def radius_identity_residual(t: TorusSpec, k: KnotSpec, phi: Angle,
                                 kind: ParameterizationKind) -> Angle:
        phi = GeometryService.canonical_phi(k, phi)
        theta = k.alpha_value * phi
        x, y, z = GeometryService.embed(t, k, phi, kind)

        if kind == ParameterizationKind.EXACT:
            expected = t.a ** 2 * (t.beta ** 2 + np.sin(theta) ** 2) / (t.gamma - np.cos(theta)) ** 2
            return x * x + y * y + z * z - expected

        # (1 + gamma) z^2 form: only O(a^2/gamma) accurate
        return x * x + y * y + (1.0 + t.gamma) * z * z - t.a ** 2 * (1.0 + 2.0 / t.gamma)

    @staticmethod
    def sample_curve(t: TorusSpec, k: KnotSpec, kind: ParameterizationKind,
                     n_points: int = EMBED_GRID_POINTS):
        """Uniform samples (phi, x, y, z) over one full period"""
        phi = np.arange(n_points) * (k.period / n_points)
        x, y, z = GeometryService.embed(t, k, phi, kind)
        return phi, x, y, z

    @staticmethod
    def embedding_sup_error(t: TorusSpec, k: KnotSpec, n_points: int = EMBED_GRID_POINTS) -> float:
        """max over a uniform grid of |embed_exact - embed_thin|"""
        phi = np.arange(n_points) * (k.period / n_points)
        exact = np.array(GeometryService.embed_exact(t, k, phi))
        thin = np.array(GeometryService.embed_thin(t, k, phi))
        error = float(np.max(np.linalg.norm(exact - thin, axis=0)))
        logger.debug(f"Embedding sup error gamma={t.gamma}: {error:.6e}")
        return error
