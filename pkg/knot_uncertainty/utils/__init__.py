"""Utilities package"""
from .logger import get_logger, configure_logging
from .validators import (
    validate_radii,
    validate_scale,
    validate_positive_integers,
    validate_coprime,
    validate_distinct_modes,
)
from .exceptions import KnotUncertaintyError

__all__ = [
    'get_logger',
    'configure_logging',
    'validate_radii',
    'validate_scale',
    'validate_positive_integers',
    'validate_coprime',
    'validate_distinct_modes',
    'KnotUncertaintyError',
]
