from knot_uncertainty.utils.constants import EXIT_INVALID
from knot_uncertainty.utils.exceptions import (
    KnotUncertaintyError,
    NegativeVariance,
    NoConvergence,
    NonFiniteValue,
    NonRealExpectation,
)
from knot_uncertainty.utils.logger import get_logger

logger = get_logger(__name__)


def register_error_handlers(app):
    """Register all error handlers; every failure maps to exit code 2"""

    @app.errorhandler(KnotUncertaintyError)
    def invalid_input(error):
        logger.error(f"❌ Invalid input ({type(error).__name__}): {error}")
        return EXIT_INVALID

    @app.errorhandler(NoConvergence)
    @app.errorhandler(NegativeVariance)
    @app.errorhandler(NonRealExpectation)
    @app.errorhandler(NonFiniteValue)
    def numerical_failure(error):
        logger.error(f"❌ Numerical failure ({type(error).__name__}): {error}")
        return EXIT_INVALID

    @app.errorhandler(OSError)
    def output_failure(error):
        logger.error(f"❌ Could not write output: {error}")
        return EXIT_INVALID

    @app.errorhandler(Exception)
    def handle_exception(error):
        logger.error(f"Unhandled exception: {error}")
        return EXIT_INVALID
