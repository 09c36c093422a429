import argparse
from typing import Callable, Dict, List, Optional, Type

from knot_uncertainty.config import config_by_name
from knot_uncertainty.utils.constants import EXIT_INVALID, EXIT_OK
from knot_uncertainty.utils.logger import configure_logging, get_logger

logger = get_logger(__name__)


class VerifierApp:
    """Command-line application: sub-commands plus exception-to-exit-code handlers"""

    def __init__(self, config):
        self.config = config
        self.parser = argparse.ArgumentParser(
            prog='knot-uncertainty',
            description='Uncertainty relations for a particle confined to a torus knot',
        )
        self.subparsers = self.parser.add_subparsers(dest='command', required=True)
        self.commands = {}
        self.error_handlers: Dict[Type[BaseException], Callable] = {}

    def register_command(self, command):
        command.attach(self.subparsers)
        self.commands[command.name] = command

    def errorhandler(self, exc_type: Type[BaseException]):
        def decorator(func):
            self.error_handlers[exc_type] = func
            return func
        return decorator

    def handle_error(self, error: BaseException) -> int:
        # most specific registered handler wins
        for cls in type(error).__mro__:
            handler = self.error_handlers.get(cls)
            if handler is not None:
                return handler(error)
        raise error

    def run(self, argv: Optional[List[str]] = None) -> int:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as exit_request:
            return EXIT_OK if exit_request.code in (0, None) else EXIT_INVALID

        if args.debug and not self.config.DEBUG:
            configure_logging(config_by_name['development'].LOG_LEVEL)

        try:
            return args.handler(args)
        except Exception as error:
            return self.handle_error(error)


def create_app(config_name='production'):
    """Application factory"""
    config = config_by_name[config_name]
    configure_logging(config.LOG_LEVEL, config.LOG_DIR)

    app = VerifierApp(config)

    # Register commands
    from knot_uncertainty.commands.table import table_cmd
    from knot_uncertainty.commands.verify_ur import verify_ur_cmd
    from knot_uncertainty.commands.sweep_gamma import sweep_gamma_cmd
    from knot_uncertainty.commands.random_property import random_property_cmd

    app.register_command(table_cmd)
    app.register_command(verify_ur_cmd)
    app.register_command(sweep_gamma_cmd)
    app.register_command(random_property_cmd)

    # Register middleware
    from knot_uncertainty.middleware.error_handler import register_error_handlers
    register_error_handlers(app)

    logger.debug(f"Application created with '{config_name}' configuration")
    return app
