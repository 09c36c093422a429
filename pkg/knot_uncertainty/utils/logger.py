import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from typing import Optional

_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
_settings = {'level': logging.WARNING, 'log_dir': None}


def configure_logging(level: int = logging.WARNING, log_dir: Optional[str] = None):
    """Apply level and optional file sink to every knot_uncertainty logger"""
    _settings['level'] = level
    _settings['log_dir'] = log_dir

    for name in list(logging.root.manager.loggerDict):
        if name.startswith('knot_uncertainty'):
            logger = logging.getLogger(name)
            for handler in list(logger.handlers):
                logger.removeHandler(handler)
                handler.close()
            _attach_handlers(logger)


def get_logger(name):
    """Get or create logger"""

    logger = logging.getLogger(name)

    if not logger.handlers:
        _attach_handlers(logger)

    return logger


def _attach_handlers(logger):
    formatter = logging.Formatter(_FORMAT)

    # Console handler on stderr; stdout is reserved for reports
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(_settings['level'])
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    log_dir = _settings['log_dir']
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        file_handler = RotatingFileHandler(
            os.path.join(log_dir, 'knot_uncertainty.log'),
            maxBytes=10485760,  # 10MB
            backupCount=10
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    logger.setLevel(logging.DEBUG)
