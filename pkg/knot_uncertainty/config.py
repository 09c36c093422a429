import logging


class Config:
    """Base configuration"""

    DEBUG = False
    TESTING = False

    # Logging (console on stderr; file sink only when LOG_DIR is set)
    LOG_LEVEL = logging.WARNING
    LOG_DIR = None


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    LOG_LEVEL = logging.DEBUG
    LOG_DIR = 'logs'


class TestingConfig(Config):
    """Testing configuration"""
    DEBUG = True
    TESTING = True


class ProductionConfig(Config):
    """Production configuration"""
    LOG_LEVEL = logging.WARNING


config_by_name = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
}
