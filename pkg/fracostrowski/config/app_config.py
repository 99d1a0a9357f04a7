import configparser
import logging
import os
from typing import List


LOGGER = logging.getLogger(__name__)


APP_CONFIG_ENV_VAR = 'FRACOSTROWSKI_CONFIG'

REQUIRED_SECTIONS = ('commands', 'quadrature', 'identity', 'bounds', 'certify', 'sweep', 'hh')


def get_app_root() -> str:
    return os.path.abspath(os.path.join(
        os.path.dirname(os.path.abspath(__file__)),
        '../..'
    ))


def get_app_config_filename() -> str:
    return os.path.join(get_app_root(), 'app.cfg')


def get_app_defaults_config_filename() -> str:
    return os.path.join(get_app_root(), 'app-defaults.cfg')


def get_app_config_filenames() -> List[str]:
    filenames = [get_app_defaults_config_filename(), get_app_config_filename()]
    env_filename = os.environ.get(APP_CONFIG_ENV_VAR)
    if env_filename:
        filenames.append(env_filename)
    return filenames


def read_app_config() -> configparser.ConfigParser:
    config = configparser.ConfigParser()
    read_filenames = config.read(get_app_config_filenames())
    LOGGER.debug('read app config from: %s', read_filenames)
    return config


def get_missing_sections(config: configparser.ConfigParser) -> List[str]:
    return [section for section in REQUIRED_SECTIONS if not config.has_section(section)]


class simple_memoize:
    def __init__(self, fn):
        self.fn = fn
        self.cache = None

    def __call__(self):
        if self.cache is None:
            self.cache = self.fn()
        return self.cache


get_app_config = simple_memoize(read_app_config)
