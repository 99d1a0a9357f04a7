from configparser import ConfigParser
from typing import List, Tuple

from fracostrowski.errors import ConfigError


INTERVAL_SEPARATOR = ':'


def dict_to_config(d):
    config = ConfigParser()
    for section in d.keys():
        config.add_section(section)
        for key, value in d[section].items():
            config.set(str(section), str(key), str(value))
    return config


def parse_list(s, sep=','):
    s = s.strip()
    if not s:
        return []
    return [item.strip() for item in s.split(sep)]


def parse_float_list(s: str, sep=',') -> List[float]:
    try:
        return [float(item) for item in parse_list(s, sep=sep)]
    except ValueError as e:
        raise ConfigError('invalid number list: %r' % s) from e


def parse_interval(s: str) -> Tuple[float, float]:
    try:
        a, b = (float(item) for item in parse_list(s, sep=INTERVAL_SEPARATOR))
    except ValueError as e:
        raise ConfigError('invalid interval (expected a:b): %r' % s) from e
    return a, b


def parse_interval_list(s: str, sep=',') -> List[Tuple[float, float]]:
    return [parse_interval(item) for item in parse_list(s, sep=sep)]
