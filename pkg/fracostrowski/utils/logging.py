import logging


def configure_logging(
        level=logging.WARNING,
        package_level=logging.INFO):
    logging.basicConfig(level=level)
    logging.getLogger('fracostrowski').setLevel(package_level)
    logging.getLogger('__main__').setLevel(package_level)
