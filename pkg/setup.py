import os

from setuptools import (
    find_packages,
    setup
)

import fracostrowski


with open(os.path.join('requirements.txt'), 'r') as f:
    REQUIRED_PACKAGES = f.readlines()

packages = find_packages(exclude=['tests', 'tests.*'])


setup(
    name='fracostrowski',
    version=fracostrowski.__version__,
    install_requires=REQUIRED_PACKAGES,
    packages=packages,
    include_package_data=True,
    description='Fractional Ostrowski inequalities for harmonically s-convex functions',
    entry_points={
        'console_scripts': [
            'fracostrowski = fracostrowski.cli.main:main_entry_point'
        ]
    }
)
