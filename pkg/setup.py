# setup.py
from setuptools import setup, find_packages

setup(
    name="wiener-deletion-toolkit",
    version="0.1",
    package_dir={'': 'src', 'cli': 'cli'},
    packages=find_packages('src') + ['cli'],
    package_data={'data': ['*.csv']},
    install_requires=[
        'numpy>=2.0',
        'tqdm>=4.65.0',
    ],
    extras_require={
        'tests': [
            'pytest>=8.0',
            'hypothesis>=6.100',
            'networkx>=3.0',
            'sympy>=1.12',
        ],
    },
    entry_points={
        'console_scripts': [
            'wiener-toolkit=cli.main:main',
        ],
    },
)
