import os

from setuptools import find_packages, setup


def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname)).read()


long_description = read('README.md') if os.path.isfile("README.md") else ""

setup(
    name='gi0-est',
    version='1.0.0',
    description='G_I^0 speckle model, roughness estimators and Monte Carlo benchmarks for SAR intensity data',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests', 'tests.*']),
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Scientific/Engineering',
    ],
    keywords='sar speckle estimation',
    python_requires='>=3.8,<4',
    install_requires=[
        'click>=8.0.4,<9',
        'numpy>=1.20',
        'scipy>=1.7'
    ],
    extras_require={
        'dev': [
            'pytest>=6'
        ]
    },
    entry_points={
        'console_scripts': [
            'gi0est=gi0est.cli:cli',
        ],
    },
)
