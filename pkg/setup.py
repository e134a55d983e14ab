from setuptools import setup, find_packages
import pathlib

here = pathlib.Path(__file__).parent.resolve()

# Get the long description from the README file
long_description = (here / 'README.md').read_text(encoding='utf-8')

# Get the dependencies from the requirements file
install_requires = (here / 'requirements.txt').read_text(encoding='utf-8').split()

setup(
    name='cutenum',
    version='0.1.0',
    description='Enumeration and certification of approximate minimum cuts via terminal cuts',
    long_description=long_description,
    long_description_content_type='text/markdown',

    classifiers=[
        # How mature is this project? Common values are
        #   3 - Alpha
        #   4 - Beta
        #   5 - Production/Stable
        'Development Status :: 3 - Alpha',

        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires='>=3.8',
    # What does your project relate to?
    keywords='graph minimum cut enumeration max-flow terminal cut',

    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=install_requires,
    extras_require={
        'test': ['pytest>=7.1.2', 'hypothesis>=6.46.0'],
    },
    entry_points={
        'console_scripts': [
            'cutenum = cutenum.cli:main',
        ],
    },
)
