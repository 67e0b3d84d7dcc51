#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert installer.**

This submodule conforms to the standard :mod:`setuptools`-based "makefile"
format, instrumenting most high-level installation tasks for this package.
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: To avoid race conditions during setuptools-based installation, this
# module may import *ONLY* from packages guaranteed to exist at the start of
# installation. Since the "synccert" package itself imports numpy and scipy,
# the "synccert.meta" submodule is loaded below by path instead.
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!

import os
import setuptools
from importlib.util import module_from_spec, spec_from_file_location

# ....................{ METADATA                          }....................
def _load_meta():
    '''
    The :mod:`synccert.meta` submodule, loaded from its file without
    importing the :mod:`synccert` package.
    '''

    meta_filename = os.path.join(
        os.path.dirname(os.path.realpath(__file__)), 'synccert', 'meta.py')
    meta_spec = spec_from_file_location('_synccert_meta', meta_filename)
    meta_module = module_from_spec(meta_spec)
    meta_spec.loader.exec_module(meta_module)
    return meta_module


meta = _load_meta()

# ....................{ METADATA ~ seo                    }....................
_KEYWORDS = [
    'Kuramoto model',
    'global synchrony',
    'random graphs',
    'computer-assisted proof',
    'spectral graph theory',
]
'''
List of all lowercase alphabetic keywords synopsising this package.
'''

# ....................{ METADATA ~ seo : classifiers      }....................
# All "Programming Language :: Python :: "-prefixed strings are dynamically
# appended to this list by the _sanitize_classifiers() function below.
_CLASSIFIERS = [
    'Development Status :: 4 - Beta',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: MIT License',
    'Natural Language :: English',
    'Operating System :: OS Independent',
    'Programming Language :: Python :: 3 :: Only',
    'Topic :: Scientific/Engineering :: Mathematics',
    'Topic :: Scientific/Engineering :: Physics',
]
'''
List of all PyPI-specific trove classifier strings synopsizing this
package.

See Also
----------
https://pypi.org/classifiers
    Plaintext list of all trove classifier strings recognized by PyPI.
'''


def _sanitize_classifiers(
    python_version_min_parts: tuple,
    python_version_minor_max: int,
) -> list:
    '''
    List of all PyPI-specific trove classifier strings synopsizing this
    package, extended by one ``Programming Language :: Python :: 3.{minor}``
    classifier per supported minor version.
    '''
    assert isinstance(python_version_min_parts, tuple), (
        f'"{python_version_min_parts}" not tuple.')
    assert isinstance(python_version_minor_max, int), (
        f'"{python_version_minor_max}" not integer.')

    python_version_major = python_version_min_parts[0]
    classifiers = _CLASSIFIERS[:]

    for python_version_minor in range(
        python_version_min_parts[1], python_version_minor_max + 1):
        classifiers.append(
            f'Programming Language :: Python :: '
            f'{python_version_major}.{python_version_minor}')

    return classifiers

# ....................{ OPTIONS                           }....................
_SETUP_OPTIONS = {
    # ..................{ CORE                              }..................
    # "long_description" and "license_file" live in "setup.cfg".
    'name':             meta.PACKAGE_NAME,
    'version':          meta.VERSION,
    'author':           meta.AUTHORS,
    'author_email':     meta.AUTHOR_EMAIL,
    'maintainer':       meta.AUTHORS,
    'maintainer_email': meta.AUTHOR_EMAIL,
    'description':      meta.SYNOPSIS,
    'url':              meta.URL_HOMEPAGE,
    'download_url':     meta.URL_DOWNLOAD,

    # ..................{ PYPI                              }..................
    'classifiers': _sanitize_classifiers(
        python_version_min_parts=meta.PYTHON_VERSION_MIN_PARTS,
        python_version_minor_max=meta.PYTHON_VERSION_MINOR_MAX,
    ),
    'keywords': _KEYWORDS,
    'license': meta.LICENSE,

    # ..................{ DEPENDENCIES                      }..................
    'python_requires': '>=' + meta.PYTHON_VERSION_MIN,
    'install_requires': meta.LIBS_RUNTIME_MANDATORY,
    'extras_require': {
        # All optional runtime dependencies.
        'all': meta.LIBS_RUNTIME_OPTIONAL,

        # All testing dependencies, installed by the top-level "tox.ini" file.
        'test': (
            meta.LIBS_TESTTIME_MANDATORY + meta.LIBS_TESTTIME_OPTIONAL),
    },
    'tests_require': meta.LIBS_TESTTIME_MANDATORY,

    # ..................{ ENTRY POINTS                      }..................
    'entry_points': {
        'console_scripts': [
            'synccert = synccert._cli.climain:main',
        ],
    },

    # ..................{ PACKAGES                          }..................
    # Test packages are *NOT* installed.
    'packages': setuptools.find_packages(exclude=(
        meta.PACKAGE_NAME + '_test',
        meta.PACKAGE_NAME + '_test.*',
        'build',
    )),
}
'''
Dictionary unpacked as keyword arguments into the subsequent call of the
:func:`setuptools.setup` function.
'''

# ....................{ SETUP                             }....................
setuptools.setup(**_SETUP_OPTIONS)
