#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**:mod:`pytest` test-skipping decorators.**

This submodule provides decorators conditionally skipping their decorated
tests (e.g., on the importability of an optional package).
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: To raise human-readable test errors, avoid importing from
# package-specific submodules at module scope.
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
import pytest
from typing import Optional

# ....................{ SKIP                              }....................
skip_if = pytest.mark.skipif
'''
Conditionally skip the decorated test with the passed human-readable
justification if the passed boolean is ``True``.
'''


def skip_unless_package(
    package_name: str, minimum_version: Optional[str] = None):
    '''
    Skip the decorated test if the package with the passed name is either
    unimportable *or* older than the passed minimum version if non-``None``.

    Parameters
    ----------
    package_name : str
        Fully-qualified name of the package to be imported.
    minimum_version : Optional[str]
        Minimum version of this package as a dot-delimited string (e.g.,
        ``1.1.0``) if any *or* ``None`` otherwise. Defaults to ``None``.

    Returns
    ----------
    pytest.skipif
        Decorator skipping this test if this package is unsatisfied *or* the
        identity decorator otherwise.
    '''
    assert isinstance(package_name, str), f'{repr(package_name)} not string.'

    try:
        # Raises "pytest.skip.Exception" if this package is unsatisfied.
        pytest.importorskip(package_name, minversion=minimum_version)
    except pytest.skip.Exception as exception:
        return skip_if(True, reason=str(exception))

    # Else, this package is satisfied. Reduce to the identity decorator.
    return skip_if(False, reason=f'Package "{package_name}" satisfied.')
