#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**:mod:`pytest` test-marking decorators.**

This submodule provides decorators unconditionally marking their decorated
tests.
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: To raise human-readable test errors, avoid importing from
# package-specific submodules at module scope.
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
import pytest
from synccert_test.util.pytroar import SyncCertTestMarkException
from typing import Callable

# ....................{ MARKS                             }....................
slow = pytest.mark.slow
'''
Mark the decorated test as slow, skipping it unless ``-m slow`` is passed.
'''


def ignore_warnings(warning_cls: type) -> Callable:
    '''
    Decorate the passed test to ignore all warnings subclassing the passed
    :class:`Warning` class.

    This decorator should be called in lieu of the low-level
    :func:`pytest.mark.filterwarnings` decorator, whose string syntax fails
    silently on typos.

    Raises
    ----------
    SyncCertTestMarkException
        If this object is *not* a :class:`Warning` subclass.
    '''

    # Defer heavyweight imports.
    from synccert._util.utilobject import get_object_classname

    if not (isinstance(warning_cls, type) and issubclass(warning_cls, Warning)):
        raise SyncCertTestMarkException(
            f'{repr(warning_cls)} not {repr(Warning)} subclass.')

    return pytest.mark.filterwarnings(
        f'ignore::{get_object_classname(warning_cls)}')
