#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert test exceptions.**

This submodule defines the hierarchy of :mod:`synccert_test`-specific
exceptions raised by test utilities rather than by tests themselves.
'''

# ....................{ IMPORTS                           }....................
from abc import ABCMeta as _ABCMeta
from synccert.roar import SyncCertException

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ SUPERCLASS                        }....................
class SyncCertTestException(SyncCertException, metaclass=_ABCMeta):
    '''
    Abstract base class of all **synccert test exceptions.**
    '''

    pass

# ....................{ MARK                              }....................
class SyncCertTestMarkException(SyncCertTestException):
    '''
    **Synccert test mark exception.**

    This exception is raised by decorators defined by the
    :mod:`synccert_test.util.mark` subpackage when passed invalid arguments.
    '''

    pass
