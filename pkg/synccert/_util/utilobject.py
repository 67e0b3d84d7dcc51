#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert object utilities.**

This private submodule implements the sentinels of the memoization decorator
and the class naming helper of the test suite's warning filters.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ CLASSES                           }....................
class Iota(object):
    '''
    **Iota** (i.e., attribute-free object compared only by identity).
    '''

    __slots__ = ()

# ....................{ CONSTANTS                         }....................
SENTINEL = Iota()
'''
Sentinel distinguishing cache misses from cached ``None`` values.
'''

# ....................{ GETTERS                           }....................
def get_object_classname(obj: object) -> str:
    '''
    **Fully-qualified name** (e.g., ``synccert.roar.SyncCertFrameWarning``)
    of the passed class *or* of the class of the passed object.

    Classes synthesized without a declaring module reduce to their qualified
    name.
    '''

    cls = obj if isinstance(obj, type) else type(obj)
    module_name = getattr(cls, '__module__', None)
    return (
        cls.__qualname__ if module_name is None else
        f'{module_name}.{cls.__qualname__}'
    )
