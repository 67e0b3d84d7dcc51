#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert cave.**

This submodule collects the type hints annotating every public callable of
this package, so that hints read the same in every submodule and
:func:`beartype.beartype` checks them the same way everywhere.

Numeric hints
----------
:func:`beartype.beartype` checks hints strictly: a :class:`float` hint rejects
:class:`int` objects *and* :mod:`numpy` integer scalars. Callables accepting
real numbers are therefore annotated by :data:`RealType`, a union covering
builtin and :mod:`numpy` scalars alike, rather than by :class:`float`.
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: To avoid polluting the public module namespace, external attributes
# should be locally imported at module scope *ONLY* under alternate private
# names (e.g., "from argparse import ArgumentParser as _ArgumentParser" rather
# than merely "from argparse import ArgumentParser").
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
import numpy as _numpy
from os import PathLike as _PathLike
from typing import (
    Iterable as _Iterable,
    Optional as _Optional,
    Tuple as _Tuple,
    Union as _Union,
)

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ TYPES                             }....................
NoneType = type(None)
'''
Type of the ``None`` singleton.
'''


NDArrayType = _numpy.ndarray
'''
Type of all :mod:`numpy` arrays.
'''

# ....................{ HINTS ~ scalar                    }....................
IntType = _Union[int, _numpy.integer]
'''
Hint matching builtin and :mod:`numpy` integer scalars.
'''


RealType = _Union[int, float, _numpy.integer, _numpy.floating]
'''
Hint matching builtin and :mod:`numpy` integer and floating-point scalars.
'''


RealOrNoneType = _Optional[RealType]
'''
Hint matching either a real scalar *or* ``None``.
'''


IntOrNoneType = _Optional[IntType]
'''
Hint matching either an integer scalar *or* ``None``.
'''

# ....................{ HINTS ~ container                 }....................
EdgeType = _Tuple[IntType, IntType]
'''
Hint matching a single undirected edge as a 2-tuple of vertex indices.
'''


EdgesType = _Iterable
'''
Hint matching an iterable of edges.

Items are validated by the callables consuming this iterable rather than by
:func:`beartype.beartype`, which only shallowly checks iterables.
'''


IndicesType = _Union[_Iterable, NDArrayType]
'''
Hint matching either an iterable of vertex indices *or* a :mod:`numpy` array
of vertex indices.
'''

# ....................{ HINTS ~ io                        }....................
PathType = _Union[str, _PathLike]
'''
Hint matching either a string pathname *or* a :class:`os.PathLike` object.
'''
