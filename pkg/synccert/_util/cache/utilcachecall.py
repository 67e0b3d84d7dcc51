#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert callable caching utilities.**

This private submodule memoizes pure numerical helpers called repeatedly with
the same hashable arguments (e.g., the angle grid shared by every refinement
run of a threshold search, the moment fixed point of a given norm ratio).

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import inspect
from functools import wraps
from inspect import Parameter
from synccert.roar import (
    _SyncCertUtilCallableCachedException,
    _SyncCertUtilCallableCachedKwargsWarning,
)
from synccert._util.utilobject import SENTINEL, Iota
from threading import Lock
from typing import Any, Callable, Dict, Hashable, Tuple
from warnings import warn

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ CONSTANTS ~ private               }....................
_PARAM_KINDS_UNSUPPORTED = frozenset((
    Parameter.VAR_KEYWORD,
    Parameter.VAR_POSITIONAL,
))
'''
Frozen set of all :attr:`Parameter.kind` constants *not* supported by the
:func:`callable_cached` decorator.
'''


_KWARGS_MARKER = Iota()
'''
Marker separating positional arguments from keyword argument items in cache
keys.
'''

# ....................{ DECORATORS                        }....................
def callable_cached(func: Callable) -> Callable:
    '''
    **Memoize** the passed pure callable (i.e., cache every value returned and
    every exception raised by this callable per distinct hashable argument
    list).

    The returned closure is safe to share between the worker threads of a
    threshold search: concurrent misses on one argument list may each call
    the decorated callable, but every caller receives the first result
    stored. Calls passed unhashable arguments bypass the cache. The closure
    exposes a ``cache_clear()`` method emptying the cache.

    Caveats
    ----------
    **No parameters accepted by the decorated callable may be variadic.**

    **Cached return values are shared between callers.** Callables returning
    :mod:`numpy` arrays should mark those arrays read-only before returning
    them.

    **Order of keyword arguments is significant.** Calls passed the same
    keyword arguments in differing order are cached separately, and every
    call passed keyword arguments emits a
    :class:`_SyncCertUtilCallableCachedKwargsWarning`.

    Raises
    ----------
    _SyncCertUtilCallableCachedException
        If any parameter accepted by this callable is variadic.
    '''
    assert callable(func), f'{repr(func)} not callable.'

    for param in inspect.signature(func).parameters.values():
        if param.kind in _PARAM_KINDS_UNSUPPORTED:
            raise _SyncCertUtilCallableCachedException(
                f'@callable_cached {func.__name__}() parameter {param.name} '
                f'kind {repr(param.kind)} unsupported.'
            )

    # Dictionary mapping cache keys to 2-tuples "(raised, value)", where
    # "value" is the exception raised if "raised" and the return value else.
    cache: Dict[Hashable, Tuple[bool, Any]] = {}
    cache_lock = Lock()

    @wraps(func)
    def _callable_cached(*args, **kwargs):

        key = _get_key(func, args, kwargs)
        try:
            entry = cache.get(key, SENTINEL)
        except TypeError:
            return func(*args, **kwargs)

        if entry is SENTINEL:
            try:
                entry = (False, func(*args, **kwargs))
            except Exception as exception:
                entry = (True, exception)

            with cache_lock:
                entry = cache.setdefault(key, entry)

        raised, value = entry
        if raised:
            raise value
        return value

    _callable_cached.cache_clear = cache.clear
    return _callable_cached

# ....................{ PRIVATE ~ getters                 }....................
def _get_key(func: Callable, args: tuple, kwargs: dict) -> Any:
    '''
    Cache key of the passed arguments: the sole positional argument itself,
    the tuple of positional arguments *or*, if keyword arguments were passed,
    that tuple extended by a marker and the keyword argument items.
    '''

    if kwargs:
        warn(
            f'@callable_cached {func.__name__}() inefficiently passed '
            f'keyword arguments: {kwargs}',
            _SyncCertUtilCallableCachedKwargsWarning,
        )
        return args + (_KWARGS_MARKER,) + tuple(kwargs.items())
    # Else, only positional arguments were passed.

    return args[0] if len(args) == 1 else args
