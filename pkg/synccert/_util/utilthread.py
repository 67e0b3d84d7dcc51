#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert thread pool utilities.**

This private submodule decides how many worker threads the thread pools of
this package (threshold bracketing, simulation trials, spectral samples) may
spawn.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import os
from concurrent.futures import ThreadPoolExecutor
from synccert.roar import SyncCertThreadsException
from typing import Callable, Iterable, List, Optional

# ....................{ CONSTANTS                         }....................
THREADS_ENV_VAR = 'SYNC_CERT_THREADS'
'''
Name of the environment variable capping the number of worker threads.
'''

# ....................{ GETTERS                           }....................
def get_thread_count(threads: Optional[int] = None) -> int:
    '''
    Number of worker threads a thread pool of this package may spawn.

    Parameters
    ----------
    threads : Optional[int]
        Explicit thread count overriding the environment if any *or* ``None``
        otherwise. Defaults to ``None``.

    Returns
    ----------
    int
        Either this explicit count, the value of the ``SYNC_CERT_THREADS``
        environment variable if set, or :func:`os.cpu_count` otherwise.

    Raises
    ----------
    SyncCertThreadsException
        If this count or that variable is not a positive integer.
    '''

    if threads is not None:
        if threads < 1:
            raise SyncCertThreadsException(
                f'Thread count {threads} not positive.')
        return threads

    threads_env = os.environ.get(THREADS_ENV_VAR)

    # If this variable is unset or empty, default to all available cores.
    if not threads_env:
        return os.cpu_count() or 1
    # Else, this variable is set.

    try:
        threads = int(threads_env)
    except ValueError:
        raise SyncCertThreadsException(
            f'${THREADS_ENV_VAR} "{threads_env}" not integer.')

    if threads < 1:
        raise SyncCertThreadsException(
            f'${THREADS_ENV_VAR} "{threads_env}" not positive.')

    return threads

# ....................{ MAPPERS                           }....................
def map_threaded(
    func: Callable, items: Iterable, threads: Optional[int] = None) -> List:
    '''
    List of the values returned by calling the passed callable on each passed
    item, evaluated on a thread pool and returned in item order.

    Calls run inline when only one thread is permitted, which keeps
    single-threaded runs free of pool overhead.
    '''
    assert callable(func), f'{repr(func)} not callable.'

    items = list(items)
    thread_count = min(get_thread_count(threads), max(len(items), 1))

    if thread_count == 1:
        return [func(item) for item in items]

    with ThreadPoolExecutor(max_workers=thread_count) as executor:
        return list(executor.map(func, items))
