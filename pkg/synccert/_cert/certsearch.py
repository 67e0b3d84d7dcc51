#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert threshold search.**

This private submodule finds the smallest edge probability ``p`` for which
the Erdős–Rényi graph ``G(n, p)`` certifies under formula norms, by
exponential bracketing over ``p = 1, 1/2, 1/4, ...`` on a thread pool
followed by sequential bisection.

Bisection presumes the verdict is monotone in ``p``. That presumption is
checked against every probe evaluated so far after each probe.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import logging
from beartype import beartype
from synccert.cave import IntOrNoneType, IntType, RealType
from synccert.roar import (
    SyncCertCertifierParamException,
    SyncCertThresholdException,
    SyncCertThresholdMonotonicityException,
)
from synccert._cert.certdata import ThresholdSearchResult
from synccert._cert.certmain import certify
from synccert._cert.certrefine import GRID_SIZE_DEFAULT, MAX_SWEEPS_DEFAULT
from synccert._util.utilthread import get_thread_count, map_threaded
from typing import List, Tuple

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ GLOBALS                           }....................
logger = logging.getLogger(__name__)

# ....................{ CONSTANTS                         }....................
TOL_P_DEFAULT = 1e-3
'''
Default relative tolerance of the threshold search.
'''


BRACKET_EXPONENT_MAX = 60
'''
Largest exponent ``k`` probed by bracketing at ``p = 2**-k``.
'''

# ....................{ SEARCHERS                         }....................
@beartype
def threshold_search(
    n: IntType,
    norm_source: str = 'formula',
    tol_p: RealType = TOL_P_DEFAULT,
    method: str = 'refine',
    grid_size: IntType = GRID_SIZE_DEFAULT,
    max_sweeps: IntType = MAX_SWEEPS_DEFAULT,
    threads: IntOrNoneType = None,
) -> ThresholdSearchResult:
    '''
    Smallest ``p``, to relative tolerance ``tol_p``, for which
    ``certify(n, p)`` certifies.

    Parameters
    ----------
    n : IntType
        Vertex count. Must be at least 8.
    norm_source : str
        Norm source. Only ``'formula'`` is supported, as graph norm sources
        fix ``p`` to an explicit graph.
    tol_p : RealType
        Relative tolerance in ``(0, 1)``. Defaults to
        :data:`TOL_P_DEFAULT`.
    method : str
        Certification method probed. Defaults to ``'refine'``.
    grid_size : IntType
        Number of refinement grid angles.
    max_sweeps : IntType
        Maximum number of refinement sweeps.
    threads : IntOrNoneType
        Maximum number of bracketing threads *or* ``None`` to defer to
        :func:`synccert._util.utilthread.get_thread_count`.

    Returns
    ----------
    ThresholdSearchResult
        Result whose ``p_star`` is the upper end of the final bisection
        interval and hence itself certifies.

    Raises
    ----------
    SyncCertCertifierParamException
        If ``n < 8``, ``tol_p`` lies outside ``(0, 1)`` or ``norm_source`` is
        not ``'formula'``.
    SyncCertThresholdException
        If even ``p = 1`` does not certify.
    SyncCertThresholdMonotonicityException
        If a certified probe lies strictly below an uncertified probe.
    '''

    if n < 8:
        raise SyncCertCertifierParamException(f'Vertex count {n} < 8.')
    elif not 0.0 < tol_p < 1.0:
        raise SyncCertCertifierParamException(
            f'Relative tolerance {tol_p} outside (0, 1).')
    elif norm_source != 'formula':
        raise SyncCertCertifierParamException(
            f'Threshold search requires norm source "formula", '
            f'not "{norm_source}".')

    n = int(n)
    probes: List[Tuple[float, bool]] = []

    def _probe(p: float) -> bool:
        return certify(
            n,
            p,
            norm_source='formula',
            method=method,
            grid_size=grid_size,
            max_sweeps=max_sweeps,
        ).certified

    def _record(p: float, certified: bool) -> None:
        probes.append((p, certified))
        logger.debug('Probe n=%d, p=%.17g: %s.', n, p, certified)
        _check_monotone(n, probes)

    # Exponential bracketing in batches of one probe per thread.
    batch_size = get_thread_count(threads)
    exponent = 0
    lo = 0.0
    hi = None
    while lo == 0.0 and exponent <= BRACKET_EXPONENT_MAX:
        ps = [
            2.0**-k for k in range(
                exponent,
                min(exponent + batch_size, BRACKET_EXPONENT_MAX + 1))
        ]
        verdicts = map_threaded(_probe, ps, threads=threads)
        for p, certified in zip(ps, verdicts):
            _record(p, certified)

        for p, certified in zip(ps, verdicts):
            if not certified:
                lo = p
                break
            hi = p

        if hi is None:
            raise SyncCertThresholdException(
                f'No certifiable p <= 1 for n={n} (method "{method}").')
        exponent += len(ps)

    if lo == 0.0:
        logger.warning(
            'Every probe down to p=2**-%d certified at n=%d.',
            BRACKET_EXPONENT_MAX, n)

    logger.info('Bracket at n=%d: (%g, %g].', n, lo, hi)

    # Bisection.
    while (hi - lo) / hi >= tol_p:
        mid = (lo + hi) / 2.0
        certified = _probe(mid)
        _record(mid, certified)
        if certified:
            hi = mid
        else:
            lo = mid

    logger.info('Threshold at n=%d: p*=%.6g (%d probes).',
        n, hi, len(probes))

    return ThresholdSearchResult(
        n=n,
        p_star=hi,
        method=method,
        tol_p=float(tol_p),
        probes=tuple(probes),
    )

# ....................{ PRIVATE ~ checkers                }....................
def _check_monotone(n: int, probes: List[Tuple[float, bool]]) -> None:
    '''
    Raise an exception if any certified probe lies strictly below any
    uncertified probe.
    '''

    certified_min = min(
        (p for p, certified in probes if certified), default=None)
    uncertified_max = max(
        (p for p, certified in probes if not certified), default=None)

    if (
        certified_min is not None and
        uncertified_max is not None and
        certified_min < uncertified_max
    ):
        raise SyncCertThresholdMonotonicityException(
            f'Verdict not monotone in p at n={n}: p={certified_min} '
            f'certified but p={uncertified_max} did not.',
            probes=list(probes),
        )
