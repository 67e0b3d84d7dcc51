#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert moment bounds.**

This private submodule lower-bounds the order parameter ``rho_1`` of every
stable equilibrium from the adjacency ratio ``a = ||Delta_A|| / (np)`` alone
and converts that bound into initial upper bounds on the sizes of the stray
sets ``C_phi``.

Two inequalities hold at every stable equilibrium of a connected graph:

* ``rho_1**2 >= (1 + |rho_2|**2) / 2 - 2a``.
* ``|rho_2| >= 1 - 2 a**2 / rho_1**2``.

Alternating between both from ``rho_1 = rho_2 = 0`` yields a non-decreasing
sequence of valid lower bounds converging to the smallest fixed point.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import math
import numpy as np
from beartype import beartype
from synccert.cave import RealType
from synccert.roar import SyncCertCertifierParamException
from synccert._cert.certdata import CertificateInput, CphiBoundTable
from synccert._util.cache.utilcachecall import callable_cached

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ CONSTANTS                         }....................
RHO1_TOL = 1e-13
'''
Change in ``rho_1**2`` below which the moment alternation stops.
'''


RHO1_ROUNDS_MAX = 10000
'''
Maximum number of rounds of the moment alternation.
'''

# ....................{ BOUNDS                            }....................
@beartype
def rho1_lower_bound(a: RealType) -> float:
    '''
    Lower bound in ``[0, 1]`` on ``|rho_1|`` for every stable equilibrium of
    a connected graph whose adjacency ratio is at most ``a``.

    Parameters
    ----------
    a : RealType
        Adjacency ratio ``||Delta_A|| / (np)``. Must be non-negative.

    Returns
    ----------
    float
        Limit of the moment alternation *or* 0 if the alternation collapses
        (i.e., its bound on ``rho_1**2`` is ever non-positive).

    Raises
    ----------
    SyncCertCertifierParamException
        If ``a`` is negative or non-finite.
    '''

    if not (a >= 0.0 and math.isfinite(a)):
        raise SyncCertCertifierParamException(
            f'Adjacency ratio {a} not non-negative and finite.')

    return _rho1_lower_bound_cached(float(a))


@callable_cached
def _rho1_lower_bound_cached(a: float) -> float:
    '''
    Memoized moment alternation underlying :func:`rho1_lower_bound`.
    '''

    rho2 = 0.0
    rho1_squared = 0.0

    for _ in range(RHO1_ROUNDS_MAX):
        rho1_squared_new = max(0.0, (1.0 + rho2 * rho2) / 2.0 - 2.0 * a)

        # If the alternation collapsed, no positive bound exists.
        if rho1_squared_new == 0.0:
            return 0.0
        assert rho1_squared_new >= rho1_squared - RHO1_TOL, (
            f'Moment alternation decreased from {rho1_squared} '
            f'to {rho1_squared_new}.')

        rho2 = max(0.0, 1.0 - 2.0 * a * a / rho1_squared_new)

        if abs(rho1_squared_new - rho1_squared) < RHO1_TOL:
            rho1_squared = rho1_squared_new
            break
        rho1_squared = rho1_squared_new

    return math.sqrt(min(1.0, rho1_squared))

# ....................{ GRIDS                             }....................
@callable_cached
def cphi_grid(grid_size: int) -> np.ndarray:
    '''
    Read-only uniform grid of ``grid_size`` angles spanning ``(0, pi/2]``,
    excluding 0 and ending at ``pi/2``.

    Raises
    ----------
    SyncCertCertifierParamException
        If ``grid_size`` is less than 2.
    '''

    if grid_size < 2:
        raise SyncCertCertifierParamException(
            f'Grid size {grid_size} < 2.')

    grid = np.linspace(0.0, math.pi / 2.0, int(grid_size) + 1)[1:]
    grid[-1] = math.pi / 2.0
    grid.setflags(write=False)
    return grid

# ....................{ TABLES                            }....................
@beartype
def cphi_initial_bounds(
    input: CertificateInput,
    rho1_lb: RealType,
    grid: np.ndarray,
) -> CphiBoundTable:
    '''
    Initial sector bound table implied by the moment bound.

    At a stable equilibrium in the canonical frame,
    ``|C_phi| <= ||Delta_A||**2 / (n p**2 rho_1**2 sin(phi)**2)
    = a**2 n / (rho_1**2 sin(phi)**2)``, which is clamped to ``n``.

    Parameters
    ----------
    input : CertificateInput
        Certificate input.
    rho1_lb : RealType
        Positive lower bound on ``rho_1``.
    grid : np.ndarray
        Grid of angles. See :func:`cphi_grid`.

    Raises
    ----------
    SyncCertCertifierParamException
        If ``rho1_lb`` is not positive (i.e., the moment bound collapsed).
    '''

    if not rho1_lb > 0.0:
        raise SyncCertCertifierParamException(
            f'Moment bound collapsed (rho_1 lower bound {rho1_lb}).')

    n = float(input.n)
    sin_squared = np.sin(grid)**2
    bounds = np.minimum(
        n, input.a**2 * n / (float(rho1_lb)**2 * sin_squared))

    table = CphiBoundTable(grid=grid, bounds=bounds)
    table.enforce_monotone()
    return table


@beartype
def first_bound(
    input: CertificateInput, rho1: RealType, phi: RealType) -> float:
    '''
    Upper bound ``min(n, a**2 n / (rho_1**2 sin(phi)**2))`` on ``|C_phi|``
    at a stable equilibrium whose order parameter is at least ``rho1``.

    Returns ``n`` when ``rho1`` or ``sin(phi)`` vanishes.
    '''

    denominator = float(rho1)**2 * math.sin(phi)**2
    if denominator == 0.0:
        return float(input.n)
    return min(float(input.n), input.a**2 * input.n / denominator)
