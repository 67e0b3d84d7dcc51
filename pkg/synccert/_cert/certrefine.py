#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert refinement engine.**

This private submodule iteratively refines upper bounds on the sizes of the
stray sets ``C_phi`` over a grid of angles in ``(0, pi/2]``, certifying
global synchrony once the bound on ``|C_{pi/2}|`` drops below 1 (i.e., once
every stable equilibrium is confined to a half-circle and hence in phase).

Rules
----------
Each rule bounds ``x = |C_beta|`` from ``Y``, the bound on ``|C_alpha|``
for ``alpha < beta < pi/2`` with ``Y <= n/2``:

* ``corollary``, the amplification corollary ``x <= Y / (1/(2l) - 1)``,
  applicable when ``sin(beta - alpha) >= 12a``, ``x <= 2 ||Delta_A|| / p``
  and ``l < 1/4``.
* ``relative-size``, the exact solution of the inequality behind that
  corollary: combining the edge-comparison lemma (weight
  ``1 / sin(beta - alpha)``), the three-set deviation lemma and the one-set
  deviation lemma gives ``G(x) <= 0`` for the quadratic
  ``G(x) = s (p z x - q (zY + Yx - x**2)) - (p x**2 + ||Delta_A|| x)``
  with ``s = sin(beta - alpha)``, ``z = n - Y`` and ``q = ||Delta_L|| / n``.
  ``G`` decreases in ``Y`` for ``Y <= n/2``, so the bound ``Y`` is the worst
  case.
* ``counting``, the same inequality with the internal edge count bounded by
  the trivial ``E_{C_beta,C_beta} <= x**2``.

Each new bound is the largest ``x`` in ``[0, min(b(beta), Y)]`` with
``G(x) <= 0``. Roots are inflated and gap tests shrunk by the relative
margin :data:`ROOT_MARGIN`.

Schedule
----------
A sweep visits targets ``beta`` in ascending grid order excluding ``pi/2``
and, for each target, every source ``alpha < beta`` at once. Rules are
reapplied at each target until its bound stops shrinking, after which every
bound right of that target is lowered to it. The bound at ``pi/2`` is thus
the minimum over all smaller angles. Sweeps repeat until that bound drops
below 1, until a sweep changes nothing or until ``max_sweeps``. Exhaustive
refinement skips the first of these stops.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import logging
import math
import numpy as np
from beartype import beartype
from synccert.cave import IntType
from synccert.roar import SyncCertCertifierParamException
from synccert._cert.certdata import (
    STRICT_MARGIN,
    CertificateInput,
    CertificationResult,
    Condition,
    CphiBoundTable,
    Verdict,
)
from synccert._cert.certmoment import (
    cphi_grid,
    cphi_initial_bounds,
    rho1_lower_bound,
)
from synccert._graph.graphmain import Graph, is_connected
from typing import Iterable, Optional, Tuple

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ GLOBALS                           }....................
logger = logging.getLogger(__name__)

# ....................{ CONSTANTS                         }....................
GRID_SIZE_DEFAULT = 1000
'''
Default number of angles in the sector bound grid.
'''


MAX_SWEEPS_DEFAULT = 100000
'''
Default maximum number of refinement sweeps.
'''


RULES_ALL = ('corollary', 'relative-size', 'counting')
'''
Names of all refinement rules, in application order.
'''


ROOT_MARGIN = 1e-12
'''
Relative margin inflating every root and shrinking every gap test.
'''


SWEEP_CHANGE_MIN = 1e-12
'''
Relative change in any bound below which a sweep counts as unchanged.
'''


_TARGET_CHANGE_MIN = 1e-9
'''
Relative change in a target bound below which rules stop being reapplied to
that target.
'''


_TARGET_ROUNDS_MAX = 100
'''
Maximum number of rounds of rules applied to a single target per sweep.
'''

# ....................{ STEPS                             }....................
@beartype
def amplify_step(
    table: CphiBoundTable,
    alpha_idx: IntType,
    beta_idx: IntType,
    input: CertificateInput,
) -> float:
    '''
    Apply the amplification corollary from the grid angle at ``alpha_idx``
    to the grid angle at ``beta_idx`` in place, then re-enforce monotonicity
    rightward.

    The step is **inapplicable** (and the table unchanged) unless
    ``alpha < beta < pi/2``, ``b(alpha) <= n/2``,
    ``b(beta) <= 2 ||Delta_A|| / p``, ``sin(beta - alpha) >= 12a`` and
    ``1/(2l) - 1 > 1``. Inapplicability is a normal outcome.

    Returns
    ----------
    float
        Bound at ``beta_idx`` after this step.

    Raises
    ----------
    SyncCertCertifierParamException
        If either index lies outside the grid.
    '''

    size = table.grid.size
    for index in (alpha_idx, beta_idx):
        if not 0 <= index < size:
            raise SyncCertCertifierParamException(
                f'Grid index {index} outside [0, {size}).')

    bounds = table.bounds
    if not alpha_idx < beta_idx < size - 1:
        logger.debug(
            'Amplification %d -> %d inapplicable: not alpha < beta < pi/2.',
            alpha_idx, beta_idx)
        return float(bounds[beta_idx])

    candidate = _get_corollary_bounds(
        y=bounds[alpha_idx:alpha_idx + 1],
        bound=float(bounds[beta_idx]),
        s=np.sin(table.grid[beta_idx] - table.grid[alpha_idx:alpha_idx + 1]),
        input=input,
    )[0]

    if candidate < bounds[beta_idx]:
        bounds[beta_idx] = candidate
        np.minimum(
            bounds[beta_idx + 1:], candidate, out=bounds[beta_idx + 1:])
    else:
        logger.debug('Amplification %d -> %d inapplicable.',
            alpha_idx, beta_idx)

    return float(bounds[beta_idx])

# ....................{ REFINERS                          }....................
@beartype
def refine(
    input: CertificateInput,
    grid_size: IntType = GRID_SIZE_DEFAULT,
    max_sweeps: IntType = MAX_SWEEPS_DEFAULT,
    rules: Iterable = RULES_ALL,
    graph: Optional[Graph] = None,
    snapshot: bool = False,
    exhaustive: bool = False,
) -> Tuple[CphiBoundTable, CertificationResult]:
    '''
    Certify global synchrony by iterative sector bound refinement.

    Parameters
    ----------
    input : CertificateInput
        Certificate input.
    grid_size : IntType
        Number of grid angles. Defaults to :data:`GRID_SIZE_DEFAULT`.
    max_sweeps : IntType
        Maximum number of sweeps. Defaults to :data:`MAX_SWEEPS_DEFAULT`.
    rules : Iterable
        Names of the rules to apply, a subset of :data:`RULES_ALL`.
        Defaults to all rules.
    graph : Optional[Graph]
        Explicit graph these norms describe *or* ``None``. If passed and
        ``l >= 1``, connectivity is decided by breadth-first search.
    snapshot : bool
        ``True`` only if the returned result embeds a copy of the final
        table. Defaults to ``False``.
    exhaustive : bool
        ``True`` only if sweeps continue past a bound at ``pi/2`` below 1
        until a sweep changes nothing, tightening the whole table. Defaults
        to ``False``.

    Returns
    ----------
    Tuple[CphiBoundTable, CertificationResult]
        2-tuple of the final table and a result whose method is
        ``'refine'``, tracing the conditions ``moment_bound``,
        ``connected`` and ``right_angle_bound``. Non-certification is a
        verdict rather than an error.

    Raises
    ----------
    SyncCertCertifierParamException
        If ``grid_size < 2``, ``max_sweeps < 1`` or an unknown rule is
        passed.
    '''

    rules = tuple(rules)
    for rule in rules:
        if rule not in RULES_ALL:
            raise SyncCertCertifierParamException(
                f'Refinement rule "{rule}" not in {RULES_ALL}.')
    if max_sweeps < 1:
        raise SyncCertCertifierParamException(
            f'Maximum sweeps {max_sweeps} not positive.')

    grid = cphi_grid(int(grid_size))
    rho1_lb = rho1_lower_bound(input.a)

    # Connectivity, required by the moment bound.
    if input.l < 1.0 or graph is None:
        connected = Condition.strict('connected', input.l, 1.0, '<')
    else:
        connected = Condition(
            name='connected',
            lhs=None,
            rhs=None,
            passed=is_connected(graph),
            relation='bfs',
        )

    sweeps = 0

    # If the moment bound collapsed, only the trivial table exists.
    if rho1_lb == 0.0:
        logger.info(
            'Moment bound collapsed at n=%d, p=%g (a=%g).',
            input.n, input.p, input.a)
        table = CphiBoundTable(
            grid=grid, bounds=np.full(grid.size, float(input.n)))
        right_angle = Condition.strict(
            'right_angle_bound', None, 1.0, '<')
    else:
        table = cphi_initial_bounds(input, rho1_lb, grid)
        sweeps = _sweep_until_stable(
            table, input, rules, int(max_sweeps), exhaustive)
        right_angle = Condition.strict(
            'right_angle_bound', table.right_angle_bound, 1.0, '<')

    conditions = (
        Condition.strict('moment_bound', rho1_lb, 0.0, '>'),
        connected,
        right_angle,
    )
    verdict = (
        Verdict.CERTIFIED
        if all(condition.passed for condition in conditions) else
        Verdict.NOT_CERTIFIED
    )

    logger.info(
        'Refinement at n=%d, p=%g: %s after %d sweeps (b(pi/2)=%g).',
        input.n, input.p, verdict.value, sweeps, table.right_angle_bound)

    result = CertificationResult(
        verdict=verdict,
        method='refine',
        conditions=conditions,
        confidence=input.norms.confidence,
        n=input.n,
        p=input.p,
        a=input.a,
        l=input.l,
        norm_source=input.norms.source.value,
        rho1_lb=rho1_lb,
        sweeps=sweeps,
        table=table.copy() if snapshot else None,
    )
    return table, result

# ....................{ PRIVATE ~ sweeps                  }....................
def _sweep_until_stable(
    table: CphiBoundTable,
    input: CertificateInput,
    rules: Tuple[str, ...],
    max_sweeps: int,
    exhaustive: bool,
) -> int:
    '''
    Sweep the passed table in place until its bound at ``pi/2`` drops below
    1 (unless ``exhaustive``), a sweep changes nothing or ``max_sweeps``
    sweeps ran, returning the number of sweeps run.
    '''

    bounds = table.bounds
    grid = table.grid
    half_n = input.n / 2.0

    for sweep in range(1, max_sweeps + 1):
        bounds_prior = bounds.copy()

        for beta_idx in range(grid.size - 1):
            _refine_target(table, beta_idx, input, rules, half_n)
            if bounds[-1] < 1.0 and not exhaustive:
                break

        changed = bool(np.any(
            bounds < bounds_prior * (1.0 - SWEEP_CHANGE_MIN)))
        logger.debug(
            'Sweep %d: b(pi/2)=%g, changed=%s.', sweep, bounds[-1], changed)

        if (bounds[-1] < 1.0 and not exhaustive) or not changed:
            return sweep

    return max_sweeps


def _refine_target(
    table: CphiBoundTable,
    beta_idx: int,
    input: CertificateInput,
    rules: Tuple[str, ...],
    half_n: float,
) -> None:
    '''
    Apply all passed rules from every admissible source to the grid angle at
    ``beta_idx`` until its bound stops shrinking, then lower every bound
    right of that angle to it.
    '''

    bounds = table.bounds

    if bounds[beta_idx] == 0.0:
        return

    sources = np.flatnonzero(bounds[:beta_idx] <= half_n)
    if not sources.size:
        return

    y = bounds[sources]
    s = np.sin(table.grid[beta_idx] - table.grid[sources])

    for _ in range(_TARGET_ROUNDS_MAX):
        bound = float(bounds[beta_idx])
        bound_new = bound

        for rule in rules:
            if rule == 'corollary':
                candidates = _get_corollary_bounds(y, bound, s, input)
            else:
                candidates = _get_quadratic_rule_bounds(
                    y, bound, s, input, counting=(rule == 'counting'))
            bound_new = min(bound_new, float(candidates.min()))

        if not bound_new < bound * (1.0 - _TARGET_CHANGE_MIN):
            if bound_new < bound:
                bounds[beta_idx] = bound_new
            break
        bounds[beta_idx] = bound_new

    np.minimum(
        bounds[beta_idx + 1:], bounds[beta_idx], out=bounds[beta_idx + 1:])

# ....................{ PRIVATE ~ rules                   }....................
def _get_corollary_bounds(
    y: np.ndarray,
    bound: float,
    s: np.ndarray,
    input: CertificateInput,
) -> np.ndarray:
    '''
    Array of the bounds on ``|C_beta|`` implied by the amplification
    corollary from each passed source bound, infinite where inapplicable.
    '''

    candidates = np.full(y.shape, math.inf)

    l = input.l
    factor = 1.0 / (2.0 * l) - 1.0 if l > 0.0 else math.inf
    if not factor > 1.0:
        return candidates
    elif bound > 2.0 * input.norms.norm_a / input.p:
        return candidates

    applicable = (
        (y <= input.n / 2.0) &
        (s >= 12.0 * input.a * (1.0 + STRICT_MARGIN))
    )
    candidates[applicable] = y[applicable] / factor
    return candidates


def _get_quadratic_rule_bounds(
    y: np.ndarray,
    bound: float,
    s: np.ndarray,
    input: CertificateInput,
    counting: bool,
) -> np.ndarray:
    '''
    Array of the bounds on ``|C_beta|`` implied by the ``relative-size``
    rule (if ``counting`` is ``False``) or the ``counting`` rule (otherwise)
    from each passed source bound.
    '''

    n = float(input.n)
    p = input.p
    q = input.norms.norm_l / n
    z = n - y

    if counting:
        c2 = s * q - 1.0
        c1 = s * p * z - s * q * y
    else:
        c2 = s * q - p
        c1 = s * p * z - s * q * y - input.norms.norm_a
    c0 = -s * q * z * y

    return _get_quadratic_bounds(c2, c1, c0, np.minimum(bound, y))


def _get_quadratic_bounds(
    c2: np.ndarray,
    c1: np.ndarray,
    c0: np.ndarray,
    upper: np.ndarray,
) -> np.ndarray:
    '''
    Array of the largest ``x`` in ``[0, upper]`` satisfying
    ``c2 x**2 + c1 x + c0 <= 0`` for each passed coefficient triple, where
    every ``c0 <= 0``.

    For concave quadratics, the feasible set is ``[0, r1]`` joined with
    ``[r2, inf)``; the bound drops to ``r1`` only if ``upper`` lies in the
    gap below ``r2``. For convex quadratics, the feasible set is
    ``[0, r+]``.
    '''

    bounds = upper.astype(np.float64, copy=True)
    disc = c1 * c1 - 4.0 * c2 * c0
    sqrt_disc = np.sqrt(np.maximum(disc, 0.0))

    with np.errstate(divide='ignore', invalid='ignore'):
        # Concave with two positive roots.
        concave = (c2 < 0.0) & (disc > 0.0) & (c1 > 0.0)
        root_high = (c1 + sqrt_disc) / (-2.0 * c2)
        root_low = c0 / (c2 * root_high)
        gapped = concave & (upper < root_high * (1.0 - ROOT_MARGIN))
        bounds[gapped] = np.minimum(
            upper[gapped], root_low[gapped] * (1.0 + ROOT_MARGIN))

        # Convex.
        convex = c2 > 0.0
        denominator = c1 + sqrt_disc
        root_plus = np.where(
            c1 >= 0.0,
            np.where(denominator > 0.0, -2.0 * c0 / denominator, 0.0),
            (-c1 + sqrt_disc) / (2.0 * c2),
        )
        bounds[convex] = np.minimum(
            upper[convex], root_plus[convex] * (1.0 + ROOT_MARGIN))

        # Linear.
        linear = (c2 == 0.0) & (c1 > 0.0)
        bounds[linear] = np.minimum(
            upper[linear], -c0[linear] / c1[linear] * (1.0 + ROOT_MARGIN))

    return bounds
