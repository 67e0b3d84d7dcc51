#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert stable-equilibrium inequality suite.**

This private submodule evaluates, at a stable equilibrium found by
simulation, every inequality the certificates of this package assume holds
at *all* stable equilibria. A failed check falsifies either an inequality or
its implementation; passing checks are evidence, never proof.

Checks
----------
``kernel``
    ``sum_j A_jk K(theta_j, theta_k) >= 0`` for every vertex ``k``.
``edges``
    ``E_{C_b,C_b} >= sin(b - a) E_{C_b, V - C_a}`` for sampled angle pairs
    ``0 < a < b < pi/2``.
``delta_a_q``
    ``||Delta_A q||**2 >= n**2 p**2 rho_1**2 (sum_j sin(theta_j)**2 +
    sum_{cos(theta_j) <= 0} cos(theta_j)**2)`` for ``q = exp(i theta)``.
``first_bound``
    ``|C_phi| <= ||Delta_A||**2 / (n p**2 rho_1**2 sin(phi)**2)`` on a grid
    of angles.
``moment``
    ``rho_1**2 >= (1 + |rho_2|**2) / 2 - 2 ||Delta_A|| / (np)``.
``bridge``
    ``exp(-i theta_j) (A q)_j`` is real and non-negative for every ``j``.
``half_circle``
    If no phase lies at or beyond ``pi/2``, the state is all-in-phase.
``trace``
    ``sum_{j,k} A_jk cos(theta_k - theta_j) (1 - cos(theta_k - theta_j))
    >= 0``.

Checks ``first_bound`` and ``half_circle`` depend on the canonical frame and
are skipped when ``rho_1`` vanishes.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import logging
import math
import numpy as np
from beartype import beartype
from dataclasses import dataclass
from enum import Enum
from synccert.cave import IntType, RealOrNoneType
from synccert.roar import (
    SyncCertDynamicsEquilibriumException,
    SyncCertFrameWarning,
)
from synccert._dynamics.dynintegrate import (
    EQUILIBRIUM_RESIDUAL_MAX,
    EquilibriumReport,
)
from synccert._dynamics.dynstate import c_phi, kernel_matrix, moments
from synccert._graph.graphmain import (
    Graph,
    density,
    edge_count,
)
from synccert._spectral.spectralbound import SpectralEstimates
from synccert._spectral.spectralnorm import estimates_from_graph
from typing import Callable, Dict, Optional, Tuple
from warnings import warn

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ GLOBALS                           }....................
logger = logging.getLogger(__name__)

# ....................{ CONSTANTS                         }....................
SLACK_PER_VERTEX = 1e-6
'''
Default slack of every check as a multiple of the vertex count.
'''


BRIDGE_TOL = 1e-8
'''
Slack of the ``bridge`` check, matching the stability slack.
'''


HALF_CIRCLE_TOL = 1e-8
'''
Maximum gap ``1 - rho_1`` of an all-in-phase state.
'''


PAIR_GRID_SIZE_DEFAULT = 16
'''
Default number of angles in ``(0, pi/2)`` whose ordered pairs the ``edges``
check samples.
'''


PHI_GRID_SIZE_DEFAULT = 64
'''
Default number of angles in ``(0, pi/2]`` the ``first_bound`` check visits.
'''

# ....................{ ENUMERATIONS                      }....................
class CheckStatus(Enum):
    '''
    Outcome of one inequality check.
    '''

    PASSED = 'pass'
    FAILED = 'fail'
    SKIPPED = 'skipped'

# ....................{ CLASSES                           }....................
@dataclass(frozen=True)
class InequalityCheck(object):
    '''
    Outcome of one inequality check.

    Attributes
    ----------
    name : str
        Check name.
    status : CheckStatus
        Outcome.
    margin : Optional[float]
        Worst-case signed margin (i.e., satisfied side minus bounded side)
        over every instance checked *or* ``None`` if skipped or vacuous.
    '''

    name: str
    status: CheckStatus
    margin: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.status is not CheckStatus.FAILED


@dataclass(frozen=True)
class InequalitySuiteResult(object):
    '''
    Outcome of the full inequality suite at one stable equilibrium.
    '''

    checks: Tuple[InequalityCheck, ...]
    slack: float

    @property
    def passed(self) -> bool:
        '''
        ``True`` only if no check failed.
        '''

        return all(check.passed for check in self.checks)


    def get_check(self, name: str) -> InequalityCheck:
        '''
        Check with the passed name.

        Raises
        ----------
        KeyError
            If no check has this name.
        '''

        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(f'Check "{name}" not found.')

# ....................{ SUITES                            }....................
@beartype
def stable_equilibrium_inequality_suite(
    g: Graph,
    report: EquilibriumReport,
    p: RealOrNoneType = None,
    norms: Optional[SpectralEstimates] = None,
    slack: RealOrNoneType = None,
    pair_grid_size: IntType = PAIR_GRID_SIZE_DEFAULT,
    phi_grid_size: IntType = PHI_GRID_SIZE_DEFAULT,
) -> InequalitySuiteResult:
    '''
    Evaluate every stable-equilibrium inequality at the passed equilibrium.

    Parameters
    ----------
    g : Graph
        Coupling graph.
    report : EquilibriumReport
        Integration report of a stable equilibrium of ``g``.
    p : RealOrNoneType
        Reference probability *or* ``None`` to take that of ``norms`` or,
        failing that, the density of ``g``.
    norms : Optional[SpectralEstimates]
        Upper bounds on ``||Delta_A||`` at ``p`` *or* ``None`` to compute
        exact norms.
    slack : RealOrNoneType
        Absolute slack of every check *or* ``None`` for ``1e-6 n``.
    pair_grid_size : IntType
        Number of angles whose pairs the ``edges`` check samples.
    phi_grid_size : IntType
        Number of angles the ``first_bound`` check visits.

    Raises
    ----------
    SyncCertDynamicsEquilibriumException
        If ``report`` is not a stable equilibrium.
    '''

    if report.stable is not True:
        raise SyncCertDynamicsEquilibriumException(
            f'Report not a stable equilibrium (stable={report.stable}).')
    elif not report.residual < EQUILIBRIUM_RESIDUAL_MAX:
        raise SyncCertDynamicsEquilibriumException(
            f'Report not an equilibrium (residual {report.residual} >= '
            f'{EQUILIBRIUM_RESIDUAL_MAX}).')

    if p is None:
        p = norms.p if norms is not None else density(g)
    if norms is None:
        norms = estimates_from_graph(g, p=p, method='exact')
    if slack is None:
        slack = SLACK_PER_VERTEX * g.n

    p = float(p)
    slack = float(slack)
    state = report.state
    theta = state.theta
    rho = moments(state)

    # Sparse coordinates of every ordered adjacent pair (j, k).
    coo = g.adjacency.tocoo()
    rows = coo.row
    cols = coo.col

    q = np.exp(1j * theta)
    Aq = g.adjacency @ q

    def _get_kernel() -> float:
        weights = kernel_matrix(theta[rows], theta[cols])
        sums = np.bincount(cols, weights=weights, minlength=g.n)
        return float(sums.min())

    def _get_edges() -> Optional[float]:
        angles = np.linspace(0.0, math.pi / 2.0, int(pair_grid_size) + 2)[1:-1]
        margin = math.inf
        for b_idx, beta in enumerate(angles):
            C_beta = c_phi(theta, beta)
            for alpha in angles[:b_idx]:
                C_alpha_bar = c_phi(theta, alpha).complement(g.n)
                margin = min(
                    margin,
                    edge_count(g, C_beta, C_beta) -
                    math.sin(beta - alpha) *
                    edge_count(g, C_beta, C_alpha_bar),
                )
        return None if margin == math.inf else float(margin)

    def _get_delta_a_q() -> float:
        lhs = float(np.sum(np.abs(Aq - p * g.n * rho.rho1)**2))
        cos_theta = np.cos(theta)
        rhs = (g.n * p * abs(rho.rho1))**2 * float(
            np.sum(np.sin(theta)**2) +
            np.sum(cos_theta[cos_theta <= 0.0]**2)
        )
        return lhs - rhs

    def _get_first_bound() -> float:
        phis = np.linspace(0.0, math.pi / 2.0, int(phi_grid_size) + 1)[1:]
        scale = norms.norm_a**2 / (g.n * p * p * abs(rho.rho1)**2)
        return min(
            scale / math.sin(phi)**2 - len(c_phi(theta, phi))
            for phi in phis
        )

    def _get_moment() -> float:
        return abs(rho.rho1)**2 - (
            (1.0 + abs(rho.rho2)**2) / 2.0 - 2.0 * norms.norm_a / (g.n * p))

    def _get_bridge() -> float:
        z = np.exp(-1j * theta) * Aq
        return float(min(z.real.min(), -np.abs(z.imag).max()))

    def _get_half_circle() -> Optional[float]:
        if len(c_phi(theta, math.pi / 2.0)):
            return None
        return abs(rho.rho1) - (1.0 - HALF_CIRCLE_TOL)

    def _get_trace() -> float:
        cos_diff = np.cos(theta[cols] - theta[rows])
        return float(np.sum(cos_diff * (1.0 - cos_diff)))

    checkers: Dict[str, Tuple[Callable[[], Optional[float]], float, bool]] = {
        'kernel': (_get_kernel, slack, False),
        'edges': (_get_edges, slack, False),
        'delta_a_q': (_get_delta_a_q, slack, False),
        'first_bound': (_get_first_bound, slack, True),
        'moment': (_get_moment, slack, False),
        'bridge': (_get_bridge, BRIDGE_TOL, False),
        'half_circle': (_get_half_circle, 0.0, True),
        'trace': (_get_trace, slack, False),
    }

    checks = []
    skipped = []
    for name, (checker, tolerance, needs_frame) in checkers.items():
        if needs_frame and not state.frame:
            skipped.append(name)
            checks.append(InequalityCheck(name, CheckStatus.SKIPPED))
            continue

        margin = checker()
        status = (
            CheckStatus.PASSED
            if margin is None or margin >= -tolerance else
            CheckStatus.FAILED
        )
        checks.append(InequalityCheck(name, status, margin))

        if status is CheckStatus.FAILED:
            logger.warning(
                'Check "%s" failed at a stable equilibrium (margin %g).',
                name, margin)

    if skipped:
        warn(
            f'rho_1 = 0 leaves no canonical frame; checks {skipped} skipped.',
            SyncCertFrameWarning,
        )

    return InequalitySuiteResult(checks=tuple(checks), slack=slack)
