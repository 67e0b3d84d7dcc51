#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert equilibrium finder.**

This private submodule integrates the homogeneous Kuramoto gradient system
with a fixed-step fourth-order Runge–Kutta scheme until its vector field
vanishes and classifies the equilibrium reached by the sign of the Hessian of
its energy restricted to the complement of the global rotation.

Simulation is evidence, never proof: stable non-synchronous equilibria may
have basins too small for random initial phases to ever find.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import logging
import math
import numpy as np
from beartype import beartype
from dataclasses import dataclass, field
from scipy.linalg import eigh
from synccert.cave import IntType, RealOrNoneType, RealType
from synccert.roar import (
    SyncCertDynamicsEquilibriumException,
    SyncCertDynamicsParamException,
)
from synccert._dynamics.dynstate import (
    PhasesType,
    PhaseState,
    _get_rhs,
    _get_theta_sized,
    canonicalize,
    energy,
)
from synccert._graph.graphmain import DENSE_THRESHOLD_DEFAULT, Graph, to_dense
from typing import Optional, Tuple

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ GLOBALS                           }....................
logger = logging.getLogger(__name__)

# ....................{ CONSTANTS                         }....................
STEP_SCALE = 0.5
'''
Default integration step as a multiple of ``1 / max_degree``.
'''


RESIDUAL_TOL_DEFAULT = 1e-10
'''
Default maximum residual ``max_j |d theta_j / dt|`` of an equilibrium.
'''


MAX_TIME_DEFAULT = 5000.0
'''
Default integration time after which integration gives up.
'''


STABILITY_TOL_DEFAULT = 1e-8
'''
Default slack on the smallest restricted Hessian eigenvalue of a stable
equilibrium.
'''


EQUILIBRIUM_RESIDUAL_MAX = 1e-8
'''
Maximum residual of a state accepted as an equilibrium by the Hessian test
and the inequality suite.
'''

# ....................{ CLASSES                           }....................
@dataclass(frozen=True, eq=False)
class EquilibriumReport(object):
    '''
    Outcome of one integration.

    Attributes
    ----------
    state : PhaseState
        Final phases in the canonical frame (when one exists).
    residual : float
        Final residual ``max_j |sum_k A_jk sin(theta_k - theta_j)|``.
    converged : bool
        ``True`` only if the residual fell below the requested tolerance
        before the time limit.
    time : float
        Integration time elapsed.
    steps : int
        Number of accepted steps.
    energies : np.ndarray
        Read-only energies at the initial state and after every step.
    stable : Optional[bool]
        Hessian verdict *or* ``None`` if unconverged or too large for a
        dense eigensolve.
    hessian_second_eigenvalue : Optional[float]
        Smallest Hessian eigenvalue on the complement of the all-ones vector
        (i.e., the second smallest overall) *or* ``None`` as above.
    '''

    state: PhaseState
    residual: float
    converged: bool
    time: float
    steps: int
    energies: np.ndarray = field(repr=False)
    stable: Optional[bool] = None
    hessian_second_eigenvalue: Optional[float] = None

    def __post_init__(self) -> None:
        assert self.residual >= 0.0, f'Residual {self.residual} negative.'

        energies = np.array(self.energies, dtype=np.float64)
        energies.setflags(write=False)
        object.__setattr__(self, 'energies', energies)

# ....................{ INTEGRATORS                       }....................
@beartype
def integrate(
    g: Graph,
    theta0: PhasesType,
    step: RealOrNoneType = None,
    residual_tol: RealType = RESIDUAL_TOL_DEFAULT,
    max_time: RealType = MAX_TIME_DEFAULT,
    stability_tol: RealType = STABILITY_TOL_DEFAULT,
    dense_threshold: IntType = DENSE_THRESHOLD_DEFAULT,
) -> EquilibriumReport:
    '''
    Integrate the Kuramoto gradient system on ``g`` from ``theta0`` until
    equilibrium or the time limit.

    Parameters
    ----------
    g : Graph
        Coupling graph.
    theta0 : PhasesType
        Initial phases, one per vertex.
    step : RealOrNoneType
        Fixed integration step *or* ``None`` for ``0.5 / max_degree``.
    residual_tol : RealType
        Residual below which integration stops. Defaults to
        :data:`RESIDUAL_TOL_DEFAULT`.
    max_time : RealType
        Integration time limit. Defaults to :data:`MAX_TIME_DEFAULT`.
    stability_tol : RealType
        Slack of the Hessian test. Defaults to
        :data:`STABILITY_TOL_DEFAULT`.
    dense_threshold : IntType
        Maximum vertex count for which the Hessian test runs.

    Returns
    ----------
    EquilibriumReport
        Report whose ``converged`` is ``False`` if the time limit elapsed
        first. Stability is classified only for converged states.

    Raises
    ----------
    SyncCertDynamicsParamException
        If ``theta0`` does not have one phase per vertex or ``step``,
        ``residual_tol`` or ``max_time`` is not positive.
    '''

    theta = np.array(_get_theta_sized(g, theta0), dtype=np.float64)

    if step is None:
        step = STEP_SCALE / max(g.max_degree, 1)
    if not step > 0.0:
        raise SyncCertDynamicsParamException(f'Step {step} not positive.')
    elif not residual_tol > 0.0:
        raise SyncCertDynamicsParamException(
            f'Residual tolerance {residual_tol} not positive.')
    elif not max_time > 0.0:
        raise SyncCertDynamicsParamException(
            f'Time limit {max_time} not positive.')

    h = float(step)
    time = 0.0
    steps = 0
    energies = [energy(g, theta)]

    k1 = _get_rhs(g, theta)
    residual = _get_residual(k1)

    while residual >= residual_tol and time < max_time:
        k2 = _get_rhs(g, theta + 0.5 * h * k1)
        k3 = _get_rhs(g, theta + 0.5 * h * k2)
        k4 = _get_rhs(g, theta + h * k3)
        theta = theta + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

        time += h
        steps += 1
        energies.append(energy(g, theta))

        k1 = _get_rhs(g, theta)
        residual = _get_residual(k1)

    converged = residual < residual_tol
    state = canonicalize(theta)

    stable = None
    second_eigenvalue = None
    if converged and g.n <= dense_threshold:
        stable, second_eigenvalue = hessian_stability(
            g, state, tol=stability_tol)

    logger.debug(
        'Integration on %d vertices: %s after t=%g (%d steps, residual %g, '
        'stable %s).',
        g.n, 'converged' if converged else 'unconverged', time, steps,
        residual, stable)

    return EquilibriumReport(
        state=state,
        residual=residual,
        converged=converged,
        time=time,
        steps=steps,
        energies=np.asarray(energies),
        stable=stable,
        hessian_second_eigenvalue=second_eigenvalue,
    )

# ....................{ TESTERS                           }....................
@beartype
def hessian_stability(
    g: Graph,
    state: PhasesType,
    tol: RealType = STABILITY_TOL_DEFAULT,
    dense_threshold: IntType = DENSE_THRESHOLD_DEFAULT,
) -> Tuple[bool, float]:
    '''
    Classify the passed equilibrium by its energy Hessian.

    The Hessian has off-diagonal entries ``-A_jk cos(theta_k - theta_j)`` and
    diagonal entries ``sum_{k != j} A_jk cos(theta_k - theta_j)``. It always
    annihilates the all-ones vector (i.e., the global rotation), so
    stability is decided on its restriction to the orthogonal complement,
    computed by a Householder reflection mapping the all-ones direction onto
    the first coordinate.

    Returns
    ----------
    Tuple[bool, float]
        2-tuple ``(stable, second_eigenvalue)``, where ``second_eigenvalue``
        is the smallest restricted eigenvalue and ``stable`` is ``True`` only
        if it is at least ``-tol``. A single oscillator is trivially stable
        with infinite second eigenvalue.

    Raises
    ----------
    SyncCertDynamicsEquilibriumException
        If the residual at ``state`` is not below
        :data:`EQUILIBRIUM_RESIDUAL_MAX`.
    SyncCertGraphDenseException
        If ``g.n`` exceeds ``dense_threshold``.
    '''

    theta = _get_theta_sized(g, state)
    residual = _get_residual(_get_rhs(g, theta))
    if not residual < EQUILIBRIUM_RESIDUAL_MAX:
        raise SyncCertDynamicsEquilibriumException(
            f'State not an equilibrium (residual {residual} >= '
            f'{EQUILIBRIUM_RESIDUAL_MAX}).')

    n = g.n
    if n == 1:
        return True, math.inf

    A = to_dense(g, dense_threshold)
    W = A * np.cos(theta[np.newaxis, :] - theta[:, np.newaxis])
    np.fill_diagonal(W, 0.0)
    H = np.diag(W.sum(axis=1)) - W

    # Householder reflection P = I - 2 u u^T / (u^T u) swapping the unit
    # all-ones vector and e_1. Columns 2..n of P span the complement.
    u = np.full(n, 1.0 / math.sqrt(n))
    u[0] -= 1.0
    P = np.eye(n) - 2.0 * np.outer(u, u) / float(u @ u)
    H_restricted = (P @ H @ P)[1:, 1:]

    second_eigenvalue = float(eigh(
        H_restricted, eigvals_only=True, subset_by_index=(0, 0))[0])
    return second_eigenvalue >= -tol, second_eigenvalue

# ....................{ PRIVATE ~ getters                 }....................
def _get_residual(rhs: np.ndarray) -> float:
    '''
    Maximum absolute entry of the passed vector field *or* 0 if empty.
    '''

    return float(np.abs(rhs).max()) if rhs.size else 0.0
