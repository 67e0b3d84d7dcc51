#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert phase states.**

This private submodule defines the :class:`PhaseState` of ``n`` identical
Kuramoto oscillators, its order parameters, the stray sets ``C_phi`` and the
energy and vector field of the gradient system

    d theta_j / dt = sum_k A_jk sin(theta_k - theta_j),

whose right-hand side is ``-grad E`` for the energy
``E(theta) = -1/2 sum_{j,k} A_jk cos(theta_k - theta_j)``.

Canonical frame
----------
Every quantity of this package indexed by an angle ``phi`` presumes the
**canonical frame**, in which all phases are shifted by ``-arg(rho_1)`` so
that ``rho_1`` is real and non-negative. When ``rho_1`` vanishes, no such
frame exists and the state records that it was left unrotated.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import math
import numpy as np
from beartype import beartype
from dataclasses import dataclass
from synccert.cave import IntType, RealType
from synccert.roar import SyncCertDynamicsParamException
from synccert._graph.graphmain import Graph, SEED_MAX, VertexSet
from typing import Tuple, Union

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ CONSTANTS                         }....................
FRAME_RHO1_MIN = 1e-12
'''
Magnitude of ``rho_1`` at or below which no canonical frame is applied.
'''

# ....................{ CLASSES                           }....................
@dataclass(frozen=True, eq=False)
class PhaseState(object):
    '''
    **Phase state** (i.e., immutable vector of oscillator phases in
    ``[-pi, pi)``).

    Attributes
    ----------
    theta : np.ndarray
        Read-only one-dimensional float array of phases in ``[-pi, pi)``.
    frame : bool
        ``True`` only if the phases were rotated into the canonical frame, in
        which ``rho_1`` is real and non-negative.
    '''

    theta: np.ndarray
    frame: bool = False

    def __post_init__(self) -> None:
        theta = np.array(self.theta, dtype=np.float64)
        if theta.ndim != 1:
            raise SyncCertDynamicsParamException(
                f'Phases not one-dimensional (shape {theta.shape}).')
        elif not np.all(np.isfinite(theta)):
            raise SyncCertDynamicsParamException('Phases not finite.')
        elif np.any(theta < -math.pi) or np.any(theta >= math.pi):
            raise SyncCertDynamicsParamException(
                'Phases outside [-pi, pi); canonicalize them first.')

        theta.setflags(write=False)
        object.__setattr__(self, 'theta', theta)


    @property
    def n(self) -> int:
        '''
        Number of oscillators.
        '''

        return len(self.theta)


    def __len__(self) -> int:
        return len(self.theta)


    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PhaseState):
            return NotImplemented
        return (
            self.frame == other.frame and
            np.array_equal(self.theta, other.theta)
        )


    def __hash__(self) -> int:
        return hash((self.frame, self.theta.tobytes()))


@dataclass(frozen=True)
class Moments(object):
    '''
    First and second order parameters ``rho_m = mean(exp(i m theta))``.
    '''

    rho1: complex
    rho2: complex

# ....................{ HINTS                             }....................
PhasesType = Union[PhaseState, np.ndarray]
'''
Type hint matching either a phase state *or* a raw array of phases.
'''

# ....................{ FACTORIES                         }....................
@beartype
def canonicalize(theta: PhasesType, rotate: bool = True) -> PhaseState:
    '''
    Phase state wrapping the passed phases into ``[-pi, pi)`` and, if
    ``rotate``, shifting them into the canonical frame.

    Parameters
    ----------
    theta : PhasesType
        Arbitrary finite phases.
    rotate : bool
        ``True`` only if the phases are rotated so that ``rho_1`` is real and
        non-negative. Rotation is skipped (and the resulting state flagged as
        unrotated) when ``|rho_1| <= 1e-12``. Defaults to ``True``.
    '''

    theta = _wrap(_get_theta(theta))

    if not rotate:
        return PhaseState(theta=theta, frame=False)

    rho1 = np.mean(np.exp(1j * theta))
    if abs(rho1) <= FRAME_RHO1_MIN:
        return PhaseState(theta=theta, frame=False)

    return PhaseState(theta=_wrap(theta - np.angle(rho1)), frame=True)


@beartype
def random_phases(n: IntType, seed: IntType) -> PhaseState:
    '''
    Unrotated phase state of ``n`` independent phases uniform on
    ``[-pi, pi)``, drawn from a PCG64 generator seeded by ``seed``.
    '''

    if n < 1:
        raise SyncCertDynamicsParamException(f'Oscillator count {n} < 1.')
    elif not 0 <= seed <= SEED_MAX:
        raise SyncCertDynamicsParamException(
            f'Seed {seed} outside [0, {SEED_MAX}].')

    rng = np.random.Generator(np.random.PCG64(int(seed)))
    return PhaseState(
        theta=_wrap(rng.uniform(-math.pi, math.pi, size=int(n))),
        frame=False,
    )


@beartype
def twisted_state(n: IntType, winding: IntType = 1) -> PhaseState:
    '''
    Unrotated **twisted state** ``theta_j = 2 pi winding j / n``, an
    equilibrium of the cycle graph on ``n`` vertices.
    '''

    if n < 1:
        raise SyncCertDynamicsParamException(f'Oscillator count {n} < 1.')

    j = np.arange(int(n), dtype=np.float64)
    return PhaseState(
        theta=_wrap(2.0 * math.pi * int(winding) * j / int(n)), frame=False)

# ....................{ GETTERS                           }....................
@beartype
def moments(state: PhasesType) -> Moments:
    '''
    Order parameters ``rho_1`` and ``rho_2`` of the passed phases.
    '''

    theta = _get_theta(state)
    if len(theta) == 0:
        raise SyncCertDynamicsParamException('Phases empty.')

    return Moments(
        rho1=complex(np.mean(np.exp(1j * theta))),
        rho2=complex(np.mean(np.exp(2j * theta))),
    )


@beartype
def c_phi(state: PhasesType, phi: RealType) -> VertexSet:
    '''
    **Stray set** ``C_phi = {k : cos(theta_k) <= cos(phi)}`` (i.e., the
    oscillators at angular distance at least ``phi`` from phase 0).

    The set is only meaningful in the canonical frame, where phase 0 is the
    direction of ``rho_1``.

    Raises
    ----------
    SyncCertDynamicsParamException
        If ``phi`` lies outside ``[0, pi]``.
    '''

    if not 0.0 <= phi <= math.pi:
        raise SyncCertDynamicsParamException(f'Angle {phi} outside [0, pi].')

    theta = _get_theta(state)
    return VertexSet.from_mask(
        np.cos(theta) <= math.cos(phi), len(theta))

# ....................{ FIELDS                            }....................
@beartype
def energy(g: Graph, theta: PhasesType) -> float:
    '''
    Energy ``E(theta) = -1/2 sum_{j,k} A_jk cos(theta_k - theta_j)`` of the
    gradient system on ``g``.
    '''

    c, s, Ac, As = _get_coupling(g, _get_theta_sized(g, theta))
    return -0.5 * float(c @ Ac + s @ As)


@beartype
def kuramoto_rhs(g: Graph, theta: PhasesType) -> np.ndarray:
    '''
    Vector field ``sum_k A_jk sin(theta_k - theta_j)`` of the gradient system
    on ``g``.
    '''

    return _get_rhs(g, _get_theta_sized(g, theta))

# ....................{ KERNELS                           }....................
@beartype
def kernel_K(alpha: RealType, beta: RealType) -> float:
    '''
    Comparison kernel whose weighted sums ``sum_j A_jk K(theta_j, theta_k)``
    are non-negative at every stable equilibrium.

    ``K(alpha, beta)`` is ``sin(|alpha| - |beta|)`` if both angles lie within
    ``pi/2`` of 0, ``-cos(alpha)`` if only ``alpha`` does and 1 otherwise.
    '''

    return float(kernel_matrix(
        np.array([alpha], dtype=np.float64),
        np.array([beta], dtype=np.float64),
    )[0])


def kernel_matrix(alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    '''
    Elementwise :func:`kernel_K` over two broadcastable arrays of angles.
    '''

    alpha_abs = np.abs(alpha)
    beta_abs = np.abs(beta)
    half_pi = math.pi / 2.0

    return np.where(
        alpha_abs > half_pi,
        1.0,
        np.where(
            beta_abs > half_pi,
            -np.cos(alpha),
            np.sin(alpha_abs - beta_abs),
        ),
    )

# ....................{ PRIVATE ~ fields                  }....................
def _get_coupling(
    g: Graph, theta: np.ndarray,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    '''
    4-tuple ``(cos theta, sin theta, A cos theta, A sin theta)``.
    '''

    c = np.cos(theta)
    s = np.sin(theta)
    A = g.adjacency
    return c, s, A @ c, A @ s


def _get_rhs(g: Graph, theta: np.ndarray) -> np.ndarray:
    '''
    Unvalidated :func:`kuramoto_rhs`.

    ``sin(theta_k - theta_j) = sin(theta_k) cos(theta_j) -
    cos(theta_k) sin(theta_j)`` turns the sum into two sparse products.
    '''

    c, s, Ac, As = _get_coupling(g, theta)
    return c * As - s * Ac

# ....................{ PRIVATE ~ getters                 }....................
def _get_theta(theta: PhasesType) -> np.ndarray:
    '''
    Float array of the passed phases.
    '''

    if isinstance(theta, PhaseState):
        return theta.theta

    theta = np.asarray(theta, dtype=np.float64)
    if theta.ndim != 1:
        raise SyncCertDynamicsParamException(
            f'Phases not one-dimensional (shape {theta.shape}).')
    elif not np.all(np.isfinite(theta)):
        raise SyncCertDynamicsParamException('Phases not finite.')
    return theta


def _get_theta_sized(g: Graph, theta: PhasesType) -> np.ndarray:
    '''
    Float array of the passed phases, validated against the size of ``g``.
    '''

    theta = _get_theta(theta)
    if len(theta) != g.n:
        raise SyncCertDynamicsParamException(
            f'Phase count {len(theta)} differs from graph size {g.n}.')
    return theta


def _wrap(theta: np.ndarray) -> np.ndarray:
    '''
    Passed phases wrapped into ``[-pi, pi)``.
    '''

    wrapped = np.mod(theta + math.pi, 2.0 * math.pi) - math.pi

    # Rounding may land a phase just below -pi on exactly pi.
    wrapped[wrapped >= math.pi] -= 2.0 * math.pi
    wrapped[wrapped < -math.pi] = -math.pi
    return wrapped
