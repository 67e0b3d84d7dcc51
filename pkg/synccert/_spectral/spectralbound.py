#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert spectral bounds.**

This private submodule defines the :class:`SpectralEstimates` record consumed
by every certificate together with the bounds on the spectral norms of the
shifted adjacency matrix ``Delta_A = A - pJ`` and the centred Laplacian
``Delta_L = L + pJ - npI`` that require no eigensolve: the probabilistic
surrogate :func:`f_bound` and the deterministic Gershgorin bounds.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import math
import numpy as np
from beartype import beartype
from dataclasses import dataclass
from enum import Enum
from synccert.cave import IntType, RealType
from synccert.roar import SyncCertSpectralParamException
from synccert._graph.graphmain import Graph, degree_vector
from typing import Optional

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ CONSTANTS                         }....................
F_BOUND_MARGIN = 2.0**-40
'''
Relative margin inflating every evaluation of :func:`f_bound`, preserving
upper-bound semantics under round-to-nearest.
'''

# ....................{ ENUMERATIONS                      }....................
class SpectralSource(Enum):
    '''
    Enumeration of all **spectral norm sources** (i.e., provenances of the
    norm values recorded by a :class:`SpectralEstimates` instance).

    Attributes
    ----------
    FORMULA : str
        Norms bounded by the concentration surrogate ``f(n, p)``, holding
        only with the recorded probability.
    EXACT : str
        Norms computed by a dense symmetric eigensolve of an explicit graph.
    ESTIMATED : str
        Norms estimated by power iteration on an explicit graph and inflated
        by the convergence tolerance.
    OVERRIDE : str
        Norms supplied by the user. Certificates built from these are only as
        sound as the supplied values.
    '''

    FORMULA = 'formula'
    EXACT = 'exact'
    ESTIMATED = 'estimated'
    OVERRIDE = 'override'

# ....................{ CLASSES                           }....................
@dataclass(frozen=True)
class SpectralEstimates(object):
    '''
    **Spectral estimates** (i.e., upper bounds on ``||Delta_A||`` and
    ``||Delta_L||`` together with their provenance).

    Attributes
    ----------
    n : int
        Vertex count.
    p : float
        Reference probability in ``(0, 1]``.
    norm_a : float
        Upper bound on ``||A - pJ||``.
    norm_l : float
        Upper bound on ``||L + pJ - npI||``.
    source : SpectralSource
        Provenance of these norms.
    confidence : float
        Probability that both bounds hold: ``1 - 4/n`` for formula bounds and
        1 otherwise.
    direction : str
        Direction of error. Always ``'upper'``: certificates only ever
        consume upper bounds on norms.
    tolerance : Optional[float]
        Relative convergence tolerance for estimated norms *or* ``None``.
    '''

    n: int
    p: float
    norm_a: float
    norm_l: float
    source: SpectralSource
    confidence: float = 1.0
    direction: str = 'upper'
    tolerance: Optional[float] = None

    def __post_init__(self) -> None:

        if not (self.norm_a >= 0.0 and self.norm_l >= 0.0):
            raise SyncCertSpectralParamException(
                f'Norms ({self.norm_a}, {self.norm_l}) not non-negative.')
        elif not 0.0 < self.p <= 1.0:
            raise SyncCertSpectralParamException(
                f'Reference probability {self.p} outside (0, 1].')
        elif not 0.0 <= self.confidence <= 1.0:
            raise SyncCertSpectralParamException(
                f'Confidence {self.confidence} outside [0, 1].')

# ....................{ BOUNDS ~ formula                  }....................
@beartype
def f_bound(n: IntType, p: RealType) -> float:
    '''
    Concentration surrogate ``f(n, p) = 2 sqrt(n ln(n) p (1 - p)) +
    4 ln(n) / 3``, an upper bound on ``||A - pJ||`` holding for the
    Erdős–Rényi graph ``G(n, p)`` with probability exceeding ``1 - 2/n``.

    The logarithm is natural. The result is inflated by the relative margin
    :data:`F_BOUND_MARGIN`.

    Raises
    ----------
    SyncCertSpectralParamException
        If ``n < 2`` or ``p`` lies outside ``[0, 1]``.
    '''

    if n < 2:
        raise SyncCertSpectralParamException(f'Vertex count {n} < 2.')
    elif not 0.0 <= p <= 1.0:
        raise SyncCertSpectralParamException(
            f'Probability {p} outside [0, 1].')

    n = float(n)
    p = float(p)
    log_n = math.log(n)
    bound = 2.0 * math.sqrt(n * log_n * p * (1.0 - p)) + 4.0 * log_n / 3.0
    return bound * (1.0 + F_BOUND_MARGIN)


@beartype
def estimates_from_formula(n: IntType, p: RealType) -> SpectralEstimates:
    '''
    Spectral estimates ``(f(n, p), 2 f(n, p))`` for the Erdős–Rényi graph
    ``G(n, p)``, jointly holding with probability at least ``1 - 4/n``.

    Raises
    ----------
    SyncCertSpectralParamException
        If ``n < 2`` or ``p`` lies outside ``(0, 1]``.
    '''

    if not 0.0 < p <= 1.0:
        raise SyncCertSpectralParamException(
            f'Probability {p} outside (0, 1].')

    norm_a = f_bound(n, p)
    return SpectralEstimates(
        n=int(n),
        p=float(p),
        norm_a=norm_a,
        norm_l=2.0 * norm_a,
        source=SpectralSource.FORMULA,
        confidence=max(0.0, 1.0 - 4.0 / float(n)),
    )

# ....................{ BOUNDS ~ gershgorin               }....................
@beartype
def gershgorin_bound_delta_a(g: Graph, p: RealType) -> float:
    '''
    Gershgorin upper bound on ``||A - pJ||``, the largest absolute row sum
    ``max_j deg_j (1 - p) + (n - deg_j) p``.
    '''

    _validate_probability(p)
    degrees = degree_vector(g).astype(np.float64)
    rows = degrees * (1.0 - p) + (g.n - degrees) * p
    return float(rows.max())


@beartype
def gershgorin_bound_delta_l(g: Graph, p: RealType) -> float:
    '''
    Gershgorin upper bound on ``||L + pJ - npI||``.

    With ``deg'_j`` the degree of vertex ``j`` excluding its self-loop, row
    ``j`` of this matrix has diagonal ``deg'_j + p - np``, ``deg'_j``
    off-diagonal entries ``p - 1`` and ``n - 1 - deg'_j`` off-diagonal
    entries ``p``.
    '''

    _validate_probability(p)
    degrees = (
        degree_vector(g) - g.adjacency.diagonal()).astype(np.float64)
    rows = (
        np.abs(degrees + p - g.n * p) +
        degrees * (1.0 - p) +
        (g.n - 1 - degrees) * p
    )
    return float(rows.max())

# ....................{ PRIVATE ~ validators              }....................
def _validate_probability(p: float) -> None:

    if not 0.0 <= p <= 1.0:
        raise SyncCertSpectralParamException(
            f'Probability {p} outside [0, 1].')
