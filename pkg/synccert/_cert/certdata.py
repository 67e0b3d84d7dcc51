#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert certificate data.**

This private submodule defines the value types flowing through the
certificate chain: the :class:`CertificateInput` derived from spectral
estimates, the mutable :class:`CphiBoundTable` refined by the refinement
engine, and the immutable :class:`Condition`, :class:`CertificationResult`
and :class:`ThresholdSearchResult` records serialized by the command-line
front end.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import math
import numpy as np
from dataclasses import dataclass, field
from enum import Enum
from synccert.roar import SyncCertCertifierParamException
from synccert._spectral.spectralbound import SpectralEstimates
from typing import Optional, Tuple

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ CONSTANTS                         }....................
STRICT_MARGIN = 1e-12
'''
Relative slack by which every strict inequality must pass.
'''

# ....................{ ENUMERATIONS                      }....................
class Verdict(Enum):
    '''
    Enumeration of all **certification verdicts.**
    '''

    CERTIFIED = 'certified'
    NOT_CERTIFIED = 'not_certified'

# ....................{ CLASSES ~ input                   }....................
@dataclass(frozen=True)
class CertificateInput(object):
    '''
    **Certificate input** (i.e., vertex count, reference probability and
    spectral estimates from which the norm ratios ``a`` and ``l`` derive).

    The ratios are properties recomputed from the estimates on every access
    and hence never stored inconsistently.

    Attributes
    ----------
    norms : SpectralEstimates
        Upper bounds on ``||Delta_A||`` and ``||Delta_L||``.
    '''

    norms: SpectralEstimates

    @property
    def n(self) -> int:
        '''
        Vertex count.
        '''

        return self.norms.n


    @property
    def p(self) -> float:
        '''
        Reference probability in ``(0, 1]``.
        '''

        return self.norms.p


    @property
    def a(self) -> float:
        '''
        Adjacency ratio ``||Delta_A|| / (np)``.
        '''

        return self.norms.norm_a / (self.n * self.p)


    @property
    def l(self) -> float:
        '''
        Laplacian ratio ``||Delta_L|| / (np)``.
        '''

        return self.norms.norm_l / (self.n * self.p)

# ....................{ CLASSES ~ table                   }....................
@dataclass(eq=False)
class CphiBoundTable(object):
    '''
    **Sector bound table** (i.e., upper bounds ``b_i`` on the sizes of the
    stray sets ``C_phi = {k : cos(theta_k) <= cos(phi)}`` over a grid of
    angles ``phi`` spanning ``(0, pi/2]``).

    Since ``C_beta`` is a subset of ``C_alpha`` for ``alpha < beta``, every
    valid table may be made **monotone** (i.e., non-increasing along the
    grid) without loss of soundness.

    Attributes
    ----------
    grid : np.ndarray
        Read-only strictly increasing angles whose last item is ``pi/2``.
    bounds : np.ndarray
        Non-negative upper bounds, one per angle.
    '''

    grid: np.ndarray
    bounds: np.ndarray

    def __post_init__(self) -> None:

        if self.grid.shape != self.bounds.shape:
            raise SyncCertCertifierParamException(
                f'Grid shape {self.grid.shape} differs from '
                f'bounds shape {self.bounds.shape}.')
        elif not self.grid.size:
            raise SyncCertCertifierParamException('Grid empty.')
        elif not math.isclose(self.grid[-1], math.pi / 2):
            raise SyncCertCertifierParamException(
                f'Grid last angle {self.grid[-1]} not pi/2.')

    # ..................{ PROPERTIES                        }..................
    @property
    def right_angle_bound(self) -> float:
        '''
        Upper bound on ``|C_{pi/2}|``, the number of oscillators outside the
        half-circle centred at the mean phase.
        '''

        return float(self.bounds[-1])

    # ..................{ MUTATORS                          }..................
    def enforce_monotone(self) -> None:
        '''
        Lower every bound to the minimum of all bounds at smaller angles.
        '''

        np.minimum.accumulate(self.bounds, out=self.bounds)


    def copy(self) -> 'CphiBoundTable':
        return CphiBoundTable(grid=self.grid, bounds=self.bounds.copy())

# ....................{ CLASSES ~ results                 }....................
@dataclass(frozen=True)
class Condition(object):
    '''
    **Traced condition** (i.e., one inequality checked by a certificate).

    Attributes
    ----------
    name : str
        Machine-readable condition name.
    lhs : Optional[float]
        Left-hand side, possibly infinite, *or* ``None`` if undefined.
    rhs : Optional[float]
        Right-hand side, possibly infinite, *or* ``None`` if undefined.
    passed : bool
        ``True`` only if this inequality held with the strict margin.
    relation : str
        Relation checked between both sides (e.g., ``'<'``).
    '''

    name: str
    lhs: Optional[float]
    rhs: Optional[float]
    passed: bool
    relation: str = '<'

    @classmethod
    def strict(
        cls,
        name: str,
        lhs: Optional[float],
        rhs: Optional[float],
        relation: str,
    ) -> 'Condition':
        '''
        Condition checking ``lhs < rhs`` or ``lhs > rhs`` with relative slack
        :data:`STRICT_MARGIN` on the passing side.

        Undefined sides fail. Infinite sides compare as is.
        '''
        assert relation in ('<', '>'), f'{repr(relation)} not "<" or ">".'

        if lhs is None or rhs is None:
            passed = False
        else:
            slack = STRICT_MARGIN * abs(rhs) if math.isfinite(rhs) else 0.0
            passed = (
                lhs < rhs - slack if relation == '<' else lhs > rhs + slack)

        return cls(
            name=name, lhs=lhs, rhs=rhs, passed=passed, relation=relation)


@dataclass(frozen=True)
class CertificationResult(object):
    '''
    **Certification result** (i.e., verdict plus a machine-readable trace of
    every condition checked).

    Attributes
    ----------
    verdict : Verdict
        Certified only if every traced condition passed.
    method : str
        Certificate producing this verdict: ``'theorem'`` or ``'refine'``.
    conditions : Tuple[Condition, ...]
        Every condition checked, in check order.
    confidence : float
        Probability inherited from the spectral estimates that this verdict
        is sound.
    n : int
        Vertex count.
    p : float
        Reference probability.
    a : float
        Adjacency ratio ``||Delta_A|| / (np)``.
    l : float
        Laplacian ratio ``||Delta_L|| / (np)``.
    norm_source : str
        Provenance of the spectral estimates.
    rho1_lb : Optional[float]
        Lower bound on the order parameter of every stable equilibrium used
        by refinement *or* ``None``.
    sweeps : int
        Refinement sweeps performed.
    table : Optional[CphiBoundTable]
        Snapshot of the final sector bound table if requested *or* ``None``.
    '''

    verdict: Verdict
    method: str
    conditions: Tuple[Condition, ...]
    confidence: float
    n: int
    p: float
    a: float
    l: float
    norm_source: str
    rho1_lb: Optional[float] = None
    sweeps: int = 0
    table: Optional[CphiBoundTable] = field(default=None, compare=False)

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED


    def get_condition(self, name: str) -> Condition:
        '''
        Traced condition with the passed name.

        Raises
        ----------
        KeyError
            If no such condition was traced.
        '''

        for condition in self.conditions:
            if condition.name == name:
                return condition
        raise KeyError(f'Condition "{name}" not traced.')


@dataclass(frozen=True)
class ThresholdSearchResult(object):
    '''
    **Threshold search result.**

    Attributes
    ----------
    n : int
        Vertex count.
    p_star : float
        Smallest certifying probability found, to relative tolerance
        ``tol_p``.
    method : str
        Certificate method probed.
    tol_p : float
        Relative tolerance of this search.
    probes : Tuple[Tuple[float, bool], ...]
        Every ``(p, certified)`` probe in evaluation order.
    '''

    n: int
    p_star: float
    method: str
    tol_p: float
    probes: Tuple[Tuple[float, bool], ...] = field(default_factory=tuple)
