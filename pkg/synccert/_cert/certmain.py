#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert certification front door.**

This private submodule composes spectral estimation with the closed-form and
refinement certificates behind the single :func:`certify` call.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import logging
from beartype import beartype
from dataclasses import replace
from synccert.cave import IntOrNoneType, IntType, RealOrNoneType, RealType
from synccert.roar import (
    SyncCertCertifierParamException,
    SyncCertNormOverrideWarning,
)
from synccert._cert.certdata import CertificateInput, CertificationResult
from synccert._cert.certrefine import (
    GRID_SIZE_DEFAULT,
    MAX_SWEEPS_DEFAULT,
    refine,
)
from synccert._cert.certtheorem import ALPHA_DEFAULT, check_theorem
from synccert._graph.graphmain import DENSE_THRESHOLD_DEFAULT, Graph
from synccert._spectral.spectralbound import (
    SpectralEstimates,
    SpectralSource,
    estimates_from_formula,
)
from synccert._spectral.spectralnorm import TOL_DEFAULT, estimates_from_graph
from typing import Optional
from warnings import warn

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ GLOBALS                           }....................
logger = logging.getLogger(__name__)

# ....................{ CONSTANTS                         }....................
CERTIFY_METHODS = frozenset(('theorem', 'refine', 'auto'))
'''
Frozen set of the names of all certification methods.
'''


NORM_SOURCES = frozenset(('formula', 'exact', 'power'))
'''
Frozen set of the names of all norm sources.
'''

# ....................{ CERTIFIERS                        }....................
@beartype
def certify(
    n: IntOrNoneType = None,
    p: RealOrNoneType = None,
    norm_source: str = 'formula',
    method: str = 'auto',
    graph: Optional[Graph] = None,
    grid_size: IntType = GRID_SIZE_DEFAULT,
    max_sweeps: IntType = MAX_SWEEPS_DEFAULT,
    tol: RealType = TOL_DEFAULT,
    norm_a: RealOrNoneType = None,
    norm_l: RealOrNoneType = None,
    alpha: RealType = ALPHA_DEFAULT,
    snapshot: bool = False,
    dense_threshold: IntType = DENSE_THRESHOLD_DEFAULT,
) -> CertificationResult:
    '''
    Certify global synchrony of either the Erdős–Rényi graph ``G(n, p)``
    (with high probability) or an explicit graph (unconditionally).

    Parameters
    ----------
    n : IntOrNoneType
        Vertex count. Required by the formula source and otherwise taken from
        ``graph``.
    p : RealOrNoneType
        Reference probability. Required by the formula source and otherwise
        defaulting to the density of ``graph``.
    norm_source : str
        Either ``'formula'`` (the concentration surrogate ``f(n, p)``),
        ``'exact'`` (dense eigensolve of ``graph``) or ``'power'`` (power
        iteration on ``graph``). Defaults to ``'formula'``.
    method : str
        Either ``'theorem'``, ``'refine'`` or ``'auto'``, which checks the
        theorem and falls back to refinement. Defaults to ``'auto'``.
    graph : Optional[Graph]
        Explicit graph required by the graph norm sources *or* ``None``.
    grid_size : IntType
        Number of refinement grid angles.
    max_sweeps : IntType
        Maximum number of refinement sweeps.
    tol : RealType
        Relative tolerance of power iteration.
    norm_a : RealOrNoneType
        User-supplied ``||Delta_A||`` replacing the computed value *or*
        ``None``.
    norm_l : RealOrNoneType
        User-supplied ``||Delta_L||`` replacing the computed value *or*
        ``None``.
    alpha : RealType
        Starting angle of the closed-form certificate.
    snapshot : bool
        ``True`` only if refinement results embed their final table.
    dense_threshold : IntType
        Maximum vertex count of the exact norm source.

    Returns
    ----------
    CertificationResult
        Result of the last certificate checked. Under ``'auto'``, this is
        the theorem result if certified and the refinement result otherwise.

    Raises
    ----------
    SyncCertCertifierParamException
        If ``norm_source`` or ``method`` is unknown, a graph norm source is
        requested without a graph or the formula source is requested without
        ``n`` and ``p``.
    '''

    if norm_source not in NORM_SOURCES:
        raise SyncCertCertifierParamException(
            f'Norm source "{norm_source}" not in {sorted(NORM_SOURCES)}.')
    elif method not in CERTIFY_METHODS:
        raise SyncCertCertifierParamException(
            f'Certification method "{method}" not in '
            f'{sorted(CERTIFY_METHODS)}.')

    norms = _get_norms(
        n=n,
        p=p,
        norm_source=norm_source,
        graph=graph,
        tol=tol,
        norm_a=norm_a,
        norm_l=norm_l,
        dense_threshold=dense_threshold,
    )
    input = CertificateInput(norms=norms)

    if method in ('theorem', 'auto'):
        result = check_theorem(input, alpha)
        if method == 'theorem' or result.certified:
            return result
        logger.info('Theorem inconclusive; refining.')

    _, result = refine(
        input,
        grid_size=grid_size,
        max_sweeps=max_sweeps,
        graph=graph,
        snapshot=snapshot,
    )
    return result

# ....................{ PRIVATE ~ getters                 }....................
def _get_norms(
    n: Optional[int],
    p: Optional[float],
    norm_source: str,
    graph: Optional[Graph],
    tol: float,
    norm_a: Optional[float],
    norm_l: Optional[float],
    dense_threshold: int,
) -> SpectralEstimates:
    '''
    Spectral estimates from the passed norm source with user overrides
    applied.
    '''

    if norm_source != 'formula':
        if graph is None:
            raise SyncCertCertifierParamException(
                f'Norm source "{norm_source}" requires a graph.')
        elif n is not None and n != graph.n:
            raise SyncCertCertifierParamException(
                f'Vertex count {n} differs from graph size {graph.n}.')

        return estimates_from_graph(
            graph,
            p=p,
            method=norm_source,
            tol=tol,
            override_a=norm_a,
            override_l=norm_l,
            dense_threshold=dense_threshold,
        )
    # Else, bound norms by the concentration surrogate.

    if n is None and graph is not None:
        n = graph.n
    if n is None or p is None:
        raise SyncCertCertifierParamException(
            'Norm source "formula" requires a vertex count and probability.')

    norms = estimates_from_formula(n, p)

    if norm_a is None and norm_l is None:
        return norms

    warn(
        f'Formula norms ({norms.norm_a}, {norms.norm_l}) overridden by '
        f'user-supplied values ({norm_a}, {norm_l}); certificates are only '
        f'as sound as these values.',
        SyncCertNormOverrideWarning,
    )
    return replace(
        norms,
        norm_a=norms.norm_a if norm_a is None else float(norm_a),
        norm_l=norms.norm_l if norm_l is None else float(norm_l),
        source=SpectralSource.OVERRIDE,
    )
