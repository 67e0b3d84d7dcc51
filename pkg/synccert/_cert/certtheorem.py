#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert closed-form certificate.**

This private submodule checks the closed-form sufficient condition for global
synchrony:

#. ``a < 1/12``, which forces ``rho_1**2 > a`` at every stable equilibrium.
#. ``l < 1/4``, which makes the amplification factor
   ``g = 1 / (2l) - 1`` exceed 1.
#. ``(pi/2 - alpha) / asin(12a) > ln(n/6) / ln(g) + 1``, which guarantees
   enough room between ``alpha`` and ``pi/2`` to chain amplification steps
   from ``|C_alpha| < n/6`` down to ``|C_{pi/2}| < 1``.

This submodule also defines the deviation bounds on subset edge counts these
conditions rest on, exposed for exhaustive validation against explicit
graphs.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import logging
import math
from beartype import beartype
from synccert.cave import IntType, RealType
from synccert.roar import SyncCertCertifierParamException
from synccert._cert.certdata import (
    CertificateInput,
    CertificationResult,
    Condition,
    Verdict,
)
from typing import NamedTuple, Optional, Tuple

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ GLOBALS                           }....................
logger = logging.getLogger(__name__)

# ....................{ CONSTANTS                         }....................
ALPHA_DEFAULT = math.pi / 4
'''
Default angle from which the stabilization chain starts.
'''


ADJACENCY_RATIO_MAX = 1.0 / 12.0
'''
Exclusive upper bound on the adjacency ratio ``a``.
'''


LAPLACIAN_RATIO_MAX = 1.0 / 4.0
'''
Exclusive upper bound on the Laplacian ratio ``l``.
'''

# ....................{ CLASSES                           }....................
class StabilizationSteps(NamedTuple):
    '''
    Both sides of the stabilization condition.

    Attributes
    ----------
    available : Optional[float]
        Number of amplification steps of width ``asin(12a)`` fitting between
        ``alpha`` and ``pi/2``.
    required : Optional[float]
        Number of steps needed to shrink ``|C_alpha| < n/6`` below 1.
    '''

    available: Optional[float]
    required: Optional[float]

# ....................{ HELPERS                           }....................
@beartype
def corollary_amplification_factor(input: CertificateInput) -> float:
    '''
    Factor ``1 / (1 / (2l) - 1)`` by which one amplification step shrinks a
    sector bound.

    Returns 0 if ``l = 0`` and infinity if ``l >= 1/2`` (i.e., amplification
    is inapplicable).
    '''

    l = input.l
    if l == 0.0:
        return 0.0

    g = 1.0 / (2.0 * l) - 1.0
    return 1.0 / g if g > 0.0 else math.inf


@beartype
def stabilization_steps(
    input: CertificateInput, alpha: RealType = ALPHA_DEFAULT,
) -> StabilizationSteps:
    '''
    Both sides ``((pi/2 - alpha) / asin(12a), ln(n/6) / ln(g) + 1)`` of the
    stabilization condition, where ``g = 1 / (2l) - 1``.

    Mathematically infinite sides are infinite. Undefined sides (``12a > 1``
    or ``g <= 0``) are ``None``.

    Raises
    ----------
    SyncCertCertifierParamException
        If ``alpha`` lies outside ``(0, pi/2)``.
    '''

    if not 0.0 < alpha < math.pi / 2:
        raise SyncCertCertifierParamException(
            f'Angle {alpha} outside (0, pi/2).')

    a = input.a
    l = input.l

    # Steps available.
    if a == 0.0:
        available = math.inf
    elif 12.0 * a > 1.0:
        available = None
    else:
        available = (math.pi / 2 - alpha) / math.asin(12.0 * a)

    # Steps required.
    log_sixth = math.log(input.n / 6.0)
    if l == 0.0:
        required = 1.0
    else:
        g = 1.0 / (2.0 * l) - 1.0
        if g <= 0.0:
            required = None
        elif g == 1.0:
            required = (
                math.copysign(math.inf, log_sixth) if log_sixth else None)
        else:
            required = log_sixth / math.log(g) + 1.0

    return StabilizationSteps(available=available, required=required)

# ....................{ CHECKERS                          }....................
@beartype
def check_theorem(
    input: CertificateInput, alpha: RealType = ALPHA_DEFAULT,
) -> CertificationResult:
    '''
    Closed-form certificate of global synchrony.

    Parameters
    ----------
    input : CertificateInput
        Certificate input.
    alpha : RealType
        Angle in ``(0, pi/2)`` from which the stabilization chain starts.
        Defaults to ``pi/4``.

    Returns
    ----------
    CertificationResult
        Result whose method is ``'theorem'``, tracing the conditions
        ``adjacency_ratio``, ``laplacian_ratio`` and ``stabilization``.
    '''

    steps = stabilization_steps(input, alpha)
    conditions = (
        Condition.strict(
            'adjacency_ratio', input.a, ADJACENCY_RATIO_MAX, '<'),
        Condition.strict(
            'laplacian_ratio', input.l, LAPLACIAN_RATIO_MAX, '<'),
        Condition.strict(
            'stabilization', steps.available, steps.required, '>'),
    )

    verdict = (
        Verdict.CERTIFIED
        if all(condition.passed for condition in conditions) else
        Verdict.NOT_CERTIFIED
    )

    logger.info(
        'Theorem at n=%d, p=%g: %s (a=%g, l=%g, steps %s vs %s).',
        input.n, input.p, verdict.value, input.a, input.l,
        steps.available, steps.required)

    return CertificationResult(
        verdict=verdict,
        method='theorem',
        conditions=conditions,
        confidence=input.norms.confidence,
        n=input.n,
        p=input.p,
        a=input.a,
        l=input.l,
        norm_source=input.norms.source.value,
    )

# ....................{ DEVIATION BOUNDS                  }....................
@beartype
def subset_deviation_bound(norm_a: RealType, size: IntType) -> float:
    '''
    Bound ``||Delta_A|| |C|`` on ``|E_{C,C} - p |C|**2|`` for every vertex
    set ``C`` of size ``size``.
    '''

    return float(norm_a) * float(size)


@beartype
def two_set_deviation_bound(
    norm_l: RealType, n: IntType, size1: IntType, size2: IntType) -> float:
    '''
    Bound ``||Delta_L|| |C_1| |C_2| / n`` on
    ``|E_{C_1,C_2} - p |C_1| |C_2||`` for every bipartition ``(C_1, C_2)``
    of the vertices.
    '''

    return float(norm_l) * float(size1) * float(size2) / float(n)


@beartype
def three_set_deviation_bound(
    norm_l: RealType,
    n: IntType,
    size1: IntType,
    size2: IntType,
    size3: IntType,
) -> float:
    '''
    Bound ``||Delta_L|| (|C_1||C_2| + |C_1||C_3| + |C_2||C_3|) / n`` on
    ``|E_{C_1,C_2} - p |C_1| |C_2||`` for every tripartition
    ``(C_1, C_2, C_3)`` of the vertices.
    '''

    size1 = float(size1)
    size2 = float(size2)
    size3 = float(size3)
    return float(norm_l) * (
        size1 * size2 + size1 * size3 + size2 * size3) / float(n)


@beartype
def relative_size_conclusion(
    n: IntType,
    p: RealType,
    norm_a: RealType,
    norm_l: RealType,
    size1: IntType,
    size2: IntType,
    size3: IntType,
    lam: RealType,
) -> Tuple[float, float]:
    '''
    Both sides of the relative-size conclusion
    ``|C_2| + |C_3| >= (n (p|C_1| - p lam |C_3| - lam ||Delta_A||) /
    (||Delta_L|| |C_1|) - 1) |C_3|``.

    The conclusion holds for every tripartition ``(C_1, C_2, C_3)`` with
    ``E_{C_1,C_3} <= lam E_{C_3,C_3}`` and ``|C_2| < |C_1|``.

    Returns
    ----------
    Tuple[float, float]
        2-tuple ``(lhs, rhs)``. If ``|C_3| = 0`` the right side is 0; if
        ``||Delta_L|| |C_1| = 0`` it is infinite with the sign of its
        numerator.
    '''

    lhs = float(size2 + size3)
    if size3 == 0:
        return lhs, 0.0

    numerator = float(n) * (
        float(p) * size1 - float(p) * float(lam) * size3 -
        float(lam) * float(norm_a)
    )
    denominator = float(norm_l) * size1

    if denominator == 0.0:
        rhs = math.inf if numerator > 0.0 else -math.inf
    else:
        rhs = (numerator / denominator - 1.0) * size3

    return lhs, rhs
