#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert spectral norms.**

This private submodule computes the spectral norms of the shifted adjacency
matrix ``Delta_A = A - pJ`` and the centred Laplacian
``Delta_L = L + pJ - npI`` of an explicit graph, either exactly by a dense
symmetric eigensolve or approximately by power iteration on an implicit
:class:`scipy.sparse.linalg.LinearOperator` never materializing ``pJ``.

Power iteration
----------
The estimator iterates ``Delta`` itself but measures convergence on
``Delta**2``, whose dominant eigenvalue is ``||Delta||**2`` whichever end of
the spectrum of ``Delta`` dominates. Each iteration computes ``y = Delta x``
and ``w = Delta y`` for a unit vector ``x``, the Rayleigh quotient
``mu = ||y||**2`` and the residual ``r = w - mu x``, stopping once
``||r|| <= tol mu``. The returned estimate ``sqrt(mu) (1 + tol)`` is capped
by the Gershgorin bound, which is always a valid upper bound.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import logging
import numpy as np
from beartype import beartype
from scipy.linalg import eigh
from scipy.sparse.linalg import LinearOperator
from synccert.cave import IntType, RealOrNoneType, RealType
from synccert.roar import (
    SyncCertNormOverrideWarning,
    SyncCertSpectralConvergenceException,
    SyncCertSpectralParamException,
)
from synccert._graph.graphmain import (
    DENSE_THRESHOLD_DEFAULT,
    Graph,
    degree_vector,
    density,
    to_dense,
)
from synccert._spectral.spectralbound import (
    SpectralEstimates,
    SpectralSource,
    gershgorin_bound_delta_a,
    gershgorin_bound_delta_l,
)
from warnings import warn

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ GLOBALS                           }....................
logger = logging.getLogger(__name__)

# ....................{ CONSTANTS                         }....................
NORM_METHODS = frozenset(('exact', 'power'))
'''
Frozen set of the names of all supported norm computation methods.
'''


TOL_DEFAULT = 1e-6
'''
Default relative tolerance of power iteration.
'''


MAX_ITER_CAP = 100000
'''
Maximum number of power iterations regardless of graph size and tolerance.
'''

# ....................{ NORMS                             }....................
@beartype
def spectral_norm_delta_a(
    g: Graph,
    p: RealType,
    method: str = 'exact',
    tol: RealType = TOL_DEFAULT,
    dense_threshold: IntType = DENSE_THRESHOLD_DEFAULT,
    seed: IntType = 0,
) -> float:
    '''
    Spectral norm of the shifted adjacency matrix ``A - pJ`` of the passed
    graph.

    Parameters
    ----------
    g : Graph
        Graph to be inspected.
    p : RealType
        Reference probability in ``[0, 1]``.
    method : str
        Either:

        * ``'exact'``, the largest eigenvalue magnitude of the dense matrix.
          Requires ``g.n <= dense_threshold``.
        * ``'power'``, an upper estimate by power iteration on the implicit
          operator ``x -> Ax - p (1^T x) 1``.

        Defaults to ``'exact'``.
    tol : RealType
        Relative tolerance in ``(0, 1)`` of power iteration. Ignored by the
        exact method. Defaults to :data:`TOL_DEFAULT`.
    dense_threshold : IntType
        Maximum vertex count of the exact method.
    seed : IntType
        Seed of the power iteration start vector. Defaults to 0.

    Returns
    ----------
    float
        Either the exact norm *or* an upper estimate of this norm.

    Raises
    ----------
    SyncCertSpectralParamException
        If ``p``, ``method`` or ``tol`` is invalid.
    SyncCertSpectralConvergenceException
        If power iteration exhausts its iteration budget.
    SyncCertGraphDenseException
        If the exact method is requested above the dense threshold.
    '''

    _validate_params(p, method, tol)
    p = float(p)

    if method == 'exact':
        delta = to_dense(g, dense_threshold) - p
        return _get_dense_norm(delta)
    # Else, estimate this norm by power iteration.

    adjacency = g.adjacency.astype(np.float64)

    def _matvec(x: np.ndarray) -> np.ndarray:
        x = np.ravel(x)
        return adjacency @ x - p * x.sum()

    operator = LinearOperator(
        (g.n, g.n), matvec=_matvec, rmatvec=_matvec, dtype=np.float64)
    return _get_power_norm(
        operator=operator,
        bound=gershgorin_bound_delta_a(g, p),
        tol=float(tol),
        seed=int(seed),
        project_ones=False,
        label='||A - pJ||',
    )


@beartype
def spectral_norm_delta_l(
    g: Graph,
    p: RealType,
    method: str = 'exact',
    tol: RealType = TOL_DEFAULT,
    dense_threshold: IntType = DENSE_THRESHOLD_DEFAULT,
    seed: IntType = 0,
) -> float:
    '''
    Spectral norm of the centred Laplacian ``L + pJ - npI`` of the passed
    graph (i.e., of ``L - E[L]`` for the Erdős–Rényi graph ``G(n, p)`` with
    self-loops).

    The all-ones vector lies in the kernel of this matrix. Power iteration
    therefore projects that vector out of every iterate.

    See Also
    ----------
    :func:`spectral_norm_delta_a`
        Further details on parameters and exceptions.
    '''

    _validate_params(p, method, tol)
    p = float(p)
    n = g.n

    if method == 'exact':
        adjacency = to_dense(g, dense_threshold)
        delta = np.diag(adjacency.sum(axis=1)) - adjacency + p
        delta[np.diag_indices(n)] -= n * p
        return _get_dense_norm(delta)
    # Else, estimate this norm by power iteration.

    adjacency = g.adjacency.astype(np.float64)
    degrees = degree_vector(g).astype(np.float64)

    def _matvec(x: np.ndarray) -> np.ndarray:
        x = np.ravel(x)
        return (degrees - n * p) * x - adjacency @ x + p * x.sum()

    operator = LinearOperator(
        (n, n), matvec=_matvec, rmatvec=_matvec, dtype=np.float64)
    return _get_power_norm(
        operator=operator,
        bound=gershgorin_bound_delta_l(g, p),
        tol=float(tol),
        seed=int(seed),
        project_ones=True,
        label='||L + pJ - npI||',
    )

# ....................{ ESTIMATES                         }....................
@beartype
def estimates_from_graph(
    g: Graph,
    p: RealOrNoneType = None,
    method: str = 'exact',
    tol: RealType = TOL_DEFAULT,
    override_a: RealOrNoneType = None,
    override_l: RealOrNoneType = None,
    dense_threshold: IntType = DENSE_THRESHOLD_DEFAULT,
    seed: IntType = 0,
) -> SpectralEstimates:
    '''
    Spectral estimates of the passed explicit graph.

    Parameters
    ----------
    g : Graph
        Graph to be inspected.
    p : RealOrNoneType
        Reference probability in ``(0, 1]`` *or* ``None``, in which case the
        density of this graph is used. Defaults to ``None``.
    method : str
        Norm computation method. See :func:`spectral_norm_delta_a`.
    tol : RealType
        Relative tolerance of power iteration.
    override_a : RealOrNoneType
        User-supplied value replacing ``||Delta_A||`` *or* ``None``.
    override_l : RealOrNoneType
        User-supplied value replacing ``||Delta_L||`` *or* ``None``.
    dense_threshold : IntType
        Maximum vertex count of the exact method.
    seed : IntType
        Seed of the power iteration start vector.

    Returns
    ----------
    SpectralEstimates
        Estimates of confidence 1 whose source is ``override`` if either
        norm was overridden and otherwise ``exact`` or ``estimated``.

    Raises
    ----------
    SyncCertSpectralParamException
        If the reference probability is not in ``(0, 1]`` (e.g., this graph
        has no edges and ``p`` was not passed).

    Warns
    ----------
    SyncCertNormOverrideWarning
        If either norm is overridden.
    '''

    if p is None:
        p = density(g)
        logger.debug('Reference probability defaulted to density %g.', p)
    if not 0.0 < p <= 1.0:
        raise SyncCertSpectralParamException(
            f'Reference probability {p} outside (0, 1].')
    p = float(p)

    if override_a is None:
        norm_a = spectral_norm_delta_a(
            g, p, method, tol, dense_threshold=dense_threshold, seed=seed)
    else:
        norm_a = float(override_a)

    if override_l is None:
        norm_l = spectral_norm_delta_l(
            g, p, method, tol, dense_threshold=dense_threshold, seed=seed)
    else:
        norm_l = float(override_l)

    if override_a is not None or override_l is not None:
        warn(
            f'Norms overridden by user-supplied values '
            f'(||Delta_A|| = {norm_a}, ||Delta_L|| = {norm_l}); '
            f'certificates are only as sound as these values.',
            SyncCertNormOverrideWarning,
        )
        source = SpectralSource.OVERRIDE
    elif method == 'exact':
        source = SpectralSource.EXACT
    else:
        source = SpectralSource.ESTIMATED

    return SpectralEstimates(
        n=g.n,
        p=p,
        norm_a=norm_a,
        norm_l=norm_l,
        source=source,
        confidence=1.0,
        tolerance=float(tol) if source is SpectralSource.ESTIMATED else None,
    )

# ....................{ PRIVATE ~ validators              }....................
def _validate_params(p: float, method: str, tol: float) -> None:

    if not 0.0 <= p <= 1.0:
        raise SyncCertSpectralParamException(
            f'Probability {p} outside [0, 1].')
    elif method not in NORM_METHODS:
        raise SyncCertSpectralParamException(
            f'Norm method "{method}" not in {sorted(NORM_METHODS)}.')
    elif not 0.0 < tol < 1.0:
        raise SyncCertSpectralParamException(
            f'Tolerance {tol} outside (0, 1).')

# ....................{ PRIVATE ~ getters                 }....................
def _get_dense_norm(delta: np.ndarray) -> float:
    '''
    Largest eigenvalue magnitude of the passed dense symmetric matrix.
    '''
    assert isinstance(delta, np.ndarray), f'{repr(delta)} not array.'

    eigenvalues = eigh(delta, eigvals_only=True)
    return float(np.abs(eigenvalues).max())


def _get_power_norm(
    operator: LinearOperator,
    bound: float,
    tol: float,
    seed: int,
    project_ones: bool,
    label: str,
) -> float:
    '''
    Upper estimate of the spectral norm of the passed symmetric operator by
    power iteration on its square.

    Parameters
    ----------
    operator : LinearOperator
        Symmetric operator whose norm is estimated.
    bound : float
        Guaranteed upper bound on this norm capping the estimate.
    tol : float
        Relative tolerance of the residual test.
    seed : int
        Seed of the normally distributed start vector.
    project_ones : bool
        ``True`` only if the all-ones vector lies in the kernel of this
        operator and is projected out of every iterate.
    label : str
        Human-readable name of this norm embedded in messages.
    '''

    # A vanishing Gershgorin bound pins the norm to 0.
    if bound == 0.0:
        logger.debug('%s bounded by 0.', label)
        return 0.0

    n = operator.shape[0]
    max_iter = int(min(10.0 * n * tol**-0.5, MAX_ITER_CAP))

    rng = np.random.Generator(np.random.PCG64(seed))
    x = rng.standard_normal(n)

    for iteration in range(1, max_iter + 1):
        if project_ones:
            x = x - x.mean()

        x_norm = np.linalg.norm(x)

        # If this iterate vanished, the operator is zero on the span of all
        # prior iterates. A random start vector only lands there when the
        # operator is zero outright.
        if x_norm == 0.0:
            logger.debug('%s iterate vanished; norm 0.', label)
            return 0.0
        x = x / x_norm

        y = operator.matvec(x)
        w = operator.matvec(y)
        mu = float(y @ y)

        if mu == 0.0:
            logger.debug('%s Rayleigh quotient vanished; norm 0.', label)
            return 0.0

        residual = float(np.linalg.norm(w - mu * x))
        if residual <= tol * mu:
            estimate = min(np.sqrt(mu) * (1.0 + tol), bound)
            logger.debug(
                '%s ~ %g after %d iterations (residual %g, bound %g).',
                label, estimate, iteration, residual, bound)
            return float(estimate)

        x = w

    raise SyncCertSpectralConvergenceException(
        f'{label} power iteration unconverged after {max_iter} iterations '
        f'(best bound {bound}).',
        bound=bound,
        iterations=max_iter,
    )
