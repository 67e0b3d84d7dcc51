#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert simulation trials.**

This private submodule integrates one graph from many independent random
initial phases on a thread pool and runs the inequality suite at every
stable equilibrium reached.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import logging
import numpy as np
from beartype import beartype
from dataclasses import dataclass
from synccert.cave import IntOrNoneType, IntType, RealOrNoneType, RealType
from synccert.roar import SyncCertDynamicsParamException
from synccert._dynamics.dynintegrate import (
    MAX_TIME_DEFAULT,
    RESIDUAL_TOL_DEFAULT,
    integrate,
)
from synccert._dynamics.dynstate import moments, random_phases
from synccert._dynamics.dynsuite import (
    InequalitySuiteResult,
    stable_equilibrium_inequality_suite,
)
from synccert._graph.graphmain import (
    DENSE_THRESHOLD_DEFAULT,
    SEED_MAX,
    Graph,
    density,
)
from synccert._spectral.spectralbound import SpectralEstimates
from synccert._spectral.spectralnorm import estimates_from_graph
from synccert._util.utilthread import map_threaded
from typing import Optional, Sequence, Tuple

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ GLOBALS                           }....................
logger = logging.getLogger(__name__)

# ....................{ CONSTANTS                         }....................
SYNC_RHO1_MIN = 1.0 - 1e-6
'''
Order parameter above which a trial counts as synchronized.
'''

# ....................{ CLASSES                           }....................
@dataclass(frozen=True)
class TrialRecord(object):
    '''
    Outcome of one simulation trial.

    Attributes
    ----------
    index : int
        0-based trial index.
    seed : int
        Seed of the initial phases, derived from the run seed.
    converged : bool
        ``True`` only if integration reached an equilibrium.
    rho1 : float
        Final ``|rho_1|``.
    residual : float
        Final residual.
    stable : Optional[bool]
        Hessian verdict *or* ``None`` if unclassified.
    suite : Optional[InequalitySuiteResult]
        Inequality suite result at a stable equilibrium *or* ``None``.
    '''

    index: int
    seed: int
    converged: bool
    rho1: float
    residual: float
    stable: Optional[bool]
    suite: Optional[InequalitySuiteResult] = None

    @property
    def synchronized(self) -> bool:
        return self.converged and self.rho1 > SYNC_RHO1_MIN


@dataclass(frozen=True)
class TrialSummary(object):
    '''
    Counts aggregated over many simulation trials.
    '''

    trials: int
    converged: int
    stable: int
    synchronized: int
    suite_failures: int

# ....................{ RUNNERS                           }....................
@beartype
def run_trials(
    g: Graph,
    trials: IntType,
    seed: IntType = 0,
    p: RealOrNoneType = None,
    norms: Optional[SpectralEstimates] = None,
    max_time: RealType = MAX_TIME_DEFAULT,
    residual_tol: RealType = RESIDUAL_TOL_DEFAULT,
    suite: bool = True,
    threads: IntOrNoneType = None,
    dense_threshold: IntType = DENSE_THRESHOLD_DEFAULT,
) -> Tuple[TrialRecord, ...]:
    '''
    Integrate ``g`` from ``trials`` independent random initial phases.

    Trial seeds are spawned from ``seed`` by :class:`numpy.random.SeedSequence`,
    so every trial is reproducible from ``(seed, index)`` alone regardless of
    the number of threads.

    Parameters
    ----------
    g : Graph
        Coupling graph.
    trials : IntType
        Number of trials. Must be positive.
    seed : IntType
        Run seed. Defaults to 0.
    p : RealOrNoneType
        Reference probability of the inequality suite *or* ``None`` for the
        density of ``g``.
    norms : Optional[SpectralEstimates]
        Norms of the inequality suite *or* ``None`` to compute them once,
        exactly up to ``dense_threshold`` vertices and by power iteration
        beyond.
    max_time : RealType
        Integration time limit per trial.
    residual_tol : RealType
        Residual tolerance per trial.
    suite : bool
        ``True`` only if the inequality suite runs at stable equilibria.
        Defaults to ``True``.
    threads : IntOrNoneType
        Maximum number of threads *or* ``None`` for the default.
    dense_threshold : IntType
        Maximum vertex count of dense linear algebra.

    Raises
    ----------
    SyncCertDynamicsParamException
        If ``trials`` is not positive or ``seed`` is out of range.
    '''

    if trials < 1:
        raise SyncCertDynamicsParamException(
            f'Trial count {trials} not positive.')
    elif not 0 <= seed <= SEED_MAX:
        raise SyncCertDynamicsParamException(
            f'Seed {seed} outside [0, {SEED_MAX}].')

    if suite and norms is None:
        norms = estimates_from_graph(
            g,
            p=density(g) if p is None else p,
            method='exact' if g.n <= dense_threshold else 'power',
            dense_threshold=dense_threshold,
        )

    seeds = [
        int(child.generate_state(1, dtype=np.uint64)[0])
        for child in np.random.SeedSequence(int(seed)).spawn(int(trials))
    ]

    def _run(index: int) -> TrialRecord:
        report = integrate(
            g,
            random_phases(g.n, seeds[index]),
            residual_tol=residual_tol,
            max_time=max_time,
            dense_threshold=dense_threshold,
        )

        suite_result = None
        if suite and report.stable:
            suite_result = stable_equilibrium_inequality_suite(
                g, report, p=p, norms=norms)

        record = TrialRecord(
            index=index,
            seed=seeds[index],
            converged=report.converged,
            rho1=abs(moments(report.state).rho1),
            residual=report.residual,
            stable=report.stable,
            suite=suite_result,
        )
        logger.debug(
            'Trial %d (seed %d): converged=%s, rho_1=%.12g, stable=%s.',
            index, record.seed, record.converged, record.rho1, record.stable)
        return record

    return tuple(map_threaded(_run, range(int(trials)), threads=threads))


@beartype
def summarize_trials(records: Sequence[TrialRecord]) -> TrialSummary:
    '''
    Counts aggregated over the passed trial records.
    '''

    summary = TrialSummary(
        trials=len(records),
        converged=sum(record.converged for record in records),
        stable=sum(record.stable is True for record in records),
        synchronized=sum(record.synchronized for record in records),
        suite_failures=sum(
            record.suite is not None and not record.suite.passed
            for record in records
        ),
    )

    logger.info(
        '%d/%d trials converged, %d stable, %d synchronized, '
        '%d inequality suite failures.',
        summary.converged, summary.trials, summary.stable,
        summary.synchronized, summary.suite_failures)
    return summary
