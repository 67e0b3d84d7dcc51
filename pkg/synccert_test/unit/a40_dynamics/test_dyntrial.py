#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert simulation trial unit tests.**

This submodule unit tests the public API of the private
:mod:`synccert._dynamics.dyntrial` submodule.
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: To raise human-readable test errors, avoid importing from
# package-specific submodules at module scope.
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
from synccert.roar import SyncCertFrameWarning
from synccert_test.util.mark.pytmark import ignore_warnings, slow
from pytest import raises

# ....................{ TESTS                             }....................
def test_run_trials_complete_graph() -> None:
    '''
    Test that every trial on a complete graph synchronizes and passes the
    inequality suite.
    '''

    # Defer heavyweight imports.
    from synccert._dynamics.dyntrial import run_trials, summarize_trials
    from synccert._graph.graphmain import complete_graph

    g = complete_graph(12)
    records = run_trials(g, trials=4, seed=5, threads=1)
    assert [record.index for record in records] == [0, 1, 2, 3]
    assert len({record.seed for record in records}) == 4

    for record in records:
        assert record.converged is True
        assert record.stable is True
        assert record.synchronized is True
        assert record.suite is not None
        assert record.suite.passed is True

    summary = summarize_trials(records)
    assert summary.trials == 4
    assert summary.converged == 4
    assert summary.stable == 4
    assert summary.synchronized == 4
    assert summary.suite_failures == 0


def test_run_trials_reproducible() -> None:
    '''
    Test that trials depend only on the run seed, not the thread count.
    '''

    # Defer heavyweight imports.
    from synccert._dynamics.dyntrial import run_trials
    from synccert._graph.graphmain import sample_er

    g = sample_er(30, 0.4, 8)

    def _digest(records):
        return [
            (record.seed, record.converged, record.rho1, record.stable)
            for record in records
        ]

    serial = run_trials(g, trials=6, seed=17, suite=False, threads=1)
    parallel = run_trials(g, trials=6, seed=17, suite=False, threads=3)
    assert _digest(serial) == _digest(parallel)
    assert all(record.suite is None for record in serial)

    other = run_trials(g, trials=6, seed=18, suite=False, threads=1)
    assert [record.seed for record in other] != [
        record.seed for record in serial]


def test_summarize_trials() -> None:
    '''
    Test aggregation of handcrafted trial records.
    '''

    # Defer heavyweight imports.
    from synccert._dynamics.dynsuite import (
        CheckStatus,
        InequalityCheck,
        InequalitySuiteResult,
    )
    from synccert._dynamics.dyntrial import TrialRecord, summarize_trials

    failed_suite = InequalitySuiteResult(
        checks=(InequalityCheck('trace', CheckStatus.FAILED, -1.0),),
        slack=0.0,
    )
    records = (
        TrialRecord(
            index=0, seed=1, converged=True, rho1=1.0, residual=0.0,
            stable=True),
        TrialRecord(
            index=1, seed=2, converged=False, rho1=1.0, residual=0.1,
            stable=None),
        TrialRecord(
            index=2, seed=3, converged=True, rho1=0.2, residual=0.0,
            stable=False),
        TrialRecord(
            index=3, seed=4, converged=True, rho1=0.5, residual=0.0,
            stable=True, suite=failed_suite),
    )

    assert records[0].synchronized is True
    assert records[1].synchronized is False

    summary = summarize_trials(records)
    assert summary.trials == 4
    assert summary.converged == 3
    assert summary.stable == 2
    assert summary.synchronized == 1
    assert summary.suite_failures == 1

    assert summarize_trials(()).trials == 0


def test_run_trials_fail() -> None:
    '''
    Test that trials reject invalid counts and seeds.
    '''

    # Defer heavyweight imports.
    from synccert.roar import SyncCertDynamicsParamException
    from synccert._dynamics.dyntrial import run_trials
    from synccert._graph.graphmain import cycle_graph

    g = cycle_graph(5)
    with raises(SyncCertDynamicsParamException):
        run_trials(g, trials=0)
    with raises(SyncCertDynamicsParamException):
        run_trials(g, trials=1, seed=-1)


@slow
def test_run_trials_certified_graphs() -> None:
    '''
    Test that every simulation of a sampled graph certified from its exact
    norms synchronizes.
    '''

    # Defer heavyweight imports.
    from synccert._cert.certmain import certify
    from synccert._dynamics.dyntrial import run_trials
    from synccert._graph.graphmain import sample_er

    for n, p, seed in ((400, 0.9, 1), (800, 0.7, 2)):
        g = sample_er(n, p, seed)
        result = certify(graph=g, p=p, norm_source='exact')
        assert result.certified is True, f'G({n}, {p}) uncertified.'

        records = run_trials(g, trials=50, seed=seed, suite=False)
        for record in records:
            assert record.rho1 > 1.0 - 1e-6, (
                f'Trial {record.index} (seed {record.seed}) on G({n}, {p}) '
                f'stalled at rho_1 = {record.rho1}.')


@slow
@ignore_warnings(SyncCertFrameWarning)
def test_run_trials_suite_sweep() -> None:
    '''
    Test that the inequality suite holds at every stable equilibrium found
    on sampled graphs and at every stable twisted state on cycles of 10 to
    20 vertices, over at least 500 equilibria.
    '''

    # Defer heavyweight imports.
    from synccert._dynamics.dynintegrate import integrate
    from synccert._dynamics.dynstate import twisted_state
    from synccert._dynamics.dynsuite import (
        CheckStatus,
        stable_equilibrium_inequality_suite,
    )
    from synccert._dynamics.dyntrial import run_trials
    from synccert._graph.graphmain import cycle_graph, sample_er

    stable_total = 0

    for n in (100, 300):
        for p in (0.1, 0.3):
            g = sample_er(n, p, n)
            for record in run_trials(g, trials=140, seed=n, p=p):
                if not (record.converged and record.stable):
                    continue
                stable_total += 1

                assert record.suite is not None
                failed = [
                    check.name for check in record.suite.checks
                    if check.status is CheckStatus.FAILED
                ]
                assert not failed, (
                    f'Trial {record.index} on G({n}, {p}) failed {failed}.')

                # A stable state confined to an open half-circle is in phase.
                if record.suite.get_check('half_circle').margin is not None:
                    assert record.rho1 > 1.0 - 1e-8

    for n in range(10, 21):
        g = cycle_graph(n)
        for winding in range(1, (n - 1) // 4 + 1):
            # Offset off the quarter-circle boundaries.
            report = integrate(g, twisted_state(n, winding).theta + 0.1)
            assert report.stable is True, f'Twist {winding} on C_{n} unstable.'
            stable_total += 1

            suite = stable_equilibrium_inequality_suite(g, report)
            assert suite.passed, f'Twist {winding} on C_{n} failed suite.'

    assert stable_total >= 500
