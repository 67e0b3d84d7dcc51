#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert public API unit tests.**

This submodule unit tests the attributes re-exported by the top-level
:mod:`synccert` package.
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: To raise human-readable test errors, avoid importing from
# package-specific submodules at module scope.
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
from pytest import raises

# ....................{ TESTS                             }....................
def test_api_version() -> None:
    '''
    Test the package version globals.
    '''

    # Defer heavyweight imports.
    import synccert
    from synccert import meta

    assert synccert.__version__ == meta.VERSION
    assert isinstance(synccert.__version_info__, tuple)
    assert '.'.join(
        str(part) for part in synccert.__version_info__) == meta.VERSION


def test_api_exports() -> None:
    '''
    Test that the package re-exports the public attributes of its private
    subpackages.
    '''

    # Defer heavyweight imports.
    import synccert
    from synccert._cert.certmain import certify
    from synccert._dynamics.dynsuite import (
        stable_equilibrium_inequality_suite)
    from synccert._graph.graphmain import sample_er

    assert synccert.certify is certify
    assert synccert.sample_er is sample_er
    assert synccert.stable_equilibrium_inequality_suite is (
        stable_equilibrium_inequality_suite)

    for name in (
        'Graph', 'VertexSet', 'load_graph', 'save_graph', 'f_bound',
        'estimates_from_formula', 'estimates_from_graph', 'check_theorem',
        'refine', 'amplify_step', 'threshold_search', 'integrate',
        'hessian_stability', 'run_trials', 'summarize_trials', 'main',
        'read_document',
    ):
        assert callable(getattr(synccert, name)), name


def test_api_star_import() -> None:
    '''
    Test that star imports from the package fail.
    '''

    with raises(AttributeError):
        exec('from synccert import *', {})


def test_api_end_to_end() -> None:
    '''
    Test a certification through the public API alone.
    '''

    # Defer heavyweight imports.
    import synccert

    result = synccert.certify(10**6, 0.256, method='theorem')
    assert result.certified is True
    assert result.verdict is synccert.Verdict.CERTIFIED
