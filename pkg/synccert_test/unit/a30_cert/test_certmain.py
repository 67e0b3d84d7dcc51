#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert certification front door unit tests.**

This submodule unit tests the :func:`synccert._cert.certmain.certify`
function.
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: To raise human-readable test errors, avoid importing from
# package-specific submodules at module scope.
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
from pytest import raises, warns

# ....................{ TESTS                             }....................
def test_certify_auto() -> None:
    '''
    Test that the ``auto`` method returns the closed-form result when that
    certifies and the refinement result otherwise.
    '''

    # Defer heavyweight imports.
    from synccert._cert.certmain import certify

    result = certify(10**6, 0.256)
    assert result.certified is True
    assert result.method == 'theorem'

    result = certify(10**6, 0.2, grid_size=200)
    assert result.certified is True
    assert result.method == 'refine'

    result = certify(10**6, 0.2, method='theorem')
    assert result.certified is False
    assert result.method == 'theorem'


def test_certify_auto_near_threshold() -> None:
    '''
    Test that the ``auto`` method certifies ``G(10**6, 0.0112)``, just above
    the known refinement threshold, by refinement on the default grid.
    '''

    # Defer heavyweight imports.
    from synccert._cert.certmain import certify

    result = certify(10**6, 0.0112)
    assert result.certified is True
    assert result.method == 'refine'
    assert result.get_condition('right_angle_bound').passed is True


def test_certify_graph() -> None:
    '''
    Test certification of explicit graphs from exact and estimated norms.
    '''

    # Defer heavyweight imports.
    from synccert._cert.certmain import certify
    from synccert._graph.graphmain import complete_graph, sample_er

    result = certify(graph=complete_graph(20), norm_source='exact')
    assert result.certified is True
    assert result.method == 'theorem'
    assert result.norm_source == 'exact'
    assert result.p == 1.0
    assert result.a == 0.0
    assert result.confidence == 1.0

    result = certify(
        graph=sample_er(60, 0.3, 1), norm_source='power', grid_size=50)
    assert result.certified is False
    assert result.norm_source == 'estimated'
    assert result.rho1_lb == 0.0


def test_certify_override() -> None:
    '''
    Test that user-supplied norms replace computed norms with a warning.
    '''

    # Defer heavyweight imports.
    from synccert.roar import SyncCertNormOverrideWarning
    from synccert._cert.certmain import certify

    with warns(SyncCertNormOverrideWarning):
        result = certify(10**6, 0.256, norm_a=1.0, norm_l=2.0)
    assert result.norm_source == 'override'
    assert result.a == 1.0 / 256000.0
    assert result.certified is True

    with warns(SyncCertNormOverrideWarning):
        result = certify(10**6, 0.256, norm_a=10**5, method='theorem')
    assert result.certified is False
    assert result.get_condition('adjacency_ratio').passed is False


def test_certify_fail() -> None:
    '''
    Test that certification rejects invalid parameter combinations.
    '''

    # Defer heavyweight imports.
    from synccert.roar import SyncCertCertifierParamException
    from synccert._cert.certmain import certify
    from synccert._graph.graphmain import complete_graph

    with raises(SyncCertCertifierParamException):
        certify(10**6, 0.256, norm_source='guess')
    with raises(SyncCertCertifierParamException):
        certify(10**6, 0.256, method='guess')
    with raises(SyncCertCertifierParamException):
        certify(10**6, 0.256, norm_source='exact')
    with raises(SyncCertCertifierParamException):
        certify(10**6)
    with raises(SyncCertCertifierParamException):
        certify(21, graph=complete_graph(20), norm_source='exact')
