#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert threshold search unit tests.**

This submodule unit tests the :mod:`synccert._cert.certsearch` submodule.
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: To raise human-readable test errors, avoid importing from
# package-specific submodules at module scope.
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
from synccert_test.util.mark.pytmark import slow
from pytest import raises

# ....................{ TESTS                             }....................
def test_threshold_search_theorem() -> None:
    '''
    Test that the closed-form threshold at ``n = 10**7`` lies in
    ``(0.0474, 0.0475)``.
    '''

    # Defer heavyweight imports.
    from synccert._cert.certmain import certify
    from synccert._cert.certsearch import threshold_search

    result = threshold_search(
        10**7, tol_p=1e-4, method='theorem', threads=1)
    assert 0.0474 < result.p_star < 0.0475
    assert result.method == 'theorem'
    assert result.n == 10**7

    # The first probes bracket from p = 1 downward.
    assert [p for p, _ in result.probes[:6]] == [
        1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125]
    assert (result.p_star, True) in result.probes
    assert certify(10**7, result.p_star, method='theorem').certified


def test_threshold_search_threads() -> None:
    '''
    Test that bracketing on a thread pool yields the same threshold as
    bracketing inline.
    '''

    # Defer heavyweight imports.
    from synccert._cert.certsearch import threshold_search

    inline = threshold_search(10**6, tol_p=1e-3, method='theorem', threads=1)
    pooled = threshold_search(10**6, tol_p=1e-3, method='theorem', threads=4)
    assert inline.p_star == pooled.p_star
    assert 0.25 < inline.p_star < 0.2565


def test_threshold_search_fail() -> None:
    '''
    Test that the threshold search rejects invalid parameters.
    '''

    # Defer heavyweight imports.
    from synccert.roar import (
        SyncCertCertifierParamException,
        SyncCertThresholdException,
    )
    from synccert._cert.certsearch import threshold_search

    with raises(SyncCertCertifierParamException):
        threshold_search(7)
    with raises(SyncCertCertifierParamException):
        threshold_search(10**6, tol_p=1.0)
    with raises(SyncCertCertifierParamException):
        threshold_search(10**6, norm_source='exact')

    # At n = 8, even p = 1 leaves a = 4 ln(8) / 24 above 1/12.
    with raises(SyncCertThresholdException):
        threshold_search(8, method='theorem', threads=1)


@slow
def test_threshold_search_refine() -> None:
    '''
    Test that the refinement thresholds at ``n`` in ``10**4..10**7`` come
    within 5% of (or below) the known refinement thresholds.
    '''

    # Defer heavyweight imports.
    from synccert._cert.certsearch import threshold_search

    for n, p_known in (
        (10**4, 0.33237),
        (10**5, 0.07168),
        (10**6, 0.01117),
        (10**7, 0.00157),
    ):
        result = threshold_search(n)
        assert result.method == 'refine'
        assert result.p_star / p_known <= 1.05, (
            f'Threshold {result.p_star} at n={n} exceeds {p_known} by '
            f'more than 5%.')
        assert (result.p_star, True) in result.probes
