#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert spectral bound unit tests.**

This submodule unit tests the :mod:`synccert._spectral.spectralbound`
submodule.
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: To raise human-readable test errors, avoid importing from
# package-specific submodules at module scope.
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
from pytest import approx, raises

# ....................{ TESTS ~ formula                   }....................
def test_f_bound() -> None:
    '''
    Test the :func:`synccert._spectral.spectralbound.f_bound` function.
    '''

    # Defer heavyweight imports.
    import math
    from synccert.roar import SyncCertSpectralParamException
    from synccert._spectral.spectralbound import F_BOUND_MARGIN, f_bound

    n = 10**6
    log_n = math.log(n)
    expected = 2.0 * math.sqrt(n * log_n * 0.2 * 0.8) + 4.0 * log_n / 3.0
    assert f_bound(n, 0.2) == approx(expected, rel=1e-12)
    assert f_bound(n, 0.2) > expected
    assert f_bound(n, 0.2) == approx(2991.96, abs=0.01)

    # Symmetric about one half and reducing to the logarithmic term at 0.
    assert f_bound(1000, 0.3) == approx(f_bound(1000, 0.7), rel=1e-12)
    assert f_bound(1000, 0.0) == approx(
        4.0 * math.log(1000) / 3.0 * (1.0 + F_BOUND_MARGIN), rel=1e-15)

    with raises(SyncCertSpectralParamException):
        f_bound(1, 0.5)
    with raises(SyncCertSpectralParamException):
        f_bound(100, -0.1)


def test_estimates_from_formula() -> None:
    '''
    Test the :func:`synccert._spectral.spectralbound.estimates_from_formula`
    function.
    '''

    # Defer heavyweight imports.
    from synccert.roar import SyncCertSpectralParamException
    from synccert._spectral.spectralbound import (
        SpectralSource,
        estimates_from_formula,
        f_bound,
    )

    estimates = estimates_from_formula(10**4, 0.4)
    assert estimates.norm_a == f_bound(10**4, 0.4)
    assert estimates.norm_l == 2.0 * estimates.norm_a
    assert estimates.source is SpectralSource.FORMULA
    assert estimates.confidence == approx(1.0 - 4e-4)
    assert estimates.direction == 'upper'

    with raises(SyncCertSpectralParamException):
        estimates_from_formula(10**4, 0.0)


def test_spectral_estimates_fail() -> None:
    '''
    Test that the :class:`synccert._spectral.spectralbound.SpectralEstimates`
    dataclass rejects invalid fields.
    '''

    # Defer heavyweight imports.
    from synccert.roar import SyncCertSpectralParamException
    from synccert._spectral.spectralbound import (
        SpectralEstimates,
        SpectralSource,
    )

    with raises(SyncCertSpectralParamException):
        SpectralEstimates(10, 0.5, -1.0, 1.0, SpectralSource.EXACT)
    with raises(SyncCertSpectralParamException):
        SpectralEstimates(10, 0.0, 1.0, 1.0, SpectralSource.EXACT)
    with raises(SyncCertSpectralParamException):
        SpectralEstimates(10, 0.5, 1.0, 1.0, SpectralSource.EXACT, 1.5)

# ....................{ TESTS ~ gershgorin                }....................
def test_gershgorin_bounds() -> None:
    '''
    Test that the Gershgorin bounds of the
    :mod:`synccert._spectral.spectralbound` submodule dominate exact norms.
    '''

    # Defer heavyweight imports.
    from synccert._graph.graphmain import cycle_graph, sample_er
    from synccert._spectral.spectralbound import (
        gershgorin_bound_delta_a,
        gershgorin_bound_delta_l,
    )
    from synccert._spectral.spectralnorm import (
        spectral_norm_delta_a,
        spectral_norm_delta_l,
    )

    for graph, p in ((sample_er(80, 0.25, 9), 0.25), (cycle_graph(12), 0.1)):
        assert gershgorin_bound_delta_a(graph, p) >= (
            spectral_norm_delta_a(graph, p) - 1e-9)
        assert gershgorin_bound_delta_l(graph, p) >= (
            spectral_norm_delta_l(graph, p) - 1e-9)

    # Every row of a cycle's shifted adjacency has two entries 1 - p and
    # n - 2 entries p.
    assert gershgorin_bound_delta_a(cycle_graph(12), 0.1) == approx(
        2 * 0.9 + 10 * 0.1)
