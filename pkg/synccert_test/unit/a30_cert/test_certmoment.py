#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert moment bound unit tests.**

This submodule unit tests the :mod:`synccert._cert.certmoment` submodule.
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: To raise human-readable test errors, avoid importing from
# package-specific submodules at module scope.
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
from pytest import approx, raises

# ....................{ TESTS                             }....................
def test_rho1_lower_bound() -> None:
    '''
    Test the :func:`synccert._cert.certmoment.rho1_lower_bound` function.
    '''

    # Defer heavyweight imports.
    import math
    from synccert.roar import SyncCertCertifierParamException
    from synccert._cert.certmoment import rho1_lower_bound

    assert rho1_lower_bound(0.0) == 1.0
    assert rho1_lower_bound(1.0 / 12.0) == approx(0.9036, abs=1e-4)
    assert rho1_lower_bound(1.0 / 12.0)**2 == approx(0.81647, abs=1e-5)

    # Non-increasing in the adjacency ratio, and above sqrt(a) below 1/12.
    ratios = [0.0, 0.001, 0.01, 0.04, 1.0 / 12.0, 0.1, 0.2]
    bounds = [rho1_lower_bound(a) for a in ratios]
    assert bounds == sorted(bounds, reverse=True)
    for a, bound in zip(ratios, bounds):
        if 0.0 < a < 1.0 / 12.0:
            assert bound**2 > a

    # The alternation collapses once (1/2 - 2a) is non-positive.
    assert rho1_lower_bound(0.3) == 0.0

    for a in (-0.1, math.inf, math.nan):
        with raises(SyncCertCertifierParamException):
            rho1_lower_bound(a)


def test_cphi_grid() -> None:
    '''
    Test the :func:`synccert._cert.certmoment.cphi_grid` function.
    '''

    # Defer heavyweight imports.
    import math
    import numpy as np
    from synccert.roar import SyncCertCertifierParamException
    from synccert._cert.certmoment import cphi_grid

    grid = cphi_grid(4)
    assert np.allclose(grid, [math.pi / 8, math.pi / 4, 3 * math.pi / 8,
        math.pi / 2])
    assert grid[-1] == math.pi / 2
    assert grid.flags.writeable is False
    assert cphi_grid(4) is grid

    with raises(SyncCertCertifierParamException):
        cphi_grid(1)


def test_cphi_initial_bounds() -> None:
    '''
    Test the :func:`synccert._cert.certmoment.cphi_initial_bounds` and
    :func:`synccert._cert.certmoment.first_bound` functions on ``G(10**6,
    0.256)`` under formula norms.
    '''

    # Defer heavyweight imports.
    import math
    from synccert.roar import SyncCertCertifierParamException
    from synccert._cert.certdata import CertificateInput
    from synccert._cert.certmoment import (
        cphi_grid,
        cphi_initial_bounds,
        first_bound,
        rho1_lower_bound,
    )
    from synccert._spectral.spectralbound import estimates_from_formula

    input = CertificateInput(norms=estimates_from_formula(10**6, 0.256))
    rho1_lb = rho1_lower_bound(input.a)
    assert rho1_lb**2 == approx(0.97418, abs=1e-5)

    table = cphi_initial_bounds(input, rho1_lb, cphi_grid(4))
    assert table.bounds[1] == approx(333.5, rel=1e-3)
    assert table.right_angle_bound == approx(166.8, rel=1e-3)
    assert list(table.bounds) == sorted(table.bounds, reverse=True)

    assert first_bound(input, rho1_lb, math.pi / 4) == approx(
        table.bounds[1])
    assert first_bound(input, 0.0, math.pi / 4) == 10**6
    assert first_bound(input, rho1_lb, 0.0) == 10**6

    with raises(SyncCertCertifierParamException):
        cphi_initial_bounds(input, 0.0, cphi_grid(4))
