#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Hear synccert roar** as it handles errors and warnings.

This submodule defines hierarchies of :mod:`synccert`-specific exceptions
and warnings emitted by graph construction, spectral estimation,
certification, simulation and the command-line front end.

Non-certification is *never* an exception: it is a verdict carried by
:class:`synccert.CertificationResult`.
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: To avoid polluting the public module namespace, external attributes
# should be locally imported at module scope *ONLY* under alternate private
# names (e.g., "from argparse import ArgumentParser as _ArgumentParser" rather
# than merely "from argparse import ArgumentParser").
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!

from abc import ABCMeta as _ABCMeta

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ SUPERCLASS                        }....................
class SyncCertException(Exception, metaclass=_ABCMeta):
    '''
    Abstract base class of all **synccert exceptions.**

    Instances of subclasses of this exception are raised on invalid input to
    public operations and on numerical procedures that cannot honour their
    contract (e.g., an iterative norm estimate that never converged).
    '''

    pass

# ....................{ CONFIG                            }....................
class SyncCertThreadsException(SyncCertException):
    '''
    **Thread count exception.**

    This exception is raised when an explicit thread count *or* the
    ``SYNC_CERT_THREADS`` environment variable is not a positive integer.
    '''

    pass

# ....................{ GRAPH                             }....................
class SyncCertGraphException(SyncCertException, metaclass=_ABCMeta):
    '''
    Abstract base class of all **graph exceptions.**

    Instances of subclasses of this exception are raised while sampling,
    constructing, loading or querying :class:`synccert.Graph` instances.
    '''

    pass


class SyncCertGraphParamException(SyncCertGraphException):
    '''
    **Graph parameter exception.**

    This exception is raised when a graph constructor is passed an invalid
    vertex count, edge probability or seed.
    '''

    pass


class SyncCertGraphVertexException(SyncCertGraphException):
    '''
    **Graph vertex exception.**

    This exception is raised when a vertex index lies outside the vertex range
    of the graph it is applied to.
    '''

    pass


class SyncCertGraphDenseException(SyncCertGraphException):
    '''
    **Graph densification exception.**

    This exception is raised when a dense matrix is requested for a graph
    whose vertex count exceeds the dense threshold.
    '''

    pass


class SyncCertGraphFormatException(SyncCertGraphException):
    '''
    **Graph edge-list format exception.**

    This exception is raised when an edge-list file is malformed, references a
    vertex out of range or specifies the same edge twice.

    Attributes
    ----------
    line_number : int
        1-based number of the offending line, or 0 if the error concerns the
        file as a whole.
    '''

    def __init__(self, message: str, line_number: int = 0) -> None:
        super().__init__(message)
        self.line_number = line_number

# ....................{ SPECTRAL                          }....................
class SyncCertSpectralException(SyncCertException, metaclass=_ABCMeta):
    '''
    Abstract base class of all **spectral exceptions.**

    Instances of subclasses of this exception are raised while bounding,
    estimating or computing the spectral norms of shifted adjacency and
    Laplacian matrices.
    '''

    pass


class SyncCertSpectralParamException(SyncCertSpectralException):
    '''
    **Spectral parameter exception.**

    This exception is raised on an invalid vertex count, probability,
    tolerance or method.
    '''

    pass


class SyncCertSpectralConvergenceException(SyncCertSpectralException):
    '''
    **Spectral convergence exception.**

    This exception is raised when power iteration exhausts its iteration
    budget before its residual test passes.

    Attributes
    ----------
    bound : float
        Best guaranteed upper bound on the norm known when iteration stopped
        (i.e., the Gershgorin bound).
    iterations : int
        Number of iterations performed.
    '''

    def __init__(self, message: str, bound: float, iterations: int) -> None:
        super().__init__(message)
        self.bound = bound
        self.iterations = iterations

# ....................{ CERTIFIER                         }....................
class SyncCertCertifierException(SyncCertException, metaclass=_ABCMeta):
    '''
    Abstract base class of all **certifier exceptions.**
    '''

    pass


class SyncCertCertifierParamException(SyncCertCertifierException):
    '''
    **Certifier parameter exception.**

    This exception is raised on invalid certificate inputs (e.g., a missing
    graph for a graph norm source or a non-positive grid size).
    '''

    pass


class SyncCertThresholdException(SyncCertCertifierException):
    '''
    **Threshold search exception.**

    This exception is raised when no probability ``p <= 1`` certifies.
    '''

    pass


class SyncCertThresholdMonotonicityException(SyncCertCertifierException):
    '''
    **Threshold monotonicity exception.**

    This exception is raised when a threshold search observes a certified
    probe at a probability strictly below an uncertified probe, contradicting
    the monotonicity that bisection relies on.

    Attributes
    ----------
    probes : list
        Every ``(p, certified)`` pair evaluated so far, in evaluation order.
    '''

    def __init__(self, message: str, probes: list) -> None:
        super().__init__(message)
        self.probes = probes

# ....................{ DYNAMICS                          }....................
class SyncCertDynamicsException(SyncCertException, metaclass=_ABCMeta):
    '''
    Abstract base class of all **dynamics exceptions.**
    '''

    pass


class SyncCertDynamicsParamException(SyncCertDynamicsException):
    '''
    **Dynamics parameter exception.**

    This exception is raised on phase vectors of the wrong length and on
    non-positive steps, tolerances or horizons.
    '''

    pass


class SyncCertDynamicsEquilibriumException(SyncCertDynamicsException):
    '''
    **Dynamics equilibrium exception.**

    This exception is raised when a stability test or inequality suite is
    requested at a state that is *not* a (stable) equilibrium.
    '''

    pass

# ....................{ CLI                               }....................
class SyncCertCliException(SyncCertException, metaclass=_ABCMeta):
    '''
    Abstract base class of all **command-line exceptions.**

    Attributes
    ----------
    exit_code : int
        Process exit code the command-line front end terminates with.
    '''

    exit_code = 70


class SyncCertCliUsageException(SyncCertCliException):
    '''
    **Command-line usage exception.**

    This exception is raised on invalid or missing command-line options.
    '''

    exit_code = 64


class SyncCertCliInputException(SyncCertCliException):
    '''
    **Command-line input exception.**

    This exception is raised when an input file is unreadable or malformed.
    '''

    exit_code = 65


class SyncCertCliMissingInputException(SyncCertCliInputException):
    '''
    **Command-line missing input exception.**

    This exception is raised when an input file does not exist.
    '''

    exit_code = 66

# ....................{ PRIVATE ~ util                    }....................
class _SyncCertUtilException(SyncCertException, metaclass=_ABCMeta):
    '''
    Abstract base class of all **synccert private utility exceptions.**

    Instances of subclasses of this exception are raised by *most* (but *not*
    all) private submodules of the private :mod:`synccert._util` subpackage.
    These exceptions denote critical internal issues and should thus *never*
    be raised -- let alone allowed to percolate up the call stack to end
    users.
    '''

    pass


class _SyncCertUtilCallableCachedException(_SyncCertUtilException):
    '''
    **Synccert decorator memoization decorator exception.**

    This exception is raised by the
    :func:`synccert._util.cache.utilcachecall.callable_cached` decorator on
    decorating a callable accepting variadic parameters.
    '''

    pass

# ....................{ WARNINGS                          }....................
class SyncCertWarning(UserWarning, metaclass=_ABCMeta):
    '''
    Abstract base class of all **synccert warnings.**
    '''

    pass


class SyncCertFrameWarning(SyncCertWarning):
    '''
    **Canonical frame warning.**

    This warning is emitted when the order parameter of a phase state vanishes,
    so the state cannot be rotated into the canonical frame and every check
    depending on that frame is skipped.
    '''

    pass


class SyncCertNormOverrideWarning(SyncCertWarning):
    '''
    **Norm override warning.**

    This warning is emitted when user-supplied norm values replace computed
    ones. Certificates built from overridden norms are only as sound as the
    supplied values.
    '''

    pass

# ....................{ WARNINGS ~ private                }....................
class _SyncCertUtilCallableCachedKwargsWarning(SyncCertWarning):
    '''
    **Synccert memoization keyword argument warning.**

    This warning is emitted when a memoized callable is passed keyword
    arguments, which memoize less efficiently than positional arguments.
    '''

    pass
