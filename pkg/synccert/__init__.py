#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert.**

Certificates of global synchrony for homogeneous Kuramoto oscillators coupled
by Erdős–Rényi random graphs (or any explicit graph): spectral deviation
bounds, the closed-form certificate, the computer-assisted refinement engine,
threshold search and a simulation harness checking every inequality the
certificates rest on at stable equilibria found numerically.

Every public attribute of this package is re-exported here from the private
subpackage implementing it.
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: This module imports third-party dependencies. The top-level
# "setup.py" script thus loads the "synccert.meta" submodule by path rather
# than importing this package.
# WARNING: To avoid polluting the public module namespace, external attributes
# should be locally imported at module scope *ONLY* under alternate private
# names.
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!

from synccert.meta import VERSION as __version__
from synccert.meta import VERSION_PARTS as __version_info__

# Graph model.
from synccert._graph.graphio import load_graph, save_graph
from synccert._graph.graphmain import (
    Graph,
    VertexSet,
    complete_graph,
    cycle_graph,
    degree_vector,
    density,
    edge_count,
    from_edges,
    is_connected,
    laplacian,
    path_graph,
    sample_er,
    to_dense,
)

# Spectral bounds.
from synccert._spectral.spectralbound import (
    SpectralEstimates,
    SpectralSource,
    estimates_from_formula,
    f_bound,
    gershgorin_bound_delta_a,
    gershgorin_bound_delta_l,
)
from synccert._spectral.spectralnorm import (
    estimates_from_graph,
    spectral_norm_delta_a,
    spectral_norm_delta_l,
)

# Certifier.
from synccert._cert.certdata import (
    CertificateInput,
    CertificationResult,
    Condition,
    CphiBoundTable,
    ThresholdSearchResult,
    Verdict,
)
from synccert._cert.certmain import certify
from synccert._cert.certmoment import (
    cphi_grid,
    cphi_initial_bounds,
    first_bound,
    rho1_lower_bound,
)
from synccert._cert.certrefine import amplify_step, refine
from synccert._cert.certsearch import threshold_search
from synccert._cert.certtheorem import (
    StabilizationSteps,
    check_theorem,
    corollary_amplification_factor,
    relative_size_conclusion,
    stabilization_steps,
    subset_deviation_bound,
    three_set_deviation_bound,
    two_set_deviation_bound,
)

# Dynamics.
from synccert._dynamics.dynintegrate import (
    EquilibriumReport,
    hessian_stability,
    integrate,
)
from synccert._dynamics.dynstate import (
    Moments,
    PhaseState,
    c_phi,
    canonicalize,
    energy,
    kernel_K,
    kuramoto_rhs,
    moments,
    random_phases,
    twisted_state,
)
from synccert._dynamics.dynsuite import (
    CheckStatus,
    InequalityCheck,
    InequalitySuiteResult,
    stable_equilibrium_inequality_suite,
)
from synccert._dynamics.dyntrial import (
    TrialRecord,
    TrialSummary,
    run_trials,
    summarize_trials,
)

# Command-line front end.
from synccert._cli.cliconfig import RunConfig
from synccert._cli.climain import (
    main,
    run_certify,
    run_reproduce_table,
    run_simulate,
    run_spectral,
    run_threshold,
)
from synccert._cli.cliserial import read_document

# ....................{ GLOBALS                           }....................
__version__
'''
Human-readable package version as a ``.``-delimited string.
'''


__version_info__
'''
Machine-readable package version as a tuple of integers.
'''


__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']
'''
Special list global referencing a single attribute guaranteed *not* to exist.

Star imports from any module of this package (e.g., ``from synccert import
*``) thus raise :class:`AttributeError`. Import the attributes you need by
name instead. Every submodule of this package defines the same global.
'''
