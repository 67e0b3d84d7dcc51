#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert command-line front end.**

This private submodule implements the ``synccert`` command, whose
subcommands wrap the certifier, the threshold search, the simulation trials
and the spectral estimators of this package and write one versioned document
per invocation.

Exit codes
----------
* 0 on success (and, for ``certify``, a certified verdict).
* 3 when ``certify`` does not certify.
* 64 on usage errors, 65 on malformed input files, 66 on missing input
  files and 70 on internal errors.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import logging
import math
import sys
from synccert.roar import (
    SyncCertCertifierParamException,
    SyncCertCliException,
    SyncCertCliInputException,
    SyncCertCliMissingInputException,
    SyncCertCliUsageException,
    SyncCertDynamicsParamException,
    SyncCertException,
    SyncCertGraphFormatException,
    SyncCertGraphParamException,
    SyncCertSpectralParamException,
    SyncCertThreadsException,
)
from synccert._cert.certmain import certify
from synccert._cert.certsearch import threshold_search
from synccert._cli.cliconfig import RunConfig
from synccert._cli.cliserial import (
    dump_document,
    make_document,
    to_jsonable,
    write_text,
)
from synccert._dynamics.dyntrial import run_trials, summarize_trials
from synccert._graph.graphio import load_graph
from synccert._graph.graphmain import (
    DENSE_THRESHOLD_DEFAULT,
    Graph,
    density,
    sample_er,
)
from synccert._spectral.spectralbound import f_bound
from synccert._spectral.spectralnorm import estimates_from_graph
from synccert._util.utilthread import map_threaded
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ GLOBALS                           }....................
logger = logging.getLogger(__name__)

# ....................{ CONSTANTS                         }....................
EXIT_SUCCESS = 0
'''
Exit code of successful commands and certified verdicts.
'''


EXIT_NOT_CERTIFIED = 3
'''
Exit code of ``certify`` when the verdict is not certified.
'''


EXIT_SOFTWARE = 70
'''
Exit code of internal errors.
'''


REFERENCE_THRESHOLDS = {
    10**4: 0.33237,
    10**5: 0.07168,
    10**6: 0.01117,
    10**7: 0.00157,
}
'''
Dictionary mapping vertex counts to reference refinement thresholds, against
which ``reproduce-table`` reports the ratio of its own thresholds.
'''


REPRODUCE_TABLE_EXCLUSION = (
    'Thresholds at n = 1e20 require certificates chaining three or more '
    'angles and are not reproduced. Asymptotic claims are not reproducible '
    'at finite n.'
)
'''
Note embedded in every ``reproduce-table`` result.
'''


_USAGE_EXCEPTIONS = (
    SyncCertCertifierParamException,
    SyncCertDynamicsParamException,
    SyncCertGraphParamException,
    SyncCertSpectralParamException,
    SyncCertThreadsException,
)
'''
Tuple of the library exceptions reporting invalid user-supplied values.
'''

# ....................{ MAIN                              }....................
def main(argv: Optional[Sequence[str]] = None) -> int:
    '''
    Run the ``synccert`` command with the passed arguments *or*
    ``sys.argv`` if ``None`` and return its exit code.
    '''

    try:
        config = RunConfig.from_argv(argv)
    except SyncCertCliUsageException as exception:
        print(f'synccert: {exception}', file=sys.stderr)
        return exception.exit_code

    _configure_logging(config.verbose)

    try:
        runner = _RUNNERS[config.command]
        exit_code, result = runner(config)
        document = make_document(config.command, config.to_dict(), result)
        write_text(
            dump_document(document, config.output_format),
            config.output_path,
            sys.stdout,
        )
    except SyncCertCliException as exception:
        logger.error('%s', exception)
        return exception.exit_code
    except _USAGE_EXCEPTIONS as exception:
        logger.error('%s', exception)
        return SyncCertCliUsageException.exit_code
    except SyncCertException as exception:
        logger.error('%s: %s', type(exception).__name__, exception)
        return EXIT_SOFTWARE
    except Exception:
        logger.exception('Internal error.')
        return EXIT_SOFTWARE

    return exit_code

# ....................{ RUNNERS                           }....................
def run_certify(config: RunConfig) -> Tuple[int, Dict[str, Any]]:
    '''
    Certify ``G(n, p)`` or an edge-list graph.

    Returns
    ----------
    Tuple[int, Dict[str, Any]]
        2-tuple ``(exit_code, result)``, where ``exit_code`` is 0 if
        certified and 3 otherwise.
    '''

    norm_source = config.norm_source
    graph = None
    if config.graph_path is not None:
        graph = _load_graph(config.graph_path)
        if norm_source is None:
            norm_source = (
                'exact' if graph.n <= DENSE_THRESHOLD_DEFAULT else 'power')
    elif norm_source in ('exact', 'power'):
        graph = sample_er(config.n, config.p, config.seed)
    norm_source = norm_source or 'formula'

    p = config.p
    if graph is not None and p is None and norm_source == 'formula':
        p = density(graph)

    result = certify(
        n=config.n,
        p=p,
        norm_source=norm_source,
        method=config.method or 'auto',
        graph=graph,
        grid_size=config.grid_size,
        max_sweeps=config.max_sweeps,
        tol=config.tol,
        norm_a=config.norm_a,
        norm_l=config.norm_l,
        alpha=config.alpha,
        snapshot=config.snapshot,
    )

    result_dict = to_jsonable(result)
    result_dict['certified'] = result.certified
    return (
        EXIT_SUCCESS if result.certified else EXIT_NOT_CERTIFIED,
        result_dict,
    )


def run_threshold(config: RunConfig) -> Tuple[int, Dict[str, Any]]:
    '''
    Smallest certifiable ``p`` for ``G(n, p)``.
    '''

    result = threshold_search(
        config.n,
        tol_p=config.tol_p,
        method=config.method or 'refine',
        grid_size=config.grid_size,
        max_sweeps=config.max_sweeps,
        threads=config.threads,
    )

    result_dict = to_jsonable(result)
    result_dict['probes'] = [
        {'p': p, 'certified': certified} for p, certified in result.probes]
    return EXIT_SUCCESS, result_dict


def run_simulate(config: RunConfig) -> Tuple[int, Dict[str, Any]]:
    '''
    Simulation trials with inequality suites at stable equilibria.
    '''

    graph, p = _get_graph(config)
    records = run_trials(
        graph,
        trials=config.trials,
        seed=config.seed,
        p=p,
        max_time=config.max_time,
        residual_tol=config.residual_tol,
        threads=config.threads,
    )
    summary = summarize_trials(records)

    trials = []
    for record in records:
        trial = to_jsonable(record)
        trial['synchronized'] = record.synchronized
        if record.suite is not None:
            trial['suite']['passed'] = record.suite.passed
        trials.append(trial)

    return EXIT_SUCCESS, {
        'n': graph.n,
        'edges': graph.edge_total,
        'p': p,
        'summary': to_jsonable(summary),
        'trials': trials,
    }


def run_spectral(config: RunConfig) -> Tuple[int, Dict[str, Any]]:
    '''
    Norms of sampled or loaded graphs against the formula bound.
    '''

    if config.graph_path is not None:
        graph, p = _get_graph(config)
        jobs = [(None, graph)]
    else:
        p = config.p
        jobs = [(config.seed + index, None) for index in range(config.samples)]

    def _run(job: Tuple[Optional[int], Optional[Graph]]) -> Dict[str, Any]:
        seed, graph = job
        if graph is None:
            graph = sample_er(config.n, p, seed)

        method = config.method or (
            'exact' if graph.n <= DENSE_THRESHOLD_DEFAULT else 'power')
        norms = estimates_from_graph(graph, p=p, method=method, tol=config.tol)

        bound = f_bound(graph.n, p) if graph.n >= 2 else None
        semicircle = 2.0 * math.sqrt(graph.n * p * (1.0 - p))
        row = {
            'seed': seed,
            'n': graph.n,
            'p': p,
            'norm_a': norms.norm_a,
            'norm_l': norms.norm_l,
            'source': norms.source.value,
            'f_bound': bound,
            'below_f_bound': None if bound is None else norms.norm_a < bound,
            'semicircle_ratio': (
                norms.norm_a / semicircle if semicircle > 0.0 else None),
        }
        logger.info(
            'Sample seed=%s: ||Delta_A||=%g, ||Delta_L||=%g, f=%s.',
            seed, norms.norm_a, norms.norm_l, bound)
        return row

    samples = map_threaded(_run, jobs, threads=config.threads)
    return EXIT_SUCCESS, {
        'samples': samples,
        'all_below_f_bound': all(
            sample['below_f_bound'] is not False for sample in samples),
    }


def run_reproduce_table(config: RunConfig) -> Tuple[int, Dict[str, Any]]:
    '''
    Threshold table over the configured vertex counts, alongside reference
    thresholds where known.
    '''

    method = config.method or 'refine'
    rows = []
    for n in config.n_list:
        result = threshold_search(
            n,
            tol_p=config.tol_p,
            method=method,
            grid_size=config.grid_size,
            max_sweeps=config.max_sweeps,
            threads=config.threads,
        )
        reference = REFERENCE_THRESHOLDS.get(n)
        ratio = None if reference is None else result.p_star / reference
        rows.append({
            'n': n,
            'p_star': result.p_star,
            'p_reference': reference,
            'ratio': ratio,
            'probes': len(result.probes),
        })
        logger.info(
            'n=%d: p*=%.6g (reference %s, ratio %s).',
            n, result.p_star, reference, ratio)

    return EXIT_SUCCESS, {
        'method': method,
        'rows': rows,
        'excluded': REPRODUCE_TABLE_EXCLUSION,
    }


_RUNNERS: Dict[str, Callable[[RunConfig], Tuple[int, Dict[str, Any]]]] = {
    'certify': run_certify,
    'threshold': run_threshold,
    'simulate': run_simulate,
    'spectral': run_spectral,
    'reproduce-table': run_reproduce_table,
}
'''
Dictionary mapping each command name to its runner.
'''

# ....................{ PRIVATE ~ getters                 }....................
def _get_graph(config: RunConfig) -> Tuple[Graph, float]:
    '''
    2-tuple ``(graph, p)`` of the loaded or sampled graph of the passed
    configuration and its reference probability, which defaults to the
    density of a loaded graph.
    '''

    if config.graph_path is None:
        return sample_er(config.n, config.p, config.seed), config.p

    graph = _load_graph(config.graph_path)
    p = config.p if config.p is not None else density(graph)
    if not p > 0.0:
        raise SyncCertCliInputException(
            f'Graph "{config.graph_path}" has no edges.')
    return graph, p


def _load_graph(path: str) -> Graph:
    '''
    Graph loaded from the passed edge-list file, with file errors converted
    into command-line exceptions.
    '''

    try:
        return load_graph(path)
    except FileNotFoundError as exception:
        raise SyncCertCliMissingInputException(
            f'Graph file "{path}" not found.') from exception
    except SyncCertGraphFormatException as exception:
        raise SyncCertCliInputException(str(exception)) from exception
    except (OSError, UnicodeDecodeError) as exception:
        raise SyncCertCliInputException(
            f'Graph file "{path}" unreadable: {exception}') from exception

# ....................{ PRIVATE ~ logging                 }....................
def _configure_logging(verbose: int) -> None:
    '''
    Log to stderr at WARNING, INFO (``-v``) or DEBUG (``-vv``) level and route
    warnings through logging.
    '''

    level = (
        logging.WARNING if verbose <= 0 else
        logging.INFO if verbose == 1 else
        logging.DEBUG
    )
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )
    logging.getLogger().setLevel(level)
    logging.captureWarnings(True)
