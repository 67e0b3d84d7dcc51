#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert command-line configuration.**

This private submodule defines the argument parser of the ``synccert``
command and the immutable :class:`RunConfig` each invocation is validated
into.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import argparse
import math
from dataclasses import asdict, dataclass
from synccert.meta import SYNOPSIS, VERSION
from synccert.roar import SyncCertCliUsageException
from synccert._cert.certmain import CERTIFY_METHODS
from synccert._cert.certrefine import GRID_SIZE_DEFAULT, MAX_SWEEPS_DEFAULT
from synccert._cert.certsearch import TOL_P_DEFAULT
from synccert._cert.certtheorem import ALPHA_DEFAULT
from synccert._dynamics.dynintegrate import (
    MAX_TIME_DEFAULT,
    RESIDUAL_TOL_DEFAULT,
)
from synccert._spectral.spectralnorm import NORM_METHODS, TOL_DEFAULT
from typing import Optional, Sequence, Tuple

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ CONSTANTS                         }....................
COMMANDS = (
    'certify', 'threshold', 'simulate', 'spectral', 'reproduce-table')
'''
Tuple of the names of all subcommands.
'''


OUTPUT_FORMATS = ('json', 'csv')
'''
Tuple of the names of all output formats.
'''


REPRODUCE_N_LIST_DEFAULT = (10**4, 10**5, 10**6, 10**7)
'''
Default vertex counts of the ``reproduce-table`` command.
'''


TRIALS_DEFAULT = 10
'''
Default number of ``simulate`` trials.
'''


SAMPLES_DEFAULT = 1
'''
Default number of ``spectral`` samples.
'''

# ....................{ CLASSES                           }....................
class _ArgumentParser(argparse.ArgumentParser):
    '''
    Argument parser raising :class:`SyncCertCliUsageException` rather than
    exiting on invalid arguments.
    '''

    def error(self, message: str) -> None:
        raise SyncCertCliUsageException(f'{self.prog}: {message}')


@dataclass(frozen=True)
class RunConfig(object):
    '''
    **Run configuration** (i.e., validated options of one invocation of the
    ``synccert`` command).

    Options irrelevant to the command keep their defaults and are ignored.

    Raises
    ----------
    SyncCertCliUsageException
        On construction, if an option required by the command is missing or
        any option is out of range.
    '''

    command: str
    n: Optional[int] = None
    p: Optional[float] = None
    seed: int = 0
    trials: int = TRIALS_DEFAULT
    samples: int = SAMPLES_DEFAULT
    method: Optional[str] = None
    norm_source: Optional[str] = None
    graph_path: Optional[str] = None
    grid_size: int = GRID_SIZE_DEFAULT
    max_sweeps: int = MAX_SWEEPS_DEFAULT
    tol: float = TOL_DEFAULT
    tol_p: float = TOL_P_DEFAULT
    residual_tol: float = RESIDUAL_TOL_DEFAULT
    max_time: float = MAX_TIME_DEFAULT
    norm_a: Optional[float] = None
    norm_l: Optional[float] = None
    alpha: float = ALPHA_DEFAULT
    snapshot: bool = False
    n_list: Tuple[int, ...] = REPRODUCE_N_LIST_DEFAULT
    output_path: Optional[str] = None
    output_format: str = 'json'
    verbose: int = 0
    threads: Optional[int] = None

    def __post_init__(self) -> None:

        if self.command not in COMMANDS:
            _die(f'Command "{self.command}" not in {list(COMMANDS)}.')
        elif self.output_format not in OUTPUT_FORMATS:
            _die(f'Format "{self.output_format}" not in '
                 f'{list(OUTPUT_FORMATS)}.')
        elif self.threads is not None and self.threads < 1:
            _die(f'--threads {self.threads} not positive.')

        for name in ('tol', 'tol_p', 'residual_tol', 'max_time', 'alpha'):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                _die(f'--{name.replace("_", "-")} {value} not positive.')
        for name in ('norm_a', 'norm_l'):
            value = getattr(self, name)
            if value is not None and not (value >= 0.0 and math.isfinite(value)):
                _die(f'--{name.replace("_", "-")} {value} not non-negative.')

        if self.grid_size < 2:
            _die(f'--grid-size {self.grid_size} < 2.')
        elif self.max_sweeps < 1:
            _die(f'--max-sweeps {self.max_sweeps} not positive.')
        elif self.p is not None and not 0.0 < self.p <= 1.0:
            _die(f'--p {self.p} outside (0, 1].')
        elif self.seed < 0:
            _die(f'--seed {self.seed} negative.')

        validator = _COMMAND_VALIDATORS[self.command]
        validator(self)


    def to_dict(self) -> dict:
        '''
        Dictionary of every option, embedded in output documents.
        '''

        config = asdict(self)
        config['n_list'] = list(self.n_list)
        return config

    # ..................{ FACTORIES                         }..................
    @classmethod
    def from_argv(cls, argv: Optional[Sequence[str]] = None) -> 'RunConfig':
        '''
        Run configuration parsed from the passed command-line arguments
        *or* ``sys.argv`` if ``None``.

        Raises
        ----------
        SyncCertCliUsageException
            If these arguments are invalid.
        '''

        args = make_parser().parse_args(argv)
        if args.command is None:
            _die('No command passed.')

        options = {
            key: value for key, value in vars(args).items()
            if value is not None
        }

        p = options.pop('p', None)
        if p is not None:
            # "auto" leaves p unset, deferring to the graph density.
            if p != 'auto':
                try:
                    options['p'] = float(p)
                except ValueError:
                    _die(f'--p "{p}" neither a number nor "auto".')

        if 'n_list' in options:
            options['n_list'] = tuple(options['n_list'])

        return cls(**options)

# ....................{ PARSERS                           }....................
def make_parser() -> argparse.ArgumentParser:
    '''
    Argument parser of the ``synccert`` command.
    '''

    parser = _ArgumentParser(prog='synccert', description=SYNOPSIS)
    parser.add_argument(
        '--version', action='version', version=f'%(prog)s {VERSION}')
    _add_common_arguments(parser)

    subparsers = parser.add_subparsers(dest='command')

    # certify
    certify = subparsers.add_parser(
        'certify',
        help='certify global synchrony of G(n, p) or an explicit graph')
    _add_common_arguments(certify)
    _add_graph_arguments(certify)
    certify.add_argument(
        '--norms', dest='norm_source', choices=('formula',) + tuple(
            sorted(NORM_METHODS)),
        help='norm source (default: formula, or exact with --graph)')
    certify.add_argument(
        '--method', choices=sorted(CERTIFY_METHODS),
        help='certificate (default: auto)')
    _add_refine_arguments(certify)
    certify.add_argument(
        '--tol', type=float, help='power iteration tolerance')
    certify.add_argument(
        '--norm-a', dest='norm_a', type=float,
        help='override ||Delta_A|| (certificate only as sound as this)')
    certify.add_argument(
        '--norm-l', dest='norm_l', type=float,
        help='override ||Delta_L|| (certificate only as sound as this)')
    certify.add_argument(
        '--alpha', type=float, help='theorem starting angle (default: pi/4)')
    certify.add_argument(
        '--snapshot', action='store_true', default=None,
        help='embed the final refinement table')

    # threshold
    threshold = subparsers.add_parser(
        'threshold',
        help='smallest certifiable p for G(n, p)')
    _add_common_arguments(threshold)
    threshold.add_argument('--n', type=int, help='vertex count')
    threshold.add_argument(
        '--method', choices=('refine', 'theorem'),
        help='certificate probed (default: refine)')
    threshold.add_argument(
        '--tol-p', dest='tol_p', type=float,
        help='relative tolerance on p')
    _add_refine_arguments(threshold)

    # simulate
    simulate = subparsers.add_parser(
        'simulate',
        help='integrate from random phases and check stable equilibria')
    _add_common_arguments(simulate)
    _add_graph_arguments(simulate)
    simulate.add_argument('--trials', type=int, help='number of trials')
    simulate.add_argument(
        '--max-time', dest='max_time', type=float,
        help='integration time limit per trial')
    simulate.add_argument(
        '--residual-tol', dest='residual_tol', type=float,
        help='equilibrium residual tolerance')

    # spectral
    spectral = subparsers.add_parser(
        'spectral',
        help='norms of Delta_A and Delta_L against the formula bound')
    _add_common_arguments(spectral)
    _add_graph_arguments(spectral)
    spectral.add_argument(
        '--method', choices=sorted(NORM_METHODS),
        help='norm computation (default: exact)')
    spectral.add_argument(
        '--tol', type=float, help='power iteration tolerance')
    spectral.add_argument(
        '--samples', type=int, help='number of sampled graphs')

    # reproduce-table
    reproduce = subparsers.add_parser(
        'reproduce-table',
        help='threshold table for n in 1e4..1e7 against reference values')
    _add_common_arguments(reproduce)
    reproduce.add_argument(
        '--method', choices=('refine', 'theorem'),
        help='certificate probed (default: refine)')
    reproduce.add_argument(
        '--n-list', dest='n_list', type=int, nargs='+',
        help='vertex counts (default: 10000 100000 1000000 10000000)')
    reproduce.add_argument(
        '--tol-p', dest='tol_p', type=float,
        help='relative tolerance on p')
    reproduce.add_argument(
        '--grid-size', dest='grid_size', type=int,
        help='refinement grid angles')

    return parser


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    '''
    Add options accepted both before and after every command name.

    Defaults are suppressed so that options passed before the command name
    survive parsing of the command.
    '''

    parser.add_argument(
        '--output', dest='output_path', default=argparse.SUPPRESS,
        help='output file (default: stdout)')
    parser.add_argument(
        '--format', dest='output_format', choices=OUTPUT_FORMATS,
        default=argparse.SUPPRESS, help='output format (default: json)')
    parser.add_argument(
        '-v', '--verbose', action='count', default=argparse.SUPPRESS,
        help='log INFO (-v) or DEBUG (-vv) messages to stderr')
    parser.add_argument(
        '--threads', type=int, default=argparse.SUPPRESS,
        help='maximum worker threads (overrides $SYNC_CERT_THREADS)')


def _add_graph_arguments(parser: argparse.ArgumentParser) -> None:
    '''
    Add options selecting either ``G(n, p)`` or an edge-list file.
    '''

    parser.add_argument('--n', type=int, help='vertex count')
    parser.add_argument(
        '--p', help='edge probability, or "auto" for the graph density')
    parser.add_argument('--seed', type=int, help='sampler seed')
    parser.add_argument(
        '--graph', dest='graph_path', help='edge-list file (1-based)')


def _add_refine_arguments(parser: argparse.ArgumentParser) -> None:
    '''
    Add options tuning the refinement engine.
    '''

    parser.add_argument(
        '--grid-size', dest='grid_size', type=int,
        help='refinement grid angles')
    parser.add_argument(
        '--max-sweeps', dest='max_sweeps', type=int,
        help='maximum refinement sweeps')

# ....................{ PRIVATE ~ validators              }....................
def _die(message: str) -> None:
    raise SyncCertCliUsageException(message)


def _validate_certify(config: RunConfig) -> None:

    if config.method is not None and config.method not in CERTIFY_METHODS:
        _die(f'--method "{config.method}" not in {sorted(CERTIFY_METHODS)}.')
    elif config.norm_source not in (None, 'formula') + tuple(NORM_METHODS):
        _die(f'--norms "{config.norm_source}" unknown.')

    _validate_graph_source(config, 'certify')
    if config.graph_path is None and config.n < 2:
        _die(f'--n {config.n} < 2.')


def _validate_threshold(config: RunConfig) -> None:

    if config.n is None:
        _die('threshold requires --n.')
    elif config.n < 8:
        _die(f'--n {config.n} < 8.')
    elif config.tol_p >= 1.0:
        _die(f'--tol-p {config.tol_p} not below 1.')
    elif config.method not in (None, 'refine', 'theorem'):
        _die(f'--method "{config.method}" not "refine" or "theorem".')


def _validate_simulate(config: RunConfig) -> None:

    _validate_graph_source(config, 'simulate')
    if config.trials < 1:
        _die(f'--trials {config.trials} not positive.')


def _validate_spectral(config: RunConfig) -> None:

    _validate_graph_source(config, 'spectral')
    if config.samples < 1:
        _die(f'--samples {config.samples} not positive.')
    elif config.method not in (None,) + tuple(NORM_METHODS):
        _die(f'--method "{config.method}" not in {sorted(NORM_METHODS)}.')
    elif config.tol >= 1.0:
        _die(f'--tol {config.tol} not below 1.')


def _validate_reproduce_table(config: RunConfig) -> None:

    if not config.n_list:
        _die('--n-list empty.')
    elif min(config.n_list) < 8:
        _die(f'--n-list {list(config.n_list)} holds a value < 8.')
    elif config.tol_p >= 1.0:
        _die(f'--tol-p {config.tol_p} not below 1.')
    elif config.method not in (None, 'refine', 'theorem'):
        _die(f'--method "{config.method}" not "refine" or "theorem".')


def _validate_graph_source(config: RunConfig, command: str) -> None:
    '''
    Require either an edge-list file or both ``--n`` and ``--p``.
    '''

    if config.graph_path is not None:
        return
    elif config.n is None or (config.p is None):
        _die(f'{command} requires --graph or both --n and --p.')
    elif config.n < 1:
        _die(f'--n {config.n} not positive.')


_COMMAND_VALIDATORS = {
    'certify': _validate_certify,
    'threshold': _validate_threshold,
    'simulate': _validate_simulate,
    'spectral': _validate_spectral,
    'reproduce-table': _validate_reproduce_table,
}
'''
Dictionary mapping each command name to its configuration validator.
'''
