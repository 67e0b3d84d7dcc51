#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert command-line unit tests.**

This submodule unit tests the :func:`synccert._cli.climain.main` function
by running the ``synccert`` command in-process.
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: To raise human-readable test errors, avoid importing from
# package-specific submodules at module scope.
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
from pytest import approx, raises

# ....................{ PRIVATE                           }....................
def _write_k6(path) -> str:
    '''
    Write the complete graph on six vertices without self-loops to an
    edge-list file at the passed path and return that path as a string.
    '''

    lines = ['# K_6', '6']
    for j in range(1, 7):
        for k in range(j + 1, 7):
            lines.append(f'{j} {k}')
    path.write_text('\n'.join(lines) + '\n', encoding='utf-8')
    return str(path)

# ....................{ TESTS ~ certify                   }....................
def test_certify_json(capsys) -> None:
    '''
    Test exit codes and JSON documents of the ``certify`` command.
    '''

    # Defer heavyweight imports.
    from synccert._cli.climain import main
    from synccert._cli.cliserial import read_document

    assert main([
        'certify', '--n', '1000000', '--p', '0.256', '--method', 'theorem',
    ]) == 0
    document = read_document(capsys.readouterr().out)
    assert document['schema'] == 'v1'
    assert document['command'] == 'certify'
    assert document['config']['n'] == 1000000
    assert document['config']['p'] == 0.256
    assert document['result']['certified'] is True
    assert document['result']['verdict'] == 'certified'
    assert document['result']['method'] == 'theorem'

    assert main([
        'certify', '--n', '1000000', '--p', '0.2', '--method', 'theorem',
    ]) == 3
    document = read_document(capsys.readouterr().out)
    assert document['result']['certified'] is False
    assert document['result']['verdict'] == 'not_certified'


def test_certify_csv_output_file(tmp_path) -> None:
    '''
    Test CSV output written to a file, with common options preceding the
    command name.
    '''

    # Defer heavyweight imports.
    from synccert._cli.climain import main

    output = tmp_path / 'certify.csv'
    assert main([
        '--format', 'csv', '--output', str(output),
        'certify', '--n', '1000000', '--p', '0.256', '--method', 'theorem',
    ]) == 0

    lines = output.read_text(encoding='utf-8').splitlines()
    assert lines[0] == 'name,lhs,rhs,passed,relation'
    assert len(lines) > 1

# ....................{ TESTS ~ commands                  }....................
def test_threshold(capsys) -> None:
    '''
    Test the ``threshold`` command with the closed-form certificate.
    '''

    # Defer heavyweight imports.
    from synccert._cli.climain import main
    from synccert._cli.cliserial import read_document

    assert main([
        'threshold', '--n', '10000000', '--method', 'theorem',
        '--tol-p', '1e-3', '--threads', '1',
    ]) == 0
    result = read_document(capsys.readouterr().out)['result']
    assert 0.0474 < result['p_star'] < 0.0476
    assert result['method'] == 'theorem'
    assert result['probes'][0] == {'p': 1.0, 'certified': True}


def test_reproduce_table(capsys) -> None:
    '''
    Test the ``reproduce-table`` command against a reference threshold.
    '''

    # Defer heavyweight imports.
    from synccert._cli.climain import REFERENCE_THRESHOLDS, main
    from synccert._cli.cliserial import read_document

    assert main([
        'reproduce-table', '--method', 'theorem', '--n-list', '1000000',
        '--tol-p', '1e-2',
    ]) == 0
    result = read_document(capsys.readouterr().out)['result']
    assert result['method'] == 'theorem'
    assert 'not reproduced' in result['excluded']

    row, = result['rows']
    assert row['n'] == 10**6
    assert row['p_reference'] == REFERENCE_THRESHOLDS[10**6]
    assert row['ratio'] == approx(row['p_star'] / REFERENCE_THRESHOLDS[10**6])
    assert row['ratio'] > 1.0


def test_spectral_graph_file(tmp_path, capsys) -> None:
    '''
    Test the ``spectral`` command on an edge-list file.
    '''

    # Defer heavyweight imports.
    from synccert._cli.climain import main
    from synccert._cli.cliserial import read_document

    graph_path = _write_k6(tmp_path / 'k6.txt')
    assert main(['spectral', '--graph', graph_path]) == 0

    sample, = read_document(capsys.readouterr().out)['result']['samples']
    assert sample['n'] == 6
    assert sample['p'] == approx(30.0 / 36.0)
    assert sample['source'] == 'exact'

    # K_6 minus its density times the all-ones matrix is -I off the
    # all-ones direction.
    assert sample['norm_a'] == approx(1.0)


def test_spectral_samples(capsys) -> None:
    '''
    Test the ``spectral`` command on several sampled graphs.
    '''

    # Defer heavyweight imports.
    from synccert._cli.climain import main
    from synccert._cli.cliserial import read_document

    assert main([
        'spectral', '--n', '50', '--p', '0.3', '--samples', '3',
        '--seed', '1', '--threads', '2',
    ]) == 0
    samples = read_document(capsys.readouterr().out)['result']['samples']
    assert [sample['seed'] for sample in samples] == [1, 2, 3]
    for sample in samples:
        assert sample['norm_a'] > 0.0
        assert sample['norm_l'] > 0.0


def test_simulate_graph_file(tmp_path, capsys) -> None:
    '''
    Test the ``simulate`` command on an edge-list file.
    '''

    # Defer heavyweight imports.
    from synccert._cli.climain import main
    from synccert._cli.cliserial import read_document

    graph_path = _write_k6(tmp_path / 'k6.txt')
    assert main([
        'simulate', '--graph', graph_path, '--p', 'auto', '--trials', '3',
        '--seed', '7', '--threads', '1',
    ]) == 0

    result = read_document(capsys.readouterr().out)['result']
    assert result['n'] == 6
    assert result['edges'] == 15
    assert result['summary'] == {
        'trials': 3,
        'converged': 3,
        'stable': 3,
        'synchronized': 3,
        'suite_failures': 0,
    }
    for trial in result['trials']:
        assert trial['synchronized'] is True
        assert trial['suite']['passed'] is True

# ....................{ TESTS ~ errors                    }....................
def test_usage_errors(capsys) -> None:
    '''
    Test that invalid arguments exit with the usage error code.
    '''

    # Defer heavyweight imports.
    from synccert._cli.climain import main

    for argv in (
        [],
        ['bogus'],
        ['certify', '--n', '1000'],
        ['certify', '--n', '1000', '--p', '0.5', '--method', 'bogus'],
        ['certify', '--n', '1000', '--p', '1.5'],
        ['certify', '--n', '1000', '--p', 'often'],
        ['simulate', '--n', '10', '--p', '0.5', '--trials', '0'],
        ['--threads', '0', 'threshold', '--n', '1000'],
        ['threshold', '--n', '7'],
        ['reproduce-table', '--n-list', '4'],
    ):
        assert main(argv) == 64, argv

    assert 'synccert' in capsys.readouterr().err


def test_input_errors(tmp_path) -> None:
    '''
    Test that missing and malformed graph files exit with the input error
    codes.
    '''

    # Defer heavyweight imports.
    from synccert._cli.climain import main

    assert main(['certify', '--graph', str(tmp_path / 'missing.txt')]) == 66

    malformed = tmp_path / 'malformed.txt'
    malformed.write_text('3\n1 x\n', encoding='utf-8')
    assert main(['certify', '--graph', str(malformed)]) == 65
    assert main(['spectral', '--graph', str(malformed)]) == 65


def test_run_config() -> None:
    '''
    Test parsing of run configurations.
    '''

    # Defer heavyweight imports.
    from synccert.roar import SyncCertCliUsageException
    from synccert._cli.cliconfig import RunConfig

    config = RunConfig.from_argv([
        '-vv', 'certify', '--n', '1000', '--p', '0.5', '--snapshot'])
    assert config.command == 'certify'
    assert config.n == 1000
    assert config.p == 0.5
    assert config.verbose == 2
    assert config.snapshot is True
    assert config.output_format == 'json'
    assert config.to_dict()['n_list'] == [10**4, 10**5, 10**6, 10**7]

    config = RunConfig.from_argv(['spectral', '--graph', 'g.txt', '--p', 'auto'])
    assert config.p is None
    assert 'p_auto' not in config.to_dict()
    assert config.to_dict()['p'] is None

    with raises(SyncCertCliUsageException):
        RunConfig(command='threshold')
