#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert edge-list unit tests.**

This submodule unit tests the :mod:`synccert._graph.graphio` submodule.
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: To raise human-readable test errors, avoid importing from
# package-specific submodules at module scope.
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
from pytest import raises

# ....................{ TESTS                             }....................
def test_load_graph(tmp_path) -> None:
    '''
    Test the :func:`synccert._graph.graphio.load_graph` function against a
    commented edge list with reversed pairs and a self-loop.
    '''

    # Defer heavyweight imports.
    from synccert._graph.graphio import load_graph
    from synccert._graph.graphmain import from_edges

    graph_path = tmp_path / 'triangle.txt'
    graph_path.write_text(
        '# triangle plus a loop\n'
        '4\n'
        '\n'
        '1 2\n'
        '3 2\n'
        '   # indented comment\n'
        '1 3\n'
        '4 4\n',
        encoding='utf-8',
    )

    graph = load_graph(graph_path)
    assert graph == from_edges(4, [(0, 1), (1, 2), (0, 2), (3, 3)])
    assert graph.self_loops_allowed is True


def test_save_graph(tmp_path) -> None:
    '''
    Test that the :func:`synccert._graph.graphio.save_graph` function writes
    1-based edges in row-major order readable by
    :func:`synccert._graph.graphio.load_graph`.
    '''

    # Defer heavyweight imports.
    from synccert._graph.graphio import load_graph, save_graph
    from synccert._graph.graphmain import sample_er

    graph_path = tmp_path / 'er.txt'
    graph = sample_er(40, 0.2, 3)
    save_graph(graph, str(graph_path))

    lines = graph_path.read_text(encoding='utf-8').splitlines()
    assert lines[0] == '40'
    assert len(lines) == 1 + graph.edge_total
    assert load_graph(str(graph_path)) == graph


def test_load_graph_fail(tmp_path) -> None:
    '''
    Test that the :func:`synccert._graph.graphio.load_graph` function reports
    the offending line of malformed edge lists.
    '''

    # Defer heavyweight imports.
    from synccert.roar import SyncCertGraphFormatException
    from synccert._graph.graphio import load_graph

    malformed = {
        '3\n1 2\n2 1\n': 3,
        '3\n1 4\n': 2,
        '3\n1 two\n': 2,
        '# header\n3 3\n': 2,
        '0\n': 1,
        '3\n1 2 3\n': 2,
    }

    for index, (text, line_number) in enumerate(malformed.items()):
        graph_path = tmp_path / f'malformed{index}.txt'
        graph_path.write_text(text, encoding='utf-8')
        with raises(SyncCertGraphFormatException) as exception_info:
            load_graph(graph_path)
        assert exception_info.value.line_number == line_number
        assert f':{line_number}:' in str(exception_info.value)

    empty_path = tmp_path / 'empty.txt'
    empty_path.write_text('# nothing\n', encoding='utf-8')
    with raises(SyncCertGraphFormatException):
        load_graph(empty_path)

    with raises(FileNotFoundError):
        load_graph(tmp_path / 'missing.txt')
