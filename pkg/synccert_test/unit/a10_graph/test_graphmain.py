#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert graph model unit tests.**

This submodule unit tests the :mod:`synccert._graph.graphmain` submodule.
'''

# ....................{ IMPORTS                           }....................
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
# WARNING: To raise human-readable test errors, avoid importing from
# package-specific submodules at module scope.
#!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
from pytest import raises

# ....................{ TESTS ~ vertex set                }....................
def test_vertex_set() -> None:
    '''
    Test construction and set algebra of the
    :class:`synccert._graph.graphmain.VertexSet` class.
    '''

    # Defer heavyweight imports.
    import numpy as np
    from synccert.roar import SyncCertGraphVertexException
    from synccert._graph.graphmain import VertexSet

    vertices = VertexSet([3, 1, 3, 0])
    assert len(vertices) == 3
    assert list(vertices) == [0, 1, 3]
    assert 3 in vertices and 2 not in vertices and '3' not in vertices

    assert VertexSet.from_mask(0b1011, 4) == vertices
    assert VertexSet.from_mask(np.array([True, True, False, True]), 4) == (
        vertices)
    assert vertices.complement(5) == VertexSet([2, 4])
    assert vertices.union(VertexSet([2])) == VertexSet(range(4))
    assert vertices.intersection(VertexSet([1, 2])) == VertexSet([1])
    assert len(VertexSet()) == 0

    with raises(SyncCertGraphVertexException):
        VertexSet([-1])
    with raises(SyncCertGraphVertexException):
        VertexSet([0.5])
    with raises(SyncCertGraphVertexException):
        VertexSet.from_mask(0b10000, 4)
    with raises(SyncCertGraphVertexException):
        vertices.complement(3)

# ....................{ TESTS ~ sampler                   }....................
def test_sample_er_reproducible() -> None:
    '''
    Test that the :func:`synccert._graph.graphmain.sample_er` sampler is a
    pure function of its vertex count, probability and seed.
    '''

    # Defer heavyweight imports.
    from synccert._graph.graphmain import sample_er

    graph = sample_er(300, 0.05, 42)
    assert graph == sample_er(300, 0.05, 42)
    assert graph != sample_er(300, 0.05, 43)
    assert (graph.adjacency != graph.adjacency.T).nnz == 0


def test_sample_er_edge_law() -> None:
    '''
    Test that the :func:`synccert._graph.graphmain.sample_er` sampler draws
    each candidate pair with the requested probability.
    '''

    # Defer heavyweight imports.
    import math
    from synccert._graph.graphmain import sample_er

    n = 200
    p = 0.1
    pairs = n * (n + 1) // 2
    mean = p * pairs
    deviation = math.sqrt(pairs * p * (1.0 - p))

    for seed in range(3):
        graph = sample_er(n, p, seed)
        assert abs(graph.edge_total - mean) < 5.0 * deviation

    # Without self-loops, the diagonal stays empty.
    graph = sample_er(n, 0.5, 7, self_loops_allowed=False)
    assert graph.self_loop_count == 0

    # Degenerate probabilities.
    assert sample_er(10, 0.0, 0).edge_total == 0
    assert sample_er(10, 1.0, 0).edge_total == 55


def test_sample_er_fail() -> None:
    '''
    Test that the :func:`synccert._graph.graphmain.sample_er` sampler rejects
    invalid parameters.
    '''

    # Defer heavyweight imports.
    from synccert.roar import SyncCertGraphParamException
    from synccert._graph.graphmain import SEED_MAX, sample_er

    with raises(SyncCertGraphParamException):
        sample_er(0, 0.5, 0)
    with raises(SyncCertGraphParamException):
        sample_er(10, 1.5, 0)
    with raises(SyncCertGraphParamException):
        sample_er(10, 0.5, -1)
    with raises(SyncCertGraphParamException):
        sample_er(10, 0.5, SEED_MAX + 1)

# ....................{ TESTS ~ constructors              }....................
def test_from_edges() -> None:
    '''
    Test the :func:`synccert._graph.graphmain.from_edges` constructor.
    '''

    # Defer heavyweight imports.
    from synccert.roar import (
        SyncCertGraphParamException,
        SyncCertGraphVertexException,
    )
    from synccert._graph.graphmain import from_edges

    graph = from_edges(4, [(0, 1), (2, 1), (3, 3)])
    assert graph.edge_total == 3
    assert graph.self_loop_count == 1
    assert list(graph.edges()) == [(0, 1), (1, 2), (3, 3)]
    assert all(
        type(j) is int and type(k) is int for j, k in graph.edges())
    assert graph.neighbors(1).tolist() == [0, 2]
    assert graph.neighbors(3).tolist() == [3]

    with raises(SyncCertGraphParamException):
        from_edges(3, [(0, 1), (1, 0)])
    with raises(SyncCertGraphParamException):
        from_edges(3, [(1, 1)], self_loops_allowed=False)
    with raises(SyncCertGraphVertexException):
        from_edges(3, [(0, 3)])
    with raises(SyncCertGraphVertexException):
        graph.neighbors(4)

# ....................{ TESTS ~ getters                   }....................
def test_edge_count() -> None:
    '''
    Test the ordered-pair convention of the
    :func:`synccert._graph.graphmain.edge_count` function.
    '''

    # Defer heavyweight imports.
    from synccert.roar import SyncCertGraphVertexException
    from synccert._graph.graphmain import (
        VertexSet,
        edge_count,
        from_edges,
        path_graph,
    )

    path = path_graph(3)
    assert edge_count(path, VertexSet([0, 1]), VertexSet([0, 1])) == 2
    assert edge_count(path, VertexSet([0]), VertexSet([1, 2])) == 1
    assert edge_count(path, VertexSet([0]), VertexSet([2])) == 0
    assert edge_count(path, VertexSet(), VertexSet([0, 1, 2])) == 0

    # A self-loop counts once.
    looped = from_edges(2, [(0, 0), (0, 1)])
    assert edge_count(looped, VertexSet([0]), VertexSet([0])) == 1
    assert edge_count(looped, VertexSet([0, 1]), VertexSet([0, 1])) == 3

    with raises(SyncCertGraphVertexException):
        edge_count(path, VertexSet([3]), VertexSet([0]))


def test_laplacian_degree_density() -> None:
    '''
    Test the :func:`synccert._graph.graphmain.laplacian`,
    :func:`synccert._graph.graphmain.degree_vector` and
    :func:`synccert._graph.graphmain.density` functions.
    '''

    # Defer heavyweight imports.
    import numpy as np
    from synccert._graph.graphmain import (
        complete_graph,
        cycle_graph,
        degree_vector,
        density,
        laplacian,
        sample_er,
    )

    graph = sample_er(60, 0.3, 5)
    ones = np.ones(graph.n)
    assert np.allclose(laplacian(graph) @ ones, 0.0)
    assert np.array_equal(
        degree_vector(graph), np.asarray(graph.adjacency.sum(axis=1)).ravel())
    assert graph.max_degree == degree_vector(graph).max()

    assert degree_vector(complete_graph(4)).tolist() == [4, 4, 4, 4]
    assert density(complete_graph(6)) == 1.0
    assert density(cycle_graph(5)) == 10.0 / 25.0


def test_is_connected_to_dense() -> None:
    '''
    Test the :func:`synccert._graph.graphmain.is_connected` and
    :func:`synccert._graph.graphmain.to_dense` functions.
    '''

    # Defer heavyweight imports.
    from synccert.roar import SyncCertGraphDenseException
    from synccert._graph.graphmain import (
        from_edges,
        is_connected,
        path_graph,
        to_dense,
    )

    assert is_connected(path_graph(6)) is True
    assert is_connected(from_edges(4, [(0, 1), (2, 3)])) is False

    dense = to_dense(path_graph(3))
    assert dense.tolist() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]

    with raises(SyncCertGraphDenseException):
        to_dense(path_graph(10), dense_threshold=5)
