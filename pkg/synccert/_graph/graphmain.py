#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert graph model.**

This private submodule defines the immutable undirected :class:`Graph` with
optional self-loops, the :class:`VertexSet` of 0-based vertex indices, the
Erdős–Rényi sampler and the exact combinatorial accessors (degrees, subset
edge counts, Laplacian, density, connectivity) that every spectral bound of
this package is ultimately about.

Conventions
----------
* A self-loop ``(j, j)`` contributes exactly 1 to the degree of ``j`` (i.e.,
  degrees are adjacency row sums), which keeps ``L @ 1 == 0`` for the
  Laplacian ``L = D - A``.
* :func:`edge_count` is the **ordered-pair sum** ``v_C^T A v_C2``. For
  ``C == C2``, every internal edge is counted twice and every self-loop
  once.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import logging
import numpy as np
from beartype import beartype
from scipy.sparse import csr_matrix, diags
from scipy.sparse.csgraph import breadth_first_order
from synccert.cave import (
    EdgeType,
    EdgesType,
    IndicesType,
    IntType,
    RealType,
)
from synccert.roar import (
    SyncCertGraphDenseException,
    SyncCertGraphParamException,
    SyncCertGraphVertexException,
)
from typing import Iterator, Tuple, Union

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ GLOBALS                           }....................
logger = logging.getLogger(__name__)

# ....................{ CONSTANTS                         }....................
DENSE_THRESHOLD_DEFAULT = 4096
'''
Default maximum vertex count for which dense matrices may be materialized.
'''


SEED_MAX = 2**64 - 1
'''
Maximum seed accepted by the Erdős–Rényi sampler.
'''


_GEOMETRIC_CHUNK_MIN = 1024
'''
Minimum number of geometric gaps drawn per chunk by the sampler.
'''


_GEOMETRIC_CHUNK_MAX = 1 << 22
'''
Maximum number of geometric gaps drawn per chunk by the sampler.
'''

# ....................{ CLASSES ~ vertex set              }....................
class VertexSet(object):
    '''
    **Vertex set** (i.e., immutable set of 0-based vertex indices stored as a
    sorted :mod:`numpy` array without duplicates).

    Vertex sets are unaware of the graph they are applied to. Range checks
    happen when a set is applied to a graph (e.g., by :func:`edge_count`).

    Attributes
    ----------
    indices : np.ndarray
        Read-only sorted 1-dimensional ``int64`` array of unique indices.
    '''

    __slots__ = ('indices',)

    def __init__(self, indices: IndicesType = ()) -> None:
        '''
        Initialize this vertex set from the passed vertex indices.

        Duplicate indices collapse to one member.

        Raises
        ----------
        SyncCertGraphVertexException
            If any index is negative or not integral.
        '''

        indices_array = np.asarray(list(indices) if not isinstance(
            indices, np.ndarray) else indices)

        # If this set is empty, default to an empty integer array.
        if indices_array.size == 0:
            indices_array = np.empty(0, dtype=np.int64)
        # Else if these indices are non-integral, raise an exception.
        elif not np.issubdtype(indices_array.dtype, np.integer):
            raise SyncCertGraphVertexException(
                f'Vertex indices {indices_array!r} not integral.')
        # Else if any index is negative, raise an exception.
        elif indices_array.min() < 0:
            raise SyncCertGraphVertexException(
                f'Vertex index {int(indices_array.min())} negative.')

        indices_array = np.unique(indices_array.astype(np.int64).ravel())
        indices_array.setflags(write=False)
        self.indices = indices_array

    # ..................{ FACTORIES                         }..................
    @classmethod
    def from_mask(cls, mask: Union[int, np.ndarray], n: int) -> 'VertexSet':
        '''
        Vertex set whose members are the set bits of the passed mask.

        Parameters
        ----------
        mask : Union[int, np.ndarray]
            Either a non-negative integer bitmask whose bit ``j`` selects
            vertex ``j`` *or* a boolean array of length ``n``.
        n : int
            Vertex count of the graph this set applies to.

        Raises
        ----------
        SyncCertGraphVertexException
            If this mask selects a vertex outside ``[0, n)``.
        '''

        if isinstance(mask, np.ndarray):
            if mask.shape != (n,):
                raise SyncCertGraphVertexException(
                    f'Mask shape {mask.shape} not ({n},).')
            return cls(np.flatnonzero(mask))
        # Else, this mask is an integer bitmask.

        if mask < 0 or mask >> n:
            raise SyncCertGraphVertexException(
                f'Bitmask {mask} selects vertices outside [0, {n}).')
        return cls(j for j in range(n) if (mask >> j) & 1)

    # ..................{ OPERATORS                         }..................
    def complement(self, n: int) -> 'VertexSet':
        '''
        Vertex set of all vertices in ``[0, n)`` *not* in this set.
        '''

        self.validate(n)
        mask = np.ones(n, dtype=bool)
        mask[self.indices] = False
        return VertexSet(np.flatnonzero(mask))


    def union(self, other: 'VertexSet') -> 'VertexSet':
        return VertexSet(np.union1d(self.indices, other.indices))


    def intersection(self, other: 'VertexSet') -> 'VertexSet':
        return VertexSet(np.intersect1d(self.indices, other.indices))


    def validate(self, n: int) -> None:
        '''
        Raise an exception unless every member of this set lies in
        ``[0, n)``.

        Raises
        ----------
        SyncCertGraphVertexException
            If any member is ``n`` or larger.
        '''

        if self.indices.size and self.indices[-1] >= n:
            raise SyncCertGraphVertexException(
                f'Vertex index {int(self.indices[-1])} outside [0, {n}).')

    # ..................{ DUNDERS                           }..................
    def __len__(self) -> int:
        return int(self.indices.size)


    def __iter__(self) -> Iterator[int]:
        return (int(index) for index in self.indices)


    def __contains__(self, index: object) -> bool:
        if not isinstance(index, (int, np.integer)):
            return False
        position = np.searchsorted(self.indices, index)
        return bool(
            position < self.indices.size and self.indices[position] == index)


    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return np.array_equal(self.indices, other.indices)


    def __hash__(self) -> int:
        return hash(self.indices.tobytes())


    def __repr__(self) -> str:
        return f'VertexSet({self.indices.tolist()!r})'

# ....................{ CLASSES ~ graph                   }....................
class Graph(object):
    '''
    **Graph** (i.e., immutable undirected unweighted graph with optional
    self-loops, stored as a symmetric 0/1 CSR adjacency matrix whose rows are
    the neighbor lists of each vertex).

    Graphs are immutable after construction and hence safe to share across
    threads.

    Attributes
    ----------
    n : int
        Vertex count.
    adjacency : scipy.sparse.csr_matrix
        Symmetric ``int8`` adjacency matrix with sorted column indices.
    self_loops_allowed : bool
        ``True`` only if this graph may contain self-loops.
    '''

    __slots__ = ('n', 'adjacency', 'self_loops_allowed')

    def __init__(
        self,
        n: int,
        adjacency: csr_matrix,
        self_loops_allowed: bool = True,
    ) -> None:
        assert isinstance(n, int), f'{repr(n)} not integer.'
        assert adjacency.shape == (n, n), (
            f'Adjacency shape {adjacency.shape} not ({n}, {n}).')

        adjacency = csr_matrix(adjacency, dtype=np.int8)
        adjacency.sort_indices()

        self.n = n
        self.adjacency = adjacency
        self.self_loops_allowed = self_loops_allowed

    # ..................{ PROPERTIES                        }..................
    @property
    def self_loop_count(self) -> int:
        '''
        Number of self-loops in this graph.
        '''

        return int(self.adjacency.diagonal().sum())


    @property
    def edge_total(self) -> int:
        '''
        Number of undirected edges in this graph, counting each self-loop as
        one edge.
        '''

        return (int(self.adjacency.nnz) + self.self_loop_count) // 2


    @property
    def max_degree(self) -> int:
        '''
        Largest vertex degree of this graph.
        '''

        return int(np.diff(self.adjacency.indptr).max()) if self.n else 0

    # ..................{ GETTERS                           }..................
    def neighbors(self, j: int) -> np.ndarray:
        '''
        Sorted 0-based neighbor indices of vertex ``j``, including ``j``
        itself if ``j`` carries a self-loop.
        '''

        _validate_vertex(self, j)
        return self.adjacency.indices[
            self.adjacency.indptr[j]:self.adjacency.indptr[j + 1]]


    def edges(self) -> Iterator[EdgeType]:
        '''
        Generator yielding each undirected edge ``(j, k)`` with ``j <= k``
        exactly once, in row-major order.
        '''

        indptr = self.adjacency.indptr
        indices = self.adjacency.indices
        for j in range(self.n):
            for k in indices[indptr[j]:indptr[j + 1]]:
                if k >= j:
                    yield (j, int(k))

    # ..................{ DUNDERS                           }..................
    def __eq__(self, other: object) -> bool:
        '''
        ``True`` only if the passed graph has the same vertex count and the
        same adjacency, regardless of its self-loop flag.
        '''

        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n and
            (self.adjacency != other.adjacency).nnz == 0
        )


    def __hash__(self) -> int:
        return hash((self.n, self.adjacency.indices.tobytes()))


    def __repr__(self) -> str:
        return (
            f'Graph(n={self.n}, edges={self.edge_total}, '
            f'self_loops={self.self_loop_count})'
        )

# ....................{ SAMPLERS                          }....................
@beartype
def sample_er(
    n: IntType,
    p: RealType,
    seed: IntType,
    self_loops_allowed: bool = True,
) -> Graph:
    '''
    Erdős–Rényi random graph on ``n`` vertices whose unordered pairs
    ``{j, k}`` (and, if ``self_loops_allowed``, self-loops ``(j, j)``) are
    each present independently with probability ``p``.

    Algorithm
    ----------
    Pairs ``j <= k`` (or ``j < k`` without self-loops) are linearized in
    row-major order and visited by **geometric skipping**: the gap between
    consecutive present pairs is drawn from a geometric distribution with
    success probability ``p``. This is equivalent in law to flipping one
    Bernoulli coin per pair but runs in time linear in the edge count.
    Gaps are drawn from :class:`numpy.random.PCG64` in chunks whose sizes
    depend only on ``(n, p)``, so identical ``(n, p, seed)`` yield identical
    graphs on every platform.

    Parameters
    ----------
    n : IntType
        Vertex count. Must be positive.
    p : RealType
        Edge probability in ``[0, 1]``.
    seed : IntType
        Seed in ``[0, 2**64)``.
    self_loops_allowed : bool
        ``True`` only if self-loops are sampled. Defaults to ``True``.

    Returns
    ----------
    Graph
        Sampled graph.

    Raises
    ----------
    SyncCertGraphParamException
        If ``n < 1``, ``p`` lies outside ``[0, 1]`` or ``seed`` lies outside
        ``[0, 2**64)``.
    '''

    n = int(n)
    p = float(p)
    seed = int(seed)

    if n < 1:
        raise SyncCertGraphParamException(f'Vertex count {n} not positive.')
    elif not 0.0 <= p <= 1.0:
        raise SyncCertGraphParamException(
            f'Edge probability {p} outside [0, 1].')
    elif not 0 <= seed <= SEED_MAX:
        raise SyncCertGraphParamException(
            f'Seed {seed} outside [0, 2**64).')

    # Number of candidate pairs in the row-major linearization.
    pair_total = n * (n + 1) // 2 if self_loops_allowed else n * (n - 1) // 2

    # Linear positions of all present pairs.
    if p == 0.0 or pair_total == 0:
        positions = np.empty(0, dtype=np.int64)
    elif p == 1.0:
        positions = np.arange(pair_total, dtype=np.int64)
    else:
        positions = _sample_positions(pair_total, p, seed)

    rows, cols = _unrank_pairs(positions, n, self_loops_allowed)

    logger.debug(
        'Sampled G(n=%d, p=%g, seed=%d): %d edges.',
        n, p, seed, positions.size)

    return _graph_from_pairs(n, rows, cols, self_loops_allowed)


def _sample_positions(pair_total: int, p: float, seed: int) -> np.ndarray:
    '''
    Sorted linear positions of present pairs among ``pair_total`` candidate
    pairs, each present independently with probability ``p``.
    '''
    assert 0.0 < p < 1.0, f'{p} not in (0, 1).'

    rng = np.random.Generator(np.random.PCG64(seed))

    # Chunk size depends only on the expected edge count.
    chunk_size = min(_GEOMETRIC_CHUNK_MAX, max(
        _GEOMETRIC_CHUNK_MIN, int(1.05 * p * pair_total) + 64))

    chunks = []
    position_last = -1
    while True:
        gaps = rng.geometric(p, size=chunk_size).astype(np.int64)
        chunk = position_last + np.cumsum(gaps)
        chunks.append(chunk)
        position_last = int(chunk[-1])

        if position_last >= pair_total:
            break

    positions = np.concatenate(chunks)
    return positions[positions < pair_total]


def _unrank_pairs(
    positions: np.ndarray, n: int, self_loops_allowed: bool,
) -> Tuple[np.ndarray, np.ndarray]:
    '''
    Row and column indices of the pairs at the passed row-major linear
    positions.
    '''

    # First linear position of each row j.
    j = np.arange(n, dtype=np.int64)
    if self_loops_allowed:
        row_starts = j * n - j * (j - 1) // 2
        row_offset = 0
    else:
        row_starts = j * (n - 1) - j * (j - 1) // 2
        row_offset = 1

    rows = np.searchsorted(row_starts, positions, side='right') - 1
    cols = rows + row_offset + (positions - row_starts[rows])
    return rows, cols

# ....................{ CONSTRUCTORS                      }....................
@beartype
def from_edges(
    n: IntType,
    edges: EdgesType,
    self_loops_allowed: bool = True,
) -> Graph:
    '''
    Graph on ``n`` vertices with the passed undirected 0-based edges.

    Raises
    ----------
    SyncCertGraphParamException
        If ``n < 1``, an edge is specified twice (in either orientation) or a
        self-loop is passed while self-loops are disallowed.
    SyncCertGraphVertexException
        If an edge references a vertex outside ``[0, n)``.
    '''

    n = int(n)
    if n < 1:
        raise SyncCertGraphParamException(f'Vertex count {n} not positive.')

    edges_seen = set()
    for edge in edges:
        j, k = (int(vertex) for vertex in edge)
        for vertex in (j, k):
            if not 0 <= vertex < n:
                raise SyncCertGraphVertexException(
                    f'Edge {edge!r} vertex {vertex} outside [0, {n}).')

        if j == k and not self_loops_allowed:
            raise SyncCertGraphParamException(
                f'Self-loop {edge!r} in graph disallowing self-loops.')

        edge_key = (min(j, k), max(j, k))
        if edge_key in edges_seen:
            raise SyncCertGraphParamException(f'Edge {edge!r} duplicated.')
        edges_seen.add(edge_key)

    if edges_seen:
        rows, cols = (np.array(side, dtype=np.int64) for side in zip(
            *sorted(edges_seen)))
    else:
        rows = cols = np.empty(0, dtype=np.int64)

    return _graph_from_pairs(n, rows, cols, self_loops_allowed)


@beartype
def complete_graph(n: IntType, self_loops: bool = True) -> Graph:
    '''
    Complete graph on ``n`` vertices, with a self-loop at every vertex if
    ``self_loops`` (i.e., the Erdős–Rényi graph at ``p = 1``).
    '''

    n = int(n)
    if n < 1:
        raise SyncCertGraphParamException(f'Vertex count {n} not positive.')

    adjacency = np.ones((n, n), dtype=np.int8)
    if not self_loops:
        np.fill_diagonal(adjacency, 0)
    return Graph(n, csr_matrix(adjacency), self_loops_allowed=self_loops)


@beartype
def cycle_graph(n: IntType) -> Graph:
    '''
    Cycle graph ``C_n`` on ``n >= 3`` vertices, vertex ``j`` adjacent to
    ``j +- 1 (mod n)``.
    '''

    n = int(n)
    if n < 3:
        raise SyncCertGraphParamException(f'Cycle length {n} < 3.')
    return from_edges(
        n, ((j, (j + 1) % n) for j in range(n)), self_loops_allowed=False)


@beartype
def path_graph(n: IntType) -> Graph:
    '''
    Path graph on ``n >= 1`` vertices, vertex ``j`` adjacent to ``j + 1``.
    '''

    return from_edges(
        n, ((j, j + 1) for j in range(int(n) - 1)), self_loops_allowed=False)


def _graph_from_pairs(
    n: int,
    rows: np.ndarray,
    cols: np.ndarray,
    self_loops_allowed: bool,
) -> Graph:
    '''
    Graph from the passed pairs ``(rows[i], cols[i])`` with ``rows <= cols``,
    each undirected edge listed exactly once.
    '''

    off_diagonal = rows != cols
    rows_sym = np.concatenate((rows, cols[off_diagonal]))
    cols_sym = np.concatenate((cols, rows[off_diagonal]))
    adjacency = csr_matrix(
        (np.ones(rows_sym.size, dtype=np.int8), (rows_sym, cols_sym)),
        shape=(n, n),
    )
    return Graph(n, adjacency, self_loops_allowed=self_loops_allowed)

# ....................{ GETTERS                           }....................
@beartype
def edge_count(g: Graph, C: VertexSet, C2: VertexSet) -> int:
    '''
    Number of edges between the passed vertex sets under the **ordered-pair
    convention** ``sum_{j in C, k in C2} A[j][k] = v_C^T A v_C2``.

    For disjoint sets this counts each crossing edge once. For ``C == C2``
    this counts each internal edge twice and each self-loop once.

    Raises
    ----------
    SyncCertGraphVertexException
        If either set references a vertex outside ``[0, g.n)``.
    '''

    C.validate(g.n)
    C2.validate(g.n)

    if not len(C) or not len(C2):
        return 0

    return int(g.adjacency[C.indices][:, C2.indices].sum())


@beartype
def degree_vector(g: Graph) -> np.ndarray:
    '''
    Degree of each vertex as adjacency row sums, a self-loop contributing
    exactly 1.
    '''

    return np.diff(g.adjacency.indptr).astype(np.int64)


@beartype
def laplacian(g: Graph) -> csr_matrix:
    '''
    Sparse graph Laplacian ``L = D - A`` as a ``float64`` CSR matrix.

    Self-loops cancel on the diagonal, so ``L @ 1 == 0``.
    '''

    return csr_matrix(
        diags(degree_vector(g).astype(np.float64)) -
        g.adjacency.astype(np.float64)
    )


@beartype
def density(g: Graph) -> float:
    '''
    Graph density ``(sum_{j,k} A_jk) / n**2``, the default reference
    probability of an explicit graph.
    '''

    return float(g.adjacency.nnz) / float(g.n) ** 2


@beartype
def is_connected(g: Graph) -> bool:
    '''
    ``True`` only if a breadth-first search from vertex 0 reaches every
    vertex.
    '''

    order = breadth_first_order(
        g.adjacency, 0, directed=False, return_predecessors=False)
    return int(order.size) == g.n


@beartype
def to_dense(
    g: Graph, dense_threshold: IntType = DENSE_THRESHOLD_DEFAULT,
) -> np.ndarray:
    '''
    Dense ``float64`` 0/1 adjacency matrix of the passed graph.

    Raises
    ----------
    SyncCertGraphDenseException
        If ``g.n`` exceeds ``dense_threshold``.
    '''

    if g.n > dense_threshold:
        raise SyncCertGraphDenseException(
            f'Graph with {g.n} vertices exceeds dense threshold '
            f'{dense_threshold}.')

    return g.adjacency.toarray().astype(np.float64)

# ....................{ PRIVATE ~ validators              }....................
def _validate_vertex(g: Graph, j: int) -> None:

    if not 0 <= j < g.n:
        raise SyncCertGraphVertexException(
            f'Vertex index {j} outside [0, {g.n}).')
