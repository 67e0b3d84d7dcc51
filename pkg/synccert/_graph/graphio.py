#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert edge-list reader and writer.**

Edge-list files are UTF-8 text with LF line endings. The first non-comment
line is the vertex count ``n``; each subsequent non-comment line is one
undirected edge ``j k`` in **1-based** indices, a self-loop being ``j j``.
Lines whose first non-whitespace character is ``#`` and blank lines are
ignored. Pairs with ``j > k`` are accepted and normalized; specifying the
same edge twice (in either orientation) is an error.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import logging
from beartype import beartype
from synccert.cave import PathType
from synccert.roar import SyncCertGraphFormatException
from synccert._graph.graphmain import Graph, from_edges

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ GLOBALS                           }....................
logger = logging.getLogger(__name__)

# ....................{ READERS                           }....................
@beartype
def load_graph(path: PathType) -> Graph:
    '''
    Graph deserialized from the edge-list file with the passed path.

    Loaded graphs always allow self-loops, as the format cannot say
    otherwise.

    Raises
    ----------
    SyncCertGraphFormatException
        If this file is malformed, references a vertex outside ``[1, n]`` or
        specifies the same edge twice. The exception's ``line_number`` is the
        1-based number of the offending line.
    OSError
        If this file is unreadable.
    '''

    with open(path, 'r', encoding='utf-8') as graph_file:
        lines = graph_file.read().split('\n')

    n = None
    edges = []
    edges_seen = {}

    for line_number, line in enumerate(lines, start=1):
        line = line.strip()

        # If this line is blank or a comment, skip this line.
        if not line or line.startswith('#'):
            continue
        # Else, this line is significant.

        fields = line.split()

        # If the vertex count has yet to be read, this line must be it.
        if n is None:
            if len(fields) != 1:
                raise SyncCertGraphFormatException(
                    f'{path}:{line_number}: vertex count line "{line}" '
                    f'not a single integer.', line_number)
            n = _parse_int(fields[0], path, line_number)
            if n < 1:
                raise SyncCertGraphFormatException(
                    f'{path}:{line_number}: vertex count {n} not positive.',
                    line_number)
            continue
        # Else, this line is an edge.

        if len(fields) != 2:
            raise SyncCertGraphFormatException(
                f'{path}:{line_number}: edge line "{line}" not "j k".',
                line_number)

        j, k = (_parse_int(field, path, line_number) for field in fields)
        for vertex in (j, k):
            if not 1 <= vertex <= n:
                raise SyncCertGraphFormatException(
                    f'{path}:{line_number}: vertex {vertex} '
                    f'outside [1, {n}].', line_number)

        edge = (min(j, k) - 1, max(j, k) - 1)
        if edge in edges_seen:
            raise SyncCertGraphFormatException(
                f'{path}:{line_number}: edge "{line}" duplicates line '
                f'{edges_seen[edge]}.', line_number)
        edges_seen[edge] = line_number
        edges.append(edge)

    if n is None:
        raise SyncCertGraphFormatException(
            f'{path}: vertex count line not found.')

    logger.debug('Loaded %d edges on %d vertices from "%s".',
        len(edges), n, path)

    return from_edges(n, edges, self_loops_allowed=True)

# ....................{ WRITERS                           }....................
@beartype
def save_graph(g: Graph, path: PathType) -> None:
    '''
    Serialize the passed graph to the edge-list file with the passed path,
    writing each edge once as ``j k`` with ``j <= k`` in 1-based indices in
    row-major order.
    '''

    with open(path, 'w', encoding='utf-8', newline='\n') as graph_file:
        graph_file.write(f'{g.n}\n')
        for j, k in g.edges():
            graph_file.write(f'{j + 1} {k + 1}\n')

    logger.debug('Saved %r to "%s".', g, path)

# ....................{ PRIVATE ~ parsers                 }....................
def _parse_int(field: str, path: object, line_number: int) -> int:

    try:
        return int(field)
    except ValueError:
        raise SyncCertGraphFormatException(
            f'{path}:{line_number}: "{field}" not an integer.', line_number)
