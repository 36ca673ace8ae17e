#!/usr/bin/python3

"""
Copyright (c) 2026, RainbowLib developers
All rights reserved.

This file is part of RainbowLib.

RainbowLib is free software: you can redistribute it and/or modify
it under the terms of the GNU Lesser General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

RainbowLib is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License
along with RainbowLib.  If not, see <https://www.gnu.org/licenses/>.

Graph representation, edge-list parsing and the metric primitives every other
module works from.
"""

import logging

from dataclasses import dataclass

import networkx as nx

from . import util
from .util import canonical_edge

log = logging.getLogger(__name__)


class GraphError(util.RainbowError):
    """ Exceptions related to graphs and graph files."""

    def __init__(self, *args, code=2, **kwargs):
        """Exceptions related to graphs and graph files.

        Arguments:
            code (:obj:`int`, optional, default=2): Exception error code.
    """
        super().__init__(*args, **kwargs)
        self.code = code


class Graph:
    """An immutable simple undirected graph on the vertices 0..n-1.

    Attributes:
        n(int): The number of vertices
        m(int): The number of edges
        edges(tuple): The edges as (small, large) pairs, sorted
        adjacency(tuple): Sorted neighbor tuple per vertex
    """

    __slots__ = ('_n', '_edges', '_edge_set', '_adjacency', '_nx')

    def __init__(self, n: int, edges=()) -> None:
        """Build a graph, rejecting anything that is not simple.

        Arguments:
            n(int): The vertex count
            edges(iterable): Vertex pairs, in any orientation
        """
        if n < 0:
            raise GraphError(f'Vertex count must not be negative, got {n}')
        seen: set = set()
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f'Edge ({a}, {b}) leaves the vertex range 0..{n - 1}')
            if a == b:
                raise GraphError(f'Self-loop at vertex {a}')
            edge = canonical_edge(a, b)
            if edge in seen:
                raise GraphError(f'Duplicate edge {edge}')
            seen.add(edge)

        neighbors: list = [[] for _ in range(n)]
        for a, b in seen:
            neighbors[a].append(b)
            neighbors[b].append(a)

        self._n = n
        self._edges = tuple(sorted(seen))
        self._edge_set = frozenset(seen)
        self._adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbors)

        graph = nx.Graph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from(self._edges)
        self._nx = nx.freeze(graph)

    def __repr__(self) -> str:
        return f'Graph(n={self._n}, m={len(self._edges)})'

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    @property
    def n(self) -> int:
        """The number of vertices"""
        return self._n

    @property
    def m(self) -> int:
        """The number of edges"""
        return len(self._edges)

    @property
    def edges(self) -> tuple:
        """All edges in canonical (small, large) form, sorted"""
        return self._edges

    @property
    def edge_set(self) -> frozenset:
        return self._edge_set

    @property
    def adjacency(self) -> tuple:
        return self._adjacency

    @property
    def nx_graph(self) -> nx.Graph:
        """A frozen networkx view of this graph"""
        return self._nx

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple:
        return self._adjacency[v]

    def has_edge(self, a: int, b: int) -> bool:
        return canonical_edge(a, b) in self._edge_set

    def to_edge_list(self) -> str:
        """Output the graph in the edge-list file format"""
        return ''.join(f'{a} {b}\n' for a, b in self._edges)


@dataclass(frozen=True)
class ShellDecomposition:
    """The first and second distance shells around a center vertex."""
    center: int
    shell1: frozenset
    shell2: frozenset


@dataclass(frozen=True)
class Metrics:
    """Eccentricity-derived metrics of a connected graph."""
    eccentricities: tuple
    radius: int
    diameter: int
    center_vertices: tuple


@dataclass(frozen=True)
class Eligibility:
    """The three hypotheses a graph needs before it can be 5-colored.

    Attributes:
        connected(bool): Whether the graph is connected
        bridge_count(int): How many bridges the graph has
        diameter(int): The diameter, or None when disconnected
    """
    connected: bool
    bridge_count: int
    diameter: object

    @property
    def bridgeless(self) -> bool:
        return self.bridge_count == 0

    @property
    def eligible(self) -> bool:
        return self.connected and self.bridgeless and self.diameter == 2

    @property
    def failed(self) -> list:
        """Names of the failed hypotheses, in a fixed order"""
        failed: list = []
        if not self.connected:
            failed.append('connected')
        if not self.bridgeless:
            failed.append('bridgeless')
        if self.connected and self.diameter != 2:
            failed.append('diameter=2')
        return failed

    @property
    def reason(self) -> str:
        """Short human reason, e.g. 'bridges, diam=3'"""
        if self.eligible:
            return ''
        reasons: list = []
        if not self.connected:
            reasons.append('disconnected')
        if not self.bridgeless:
            reasons.append('bridges')
        if self.connected and self.diameter != 2:
            reasons.append(f'diam={self.diameter}')
        return ', '.join(reasons)


def from_networkx(graph: nx.Graph) -> Graph:
    """Import a networkx graph, relabelling its nodes 0..n-1 in sorted order.

    Arguments:
        graph(nx.Graph): The graph to import

    Returns: Graph
    """
    if graph.is_directed() or graph.is_multigraph():
        raise GraphError('Only simple undirected graphs are supported')
    order = {node: index for index, node in enumerate(sorted(graph.nodes()))}
    return Graph(len(order), [(order[a], order[b]) for a, b in graph.edges()])


def complete_graph(n: int) -> Graph:
    return from_networkx(nx.complete_graph(n))


def cycle_graph(n: int) -> Graph:
    return from_networkx(nx.cycle_graph(n))


def path_graph(n: int) -> Graph:
    return from_networkx(nx.path_graph(n))


def wheel_graph(n: int) -> Graph:
    """The wheel on n vertices: hub 0 joined to the rim cycle 1..n-1"""
    return from_networkx(nx.wheel_graph(n))


def parse_edge_list(text: str) -> Graph:
    """ Parse the edge-list format into a Graph.

    One edge "u v" per line; blank lines and lines starting with '#' are
    skipped. The vertex count is one more than the largest index used.

    Arguments:
        text(str): The file contents.

    Returns: Graph
    """
    edges: list = []
    seen: dict = {}
    largest = -1

    for line_number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue

        words = line.split()
        if len(words) != 2:
            raise GraphError(
                f'Line {line_number}: expected two vertices, got "{line}"'
            )
        try:
            a, b = int(words[0]), int(words[1])
        except ValueError:
            raise GraphError(
                f'Line {line_number}: vertices must be integers, got "{line}"'
            )
        if a < 0 or b < 0:
            raise GraphError(
                f'Line {line_number}: vertices must not be negative, got "{line}"'
            )
        if a == b:
            raise GraphError(f'Line {line_number}: self-loop at vertex {a}')

        edge = canonical_edge(a, b)
        if edge in seen:
            raise GraphError(
                f'Line {line_number}: duplicate edge {a} {b} '
                f'(first given on line {seen[edge]})'
            )
        seen[edge] = line_number
        edges.append(edge)
        largest = max(largest, a, b)

    if not edges:
        raise GraphError('The graph file contains no edges')

    log.debug('Parsed %s edges on %s vertices', len(edges), largest + 1)
    return Graph(largest + 1, edges)


def distances_from(g: Graph, v: int) -> list:
    """ Breadth-first distances from v.

    Arguments:
        g(Graph): The graph
        v(int): The source vertex

    Returns: [int]
        Entry i is the distance v -> i, or util.UNREACHABLE.
    """
    if not 0 <= v < g.n:
        raise GraphError(f'Vertex {v} is not in the graph')
    lengths = nx.single_source_shortest_path_length(g.nx_graph, v)
    return [lengths.get(i, util.UNREACHABLE) for i in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return nx.is_connected(g.nx_graph)


def metrics(g: Graph) -> Metrics:
    """ Eccentricities, radius, diameter and center of a connected graph.

    Arguments:
        g(Graph): The graph

    Returns: Metrics
    """
    if not is_connected(g):
        raise GraphError('Metrics are only defined for connected graphs')
    ecc = nx.eccentricity(g.nx_graph)
    eccentricities = tuple(ecc[v] for v in range(g.n))
    radius = min(eccentricities)
    diameter = max(eccentricities)
    center = tuple(v for v in range(g.n) if eccentricities[v] == radius)
    return Metrics(eccentricities, radius, diameter, center)


def bridges(g: Graph) -> frozenset:
    """ The edges whose removal disconnects their component."""
    return frozenset(canonical_edge(a, b) for a, b in nx.bridges(g.nx_graph))


def shells(g: Graph, u: int) -> ShellDecomposition:
    """ Split the vertices at distance one and two from u.

    Arguments:
        g(Graph): The graph
        u(int): The center vertex

    Returns: ShellDecomposition
    """
    distance = distances_from(g, u)
    shell1 = frozenset(v for v in g.vertices() if distance[v] == 1)
    shell2 = frozenset(v for v in g.vertices() if distance[v] == 2)
    return ShellDecomposition(u, shell1, shell2)


def edges_between(g: Graph, xs, ys) -> frozenset:
    """ E[X, Y]: the edges with one end in X and the other end in Y.

    Arguments:
        g(Graph): The graph
        xs, ys(set): Vertex sets, which may overlap

    Returns: frozenset of canonical edges
    """
    xs = frozenset(xs)
    ys = frozenset(ys)
    found: set = set()
    for x in xs:
        for y in g.neighbors(x):
            if y in ys:
                found.add(canonical_edge(x, y))
    return frozenset(found)


def is_independent(g: Graph, xs) -> bool:
    """ True if no edge joins two members of xs."""
    xs = frozenset(xs)
    for x in xs:
        for y in g.neighbors(x):
            if y in xs:
                return False
    return True


def eligibility(g: Graph) -> Eligibility:
    """ Check connectivity, bridges and diameter in one pass.

    Returns: Eligibility
    """
    connected = is_connected(g)
    diameter = metrics(g).diameter if connected else None
    return Eligibility(connected, len(bridges(g)), diameter)
