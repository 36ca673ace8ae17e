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

Brute-force oracles, random inputs and small fixture graphs shared by the
tests.
"""

import collections
import itertools

import numpy as np

from ..coloring import EdgeColoring
from ..graph import Graph
from ..util import canonical_edge


def naive_distances(g: Graph, s: int) -> list:
    """Breadth-first search written out by hand; None for unreachable"""
    distance = [None] * g.n
    distance[s] = 0
    queue = collections.deque([s])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if distance[w] is None:
                distance[w] = distance[v] + 1
                queue.append(w)
    return distance


def naive_connected(g: Graph, skip=None) -> bool:
    if g.n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if skip == canonical_edge(v, w) or w in seen:
                continue
            seen.add(w)
            stack.append(w)
    return len(seen) == g.n


def bridge_oracle(g: Graph) -> frozenset:
    """Edges whose deletion disconnects a connected graph"""
    return frozenset(edge for edge in g.edges if not naive_connected(g, skip=edge))


def oracle_reachable(g: Graph, c: EdgeColoring, s: int) -> set:
    """Vertices joined to s by a simple rainbow path, by exhaustive search"""
    found = {s}

    def walk(v, visited, used):
        for w in g.neighbors(v):
            color = c.color(v, w)
            if w in visited or color in used:
                continue
            found.add(w)
            walk(w, visited | {w}, used | {color})

    walk(s, {s}, frozenset())
    return found


def oracle_rainbow_connected(g: Graph, c: EdgeColoring) -> bool:
    return all(len(oracle_reachable(g, c, s)) == g.n for s in range(g.n))


def brute_force_rc(g: Graph) -> int:
    """Smallest t for which some t^m coloring is rainbow connected"""
    for num_colors in range(1, g.m + 1):
        for colors in itertools.product(range(1, num_colors + 1), repeat=g.m):
            coloring = EdgeColoring(num_colors, dict(zip(g.edges, colors)))
            if oracle_rainbow_connected(g, coloring):
                return num_colors
    return 0


def random_connected_graph(rng: np.random.Generator, n: int, m: int) -> Graph:
    """A random spanning tree plus random extra edges, m edges in total"""
    edges = set()
    for v in range(1, n):
        edges.add(canonical_edge(v, int(rng.integers(v))))
    others = [pair for pair in itertools.combinations(range(n), 2) if pair not in edges]
    extra = max(0, min(m - len(edges), len(others)))
    for index in rng.choice(len(others), size=extra, replace=False):
        edges.add(others[int(index)])
    return Graph(n, edges)


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    return Graph(n, [pair for pair in pairs if rng.random() < p])


def random_edge_coloring(rng: np.random.Generator, g: Graph, num_colors: int) -> EdgeColoring:
    return EdgeColoring(
        num_colors,
        {edge: int(rng.integers(1, num_colors + 1)) for edge in g.edges}
    )


# Fixture graphs for the terminal cases; all have diameter 2 and no
# bridges. Where a docstring names X and Y, the center is 0.

def covered_example() -> Graph:
    """X={1}, Y={2}; the second shell is S={3} and T={4}"""
    return Graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)])


def case1_example() -> Graph:
    """X={1, 2}, Y={3, 4}; P={5} has two neighbours in X"""
    return Graph(6, [
        (0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 4), (1, 5), (2, 5),
    ])


def mirrored_example() -> Graph:
    """case1_example with the second-shell vertex moved over to Y"""
    return Graph(6, [
        (0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (2, 4), (3, 5), (4, 5),
    ])


def anchored_example() -> Graph:
    """X={1, 2}, Y={3, 4}, P1={5}; 2 has no neighbour in P1"""
    return Graph(7, [
        (0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4),
        (1, 5), (1, 6), (2, 6), (5, 6),
    ])


def single_x_example() -> Graph:
    """X is a single vertex"""
    return Graph(9, [
        (0, 2), (0, 4), (1, 2), (1, 5), (1, 6), (1, 7), (1, 8), (2, 3),
        (2, 4), (2, 5), (2, 7), (2, 8), (3, 5), (3, 8), (4, 5), (4, 6),
        (4, 7), (5, 6), (5, 7),
    ])


def spread_example() -> Graph:
    """Every vertex of X that is not isolated meets P1"""
    return Graph(10, [
        (0, 3), (0, 4), (0, 8), (1, 2), (1, 6), (1, 7), (1, 8), (1, 9),
        (2, 4), (2, 5), (2, 9), (3, 4), (3, 8), (4, 5), (4, 6), (4, 7),
        (4, 8), (5, 6), (5, 9), (6, 8), (6, 9), (7, 9), (8, 9),
    ])


def repair_example() -> Graph:
    """The construction around 0 leaves 1 and 2 without a rainbow path"""
    return Graph(7, [
        (0, 4), (0, 6), (1, 5), (1, 6), (2, 5), (2, 6), (3, 4), (3, 5),
        (4, 5), (4, 6), (5, 6),
    ])
