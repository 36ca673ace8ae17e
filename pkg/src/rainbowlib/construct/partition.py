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

Vertex partitions used by the 5-coloring construction.
"""

import logging

from dataclasses import dataclass

from ..graph import Graph, shells
from ..util import format_vertices
from .trace import ConstructionError, describe_set

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Block:
    """A dominator and the block it dominates (the dominator included)"""
    dominator: int
    members: frozenset

    @property
    def others(self) -> frozenset:
        return self.members - {self.dominator}


@dataclass(frozen=True)
class BPartition:
    """ The split of the first shell N1(u).

    Attributes:
        center(int): u
        blocks(tuple): Block B_1..B_b, each with its dominator b_i
        adjacent(frozenset): B_{b+1}, leftovers adjacent to a non-dominator
        isolated(frozenset): B_{b+2}, leftovers isolated in G[N1(u)]
    """
    center: int
    blocks: tuple
    adjacent: frozenset
    isolated: frozenset

    @property
    def dominators(self) -> frozenset:
        return frozenset(block.dominator for block in self.blocks)

    @property
    def block_vertices(self) -> frozenset:
        found: set = set()
        for block in self.blocks:
            found |= block.members
        return frozenset(found)

    @property
    def non_dominators(self) -> frozenset:
        return self.block_vertices - self.dominators

    @property
    def covered(self) -> frozenset:
        """{u} together with B_1..B_{b+1}, the first staged set"""
        return frozenset({self.center}) | self.block_vertices | self.adjacent

    def describe(self) -> str:
        parts = [
            f'{block.dominator}:{{{format_vertices(block.members)}}}'
            for block in self.blocks
        ]
        parts.append(describe_set('adjacent', self.adjacent))
        parts.append(describe_set('isolated', self.isolated))
        return ' '.join(parts)


def partition_dominated(g: Graph, vertices) -> tuple:
    """ Greedily cover vertices with blocks of the induced subgraph.

    Each step picks, among uncovered vertices with at least one uncovered
    neighbour in the set, the one whose closed neighbourhood covers the most
    uncovered vertices (smallest index on ties).

    Arguments:
        g(Graph): The graph
        vertices(set): The vertex set to split

    Returns: (tuple, frozenset)
        The blocks, and the vertices no block covers.
    """
    vertices = frozenset(vertices)
    uncovered = set(vertices)
    blocks: list = []

    while True:
        best = None
        best_members: frozenset = frozenset()
        for v in sorted(uncovered):
            members = frozenset(
                {v} | {w for w in g.neighbors(v) if w in uncovered}
            )
            if len(members) >= 2 and len(members) > len(best_members):
                best = v
                best_members = members
        if best is None:
            break
        blocks.append(Block(best, best_members))
        uncovered -= best_members

    return tuple(blocks), frozenset(uncovered)


def partition_first_shell(g: Graph, u: int) -> BPartition:
    """ Build B_1..B_{b+2} for the first shell around u.

    Arguments:
        g(Graph): The graph
        u(int): The center

    Returns: BPartition
    """
    shell1 = shells(g, u).shell1
    blocks, leftover = partition_dominated(g, shell1)
    dominators = frozenset(block.dominator for block in blocks)
    block_vertices = frozenset().union(*(block.members for block in blocks))
    non_dominators = block_vertices - dominators

    adjacent: set = set()
    isolated: set = set()
    for v in leftover:
        neighbours = set(g.neighbors(v)) & shell1
        if neighbours & non_dominators:
            adjacent.add(v)
        elif not neighbours:
            isolated.add(v)
        else:
            # A leftover next to a dominator would have joined its block
            raise ConstructionError(
                f'Vertex {v} of N1({u}) is only adjacent to dominators', code=1
            )

    bpart = BPartition(u, blocks, frozenset(adjacent), frozenset(isolated))
    log.debug('B-partition around %s: %s', u, bpart.describe())
    return bpart


@dataclass(frozen=True)
class SecondShellPartition:
    """ The split of N2(u) by how its vertices reach X and Y.

    X and Y are the first-shell vertices whose edge to u is colored 1 and 2.
    Q sees both. S and T are the largest sets of vertices seeing only X
    (resp. only Y) in which every member has a neighbour in T or Q (resp. S
    or Q). The rest of N2 splits into P, which sees X, and L, which sees Y.
    P1 holds the members of P with exactly one neighbour in X.

    Attributes:
        mirrored(bool): Whether the roles of X and Y were swapped to make L
            empty; colors 1/2 and 3/4 must then be swapped too
    """
    x: frozenset
    y: frozenset
    s: frozenset
    t: frozenset
    q: frozenset
    p: frozenset
    l: frozenset
    p1: frozenset
    p2: frozenset
    mirrored: bool = False

    @property
    def covered(self) -> bool:
        """True when N2 = S, T and Q together"""
        return not self.p and not self.l

    def describe(self) -> str:
        return ' '.join(
            describe_set(name, getattr(self, name.lower()))
            for name in ('X', 'Y', 'S', 'T', 'Q', 'P', 'L', 'P1', 'P2')
        ) + (' mirrored' if self.mirrored else '')


def _split(g: Graph, x, y, shell2) -> dict:
    x = frozenset(x)
    y = frozenset(y)
    shell2 = frozenset(shell2)
    sees_x = {v for v in shell2 if x & set(g.neighbors(v))}
    sees_y = {v for v in shell2 if y & set(g.neighbors(v))}
    q = frozenset(sees_x & sees_y)
    s = set(sees_x - sees_y)
    t = set(sees_y - sees_x)

    # Largest S and T whose members each see T+Q (resp. S+Q)
    changed = True
    while changed:
        changed = False
        for v in sorted(s):
            if not set(g.neighbors(v)) & (t | q):
                s.discard(v)
                changed = True
        for v in sorted(t):
            if not set(g.neighbors(v)) & (s | q):
                t.discard(v)
                changed = True

    rest = shell2 - s - t - q
    p = frozenset(v for v in rest if v in sees_x)
    l = frozenset(v for v in rest if v in sees_y)
    p1 = frozenset(v for v in p if len(x & set(g.neighbors(v))) == 1)
    return dict(x=x, y=y, s=frozenset(s), t=frozenset(t), q=q,
                p=p, l=l, p1=p1, p2=p - p1)


def partition_second_shell(g: Graph, u: int, x, y) -> SecondShellPartition:
    """ Split N2(u) into S, T, Q, P and L.

    When P is empty but L is not, X and Y trade places so the result always
    has an empty L; the mirrored flag records the swap.

    Arguments:
        g(Graph): The graph
        u(int): The center
        x(set): First-shell vertices with hub color 1
        y(set): First-shell vertices with hub color 2

    Returns: SecondShellPartition
    """
    shell2 = shells(g, u).shell2
    parts = _split(g, x, y, shell2)
    mirrored = False

    if parts['p'] and parts['l']:
        raise ConstructionError(
            f'Both P={{{format_vertices(parts["p"])}}} and '
            f'L={{{format_vertices(parts["l"])}}} are nonempty around {u}',
            code=1
        )
    if parts['l']:
        parts = _split(g, y, x, shell2)
        mirrored = True

    partition = SecondShellPartition(mirrored=mirrored, **parts)
    log.debug('Second shell around %s: %s', u, partition.describe())
    return partition


def partition_d_blocks(g: Graph, x: int, p) -> tuple:
    """ The D-partition of P used when X is a single vertex x.

    Returns: (tuple, frozenset)
        The blocks D_1..D_d, and D_{d+1}.
    """
    blocks, leftover = partition_dominated(g, p)
    log.debug('D-partition of P for x=%s: %s blocks, %s left over',
              x, len(blocks), len(leftover))
    return blocks, leftover
