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

Partial colorings with per-edge provenance, the construction trace and the
errors that carry it.
"""

import logging

from dataclasses import dataclass, field

from debian import deb822

from .. import util
from ..coloring import EdgeColoring
from ..util import canonical_edge, format_vertices

log = logging.getLogger(__name__)

RESIDUAL = 'residual'
REPAIR = 'repair'


class ConstructionError(util.RainbowError):
    """ A case of the construction did not apply, or its output failed
    verification.

    Attributes:
        trace(ConstructionTrace): What had been built when the error happened
        violation(tuple): A vertex pair without a rainbow path, if known
    """

    def __init__(self, *args, code=3, trace=None, violation=None, **kwargs):
        """A case of the construction did not apply.

        Arguments:
            code (:obj:`int`, optional, default=3): Exception error code.
            trace (ConstructionTrace, optional): The partial trace.
            violation (tuple, optional): A failing vertex pair.
    """
        super().__init__(*args, **kwargs)
        self.code = code
        self.trace = trace
        self.violation = violation


class PreconditionError(ConstructionError):
    """ The input graph is not connected, bridgeless and of diameter 2."""

    def __init__(self, *args, failed=(), code=2, **kwargs):
        """The input graph is not eligible.

        Arguments:
            failed ([str]): The failed hypotheses, among 'connected',
                'bridgeless' and 'diameter=2'.
    """
        super().__init__(*args, code=code, **kwargs)
        self.failed = list(failed)


class PartialColoring:
    """Edge colors assigned so far, each with the rule that assigned it."""

    def __init__(self) -> None:
        self.colors: dict = {}
        self.rules: dict = {}

    def __len__(self) -> int:
        return len(self.colors)

    def color(self, a: int, b: int):
        """The color of {a, b}, or None while uncolored"""
        return self.colors.get(canonical_edge(a, b))

    def is_colored(self, a: int, b: int) -> bool:
        return canonical_edge(a, b) in self.colors

    def assign(self, a: int, b: int, color: int, rule: str) -> None:
        """Color {a, b}; recoloring with a different color is a conflict."""
        edge = canonical_edge(a, b)
        existing = self.colors.get(edge)
        if existing is None:
            self.colors[edge] = color
            self.rules[edge] = rule
            log.debug('Edge %s -> %s (%s)', edge, color, rule)
        elif existing != color:
            raise ConstructionError(
                f'Rule {rule} wants color {color} on edge {edge}, which '
                f'{self.rules[edge]} already colored {existing}'
            )

    def offer(self, a: int, b: int, color: int, rule: str) -> bool:
        """Color {a, b} only if it is still uncolored."""
        edge = canonical_edge(a, b)
        if edge in self.colors:
            return False
        self.colors[edge] = color
        self.rules[edge] = rule
        return True

    def offer_all(self, edges, color: int, rule: str) -> int:
        """Offer a color to many edges; returns how many took it."""
        taken = 0
        for a, b in sorted(edges):
            if self.offer(a, b, color, rule):
                taken += 1
        return taken

    def relabel(self, permutation: dict) -> None:
        self.colors = {
            edge: permutation.get(color, color) for edge, color in self.colors.items()
        }

    def fill(self, edges, color: int, rule: str = RESIDUAL) -> int:
        """Give every uncolored edge of edges the color."""
        return self.offer_all(edges, color, rule)

    def to_coloring(self, num_colors: int = util.MAX_THEOREM_COLORS) -> EdgeColoring:
        return EdgeColoring(num_colors, self.colors)


@dataclass
class Claim:
    """A claim the construction relies on, checked while it runs"""
    name: str
    holds: bool
    detail: str = ''


@dataclass
class ConstructionTrace:
    """Everything needed to explain a constructed coloring.

    Attributes:
        center(int): The center vertex u
        bpartition(BPartition): The first-shell block partition
        stages(StagedSets): The staged sets and their cycles
        second_shell(SecondShellPartition): The X/Y/S/T/Q/P/L split, if reached
        dpartition(tuple): The D-blocks of subcase 2.1, if reached
        partial(PartialColoring): Colors and the rule behind each one
        terminal_case(TerminalCase): The completion that finished the coloring
        mirrored(bool): Whether colors 1/2 and 3/4 were swapped so that L is empty
        claims([Claim]): Runtime-checked claims and whether they held
        repairs([tuple]): (edge, old color, new color) changes of the repair search
        attempts([tuple]): (center, outcome) for every center tried
        certificate(RainbowCertificate): The internal verification result
    """
    center: int
    bpartition: object = None
    stages: object = None
    second_shell: object = None
    dpartition: object = None
    partial: PartialColoring = field(default_factory=PartialColoring)
    terminal_case: object = None
    mirrored: bool = False
    claims: list = field(default_factory=list)
    repairs: list = field(default_factory=list)
    attempts: list = field(default_factory=list)
    certificate: object = None

    @property
    def provenance(self) -> dict:
        """edge -> the rule that colored it"""
        return self.partial.rules

    def claim(self, name: str, holds: bool, detail: str = '') -> None:
        self.claims.append(Claim(name, holds, detail))
        if not holds:
            log.warning('Claim "%s" does not hold: %s', name, detail)

    @property
    def deb822(self) -> str:
        """Output the trace as Deb822 paragraphs: a header, then one per edge"""
        header = deb822.Deb822()
        header['Center'] = str(self.center)
        header['Terminal-Case'] = self.terminal_case.value if self.terminal_case else 'none'
        header['Mirrored'] = 'yes' if self.mirrored else 'no'
        if self.bpartition is not None:
            header['Blocks'] = self.bpartition.describe()
        if self.stages is not None:
            header['Stages'] = ''.join(
                f'\n {stage.describe()}' for stage in self.stages.cycles
            )
        if self.second_shell is not None:
            header['Second-Shell'] = self.second_shell.describe()
        if self.claims:
            header['Claims'] = ''.join(
                f'\n {claim.name}: {"holds" if claim.holds else "fails"} {claim.detail}'.rstrip()
                for claim in self.claims
            )
        if self.repairs:
            header['Repairs'] = ''.join(
                f'\n {a} {b} {old} {new}' for (a, b), old, new in self.repairs
            )
        if self.attempts:
            header['Attempts'] = ''.join(
                f'\n {center} {outcome}' for center, outcome in self.attempts
            )

        output = header.dump()
        for edge in sorted(self.partial.colors):
            paragraph = deb822.Deb822()
            paragraph['Edge'] = f'{edge[0]} {edge[1]}'
            paragraph['Color'] = str(self.partial.colors[edge])
            paragraph['Rule'] = self.partial.rules[edge]
            output += '\n' + paragraph.dump()
        return output

    @property
    def ui(self) -> str:
        lines = [f'Center: {self.center}']
        if self.terminal_case:
            lines.append(f'Terminal case: {self.terminal_case.value}')
        if self.stages is not None:
            lines.append(f'Stages: {len(self.stages.cycles)}')
        if self.mirrored:
            lines.append('Mirrored: yes')
        failed = [claim.name for claim in self.claims if not claim.holds]
        if failed:
            lines.append(f'Failed claims: {", ".join(failed)}')
        if self.repairs:
            lines.append(f'Repaired edges: {len(self.repairs)}')
        return util.PRETTY_PRINT.join(lines) + '\n'


def parse_trace_rules(text: str) -> tuple:
    """ Read a trace file back.

    Returns: (dict, dict)
        The header fields, and edge -> (color, rule).
    """
    paragraphs = list(deb822.Deb822.iter_paragraphs(text.splitlines(), use_apt_pkg=False))
    if not paragraphs:
        raise ConstructionError('The trace file is empty', code=2)
    header = dict(paragraphs[0])
    rules: dict = {}
    for paragraph in paragraphs[1:]:
        a, b = (int(word) for word in paragraph['Edge'].split())
        rules[canonical_edge(a, b)] = (int(paragraph['Color']), paragraph['Rule'])
    return header, rules


def describe_set(name: str, vertices) -> str:
    return f'{name}={{{format_vertices(vertices)}}}'
