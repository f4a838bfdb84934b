# -- coding: utf-8 --
# MIT License
#
# Copyright (c) 2026 seaweedindex developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

r"""
In/out decomposition of a connected block diagram into layered posets.

A connected component of the diagram turns at its sources and sinks. Each
uniformly directed run between two turning blocks is a layered poset
``P(a_1, ..., a_m)``, stored bottom layer first. Neighbouring runs share the
turning block: an ``out`` component (first block a source) shares the top
layers of runs 1 and 2, then the bottom layers of runs 2 and 3, and so on;
an ``in`` component starts with bottom layers.

"""

import enum
from dataclasses import dataclass

from ..checks import GlueError
from ..notation import Composition
from ._blocks import Arrow
from .poset import Poset


class Orientation(enum.Enum):
    IN = 'in'
    OUT = 'out'


@dataclass(frozen=True)
class InOutDecomposition:
    """Orientation plus one composition per uniformly directed run."""

    orientation: Orientation
    segments: tuple

    def __post_init__(self):
        object.__setattr__(self, 'orientation',
                           Orientation(self.orientation))
        object.__setattr__(self, 'segments', tuple(
            s if isinstance(s, Composition) else Composition(s)
            for s in self.segments))
        if not self.segments:
            raise GlueError('a decomposition needs at least one segment')
        _check_interfaces(self)

    def glue_sides(self):
        """Which layer (0 first, -1 last) each neighbouring pair shares."""
        side = -1 if self.orientation is Orientation.OUT else 0
        sides = []
        for _ in range(len(self.segments) - 1):
            sides.append(side)
            side = 0 if side == -1 else -1
        return sides


def _check_interfaces(d):
    for k, side in enumerate(d.glue_sides()):
        left = d.segments[k][side]
        right = d.segments[k + 1][side]
        if left != right:
            which = 'last' if side == -1 else 'first'
            raise GlueError('segments ' + str(k + 1) + ' and ' + str(k + 2) +
                            ' disagree on the ' + which + ' layer: ' +
                            str(left) + ' != ' + str(right))


def decompose_in_out(bd):
    r"""
    Decompose every connected component of a block diagram.

    Parameters
    ----------
    bd : BlockDiagram

    Returns
    -------
    list of InOutDecomposition
        One per component, left to right. A component whose first arrow is
        BACKWARD is ``in``; every other component, a lone block included, is
        ``out``.

    Examples
    --------
    >>> from seaweedindex.notation import parse_spec
    >>> from seaweedindex.poset import build_block_diagram
    >>> d, = decompose_in_out(build_block_diagram(
    ...     parse_spec('p 2|3|1|2|2 / 7|3')))
    >>> d.orientation.value, [s.parts for s in d.segments]
    ('out', [(2, 3, 1, 1), (1, 1), (1, 2)])

    """
    sizes = bd.sizes()
    out = []
    for first, last in bd.components():
        if first == last:
            out.append(InOutDecomposition(Orientation.OUT,
                                          (Composition((sizes[first],)),)))
            continue
        arrows = bd.arrows[first:last]
        turns = [first] + [first + k for k in range(1, len(arrows))
                           if arrows[k] is not arrows[k - 1]] + [last]
        segments = []
        for u, v in zip(turns[:-1], turns[1:]):
            run = sizes[u:v + 1]
            if bd.arrows[u] is Arrow.BACKWARD:
                run = run[::-1]
            segments.append(Composition(tuple(run)))
        orientation = Orientation.IN if arrows[0] is Arrow.BACKWARD \
            else Orientation.OUT
        out.append(InOutDecomposition(orientation, tuple(segments)))
    return out


def glue_in_out(d):
    r"""
    Build the poset of an in/out decomposition.

    Parameters
    ----------
    d : InOutDecomposition

    Returns
    -------
    Poset
        Labels are assigned segment by segment, bottom layer first; a shared
        layer keeps the labels it got in the earlier segment.

    Raises
    ------
    GlueError
        If neighbouring segments disagree on the size of the shared layer.

    """
    _check_interfaces(d)
    sides = d.glue_sides()
    next_label = 1
    previous = None
    pairs = set()
    for k, segment in enumerate(d.segments):
        shared = None if previous is None else sides[k - 1] % len(segment)
        layers = []
        for j, size in enumerate(segment):
            if j == shared:
                layers.append(previous[sides[k - 1]])
                continue
            layers.append(range(next_label, next_label + size))
            next_label += size
        for lower in range(len(layers)):
            for upper in range(lower + 1, len(layers)):
                pairs.update((p, q) for p in layers[lower]
                             for q in layers[upper])
        previous = layers
    return Poset.from_pairs(next_label - 1, pairs)
