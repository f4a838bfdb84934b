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
Directed block diagram of a seaweed and the poset of its nilradical.

The blocks C_1, ..., C_l are the nonempty intersections of a top block with a
bottom block. A cut between C_i and C_{i+1} coming from the top composition
only gives the arrow C_i -> C_{i+1}; one from the bottom composition only
gives C_{i+1} -> C_i; a cut shared by both separates the two blocks.

"""

import enum
from dataclasses import dataclass

import networkx as nx
import numpy as np

from ..checks import InvariantViolation
from ..notation import partial_sums, seaweed_pattern
from .poset import Poset


class Arrow(enum.Enum):
    FORWARD = 'F'
    BACKWARD = 'B'
    NONE = 'N'


@dataclass(frozen=True)
class BlockDiagram:
    """Circled blocks ``(lo, hi)`` and the arrows between neighbours."""

    blocks: tuple
    arrows: tuple

    def __post_init__(self):
        if len(self.arrows) != len(self.blocks) - 1:
            raise InvariantViolation('need one arrow per pair of neighbours')
        expected = 1
        for lo, hi in self.blocks:
            if lo != expected or hi < lo:
                raise InvariantViolation('blocks do not tile 1..N')
            expected = hi + 1

    @property
    def N(self):
        return self.blocks[-1][1]

    def sizes(self):
        return [hi - lo + 1 for lo, hi in self.blocks]

    def labels(self):
        """Array whose entry v (v >= 1) is the index of the block holding v."""
        lab = np.zeros(self.N + 1, dtype=np.int64)
        for i, (lo, hi) in enumerate(self.blocks):
            lab[lo:hi + 1] = i
        return lab

    def components(self):
        """Maximal runs ``(first, last)`` of blocks joined by arrows."""
        runs = []
        start = 0
        for i, arrow in enumerate(self.arrows):
            if arrow is Arrow.NONE:
                runs.append((start, i))
                start = i + 1
        runs.append((start, len(self.blocks) - 1))
        return runs


def build_block_diagram(spec):
    r"""
    Block diagram of a seaweed spec.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    BlockDiagram
        Blocks cut at ``PS(a) | PS(b)``; the arrow after a block is FORWARD
        for a top-only cut, BACKWARD for a bottom-only cut and NONE for a
        shared cut.

    Examples
    --------
    >>> from seaweedindex.notation import parse_spec
    >>> bd = build_block_diagram(parse_spec('p 2|3|1|2|2 / 7|3'))
    >>> ''.join(a.value for a in bd.arrows)
    'FFFBF'

    """
    top = partial_sums(spec.top)
    bottom = partial_sums(spec.bottom)
    cuts = sorted(top | bottom)
    los = [1] + [c + 1 for c in cuts[:-1]]
    arrows = []
    for c in cuts[:-1]:
        if c in top and c in bottom:
            arrows.append(Arrow.NONE)
        elif c in top:
            arrows.append(Arrow.FORWARD)
        else:
            arrows.append(Arrow.BACKWARD)
    return BlockDiagram(tuple(zip(los, cuts)), tuple(arrows))


def poset_from_diagram(bd):
    r"""
    Poset of directed reachability between blocks.

    p < q iff p and q lie in different blocks and the arrows lead from the
    block of p to the block of q; elements of one block are incomparable.

    Parameters
    ----------
    bd : BlockDiagram

    Returns
    -------
    Poset

    """
    g = nx.DiGraph()
    g.add_nodes_from(range(len(bd.blocks)))
    for i, arrow in enumerate(bd.arrows):
        if arrow is Arrow.FORWARD:
            g.add_edge(i, i + 1)
        elif arrow is Arrow.BACKWARD:
            g.add_edge(i + 1, i)
    reach = nx.transitive_closure(g, reflexive=False)
    strict = set()
    for i, j in reach.edges():
        lo_i, hi_i = bd.blocks[i]
        lo_j, hi_j = bd.blocks[j]
        strict.update((p, q) for p in range(lo_i, hi_i + 1)
                      for q in range(lo_j, hi_j + 1))
    return Poset(bd.N, frozenset(strict))


def nilradical_poset(spec):
    r"""
    Poset read off the seaweed pattern.

    p < q iff ``E_{p,q}`` lies in the seaweed and ``E_{q,p}`` does not, i.e.
    exactly the off-diagonal part of the nilradical.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    Poset

    """
    pattern = seaweed_pattern(spec)
    rows, cols = np.nonzero(pattern & ~pattern.T)
    return Poset(spec.N, frozenset(zip(rows + 1, cols + 1)))


def tightness_shape(spec):
    r"""
    True for the shapes where the nilradical index meets its lower bound.

    Every part of both compositions is 1 or 2, or the bottom composition is
    ``(N)`` and every top part is 1 or 2.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    bool

    """
    small_top = all(a <= 2 for a in spec.top)
    if len(spec.bottom) == 1:
        return small_top
    return small_top and all(b <= 2 for b in spec.bottom)
