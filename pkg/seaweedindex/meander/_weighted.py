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
Edge-weighted meander whose weights sum to the index of the nilradical's
poset part.

Blocks are processed top blocks left to right, then bottom blocks left to
right. The still-unweighted vertices of the current block B are split by the
blocks of the opposite side into runs V_1, ..., V_l:

(a) l = 1: every remaining arc of B gets weight 0;
(b) l > 1: with M = max(|V_1|, |V_l|) and m = min(|V_1|, |V_l|), the m arcs
    joining the first m vertices of V_1 to the last m vertices of V_l get
    weight M.

Then the rule is applied again to what is left of B.

"""

from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

from ..checks import InvariantViolation
from ..notation import blocks
from .meander import Edge, Side, build_meander


@dataclass(frozen=True, eq=False)
class WeightedMeander:
    """A meander with a nonnegative integer weight on every arc."""

    base: object
    weight: MappingProxyType

    def __post_init__(self):
        edges = set(self.base.edges)
        if set(self.weight) != edges:
            missing = sorted(tuple(e) for e in edges - set(self.weight))
            raise InvariantViolation('unweighted edges ' + str(missing))
        if any(w < 0 for w in self.weight.values()):
            raise InvariantViolation('negative edge weight')

    def __getitem__(self, edge):
        return self.weight[edge]


def _runs(vertices, labels):
    """Split an increasing vertex list into runs sharing an opposite block."""
    runs = [[vertices[0]]]
    for v in vertices[1:]:
        if labels[v] == labels[runs[-1][-1]]:
            runs[-1].append(v)
        else:
            runs.append([v])
    return runs


def _weigh_block(vertices, side, labels, arcs, weight):
    lo, hi = vertices[0], vertices[-1]
    remaining = list(vertices)
    fuel = len(remaining)
    while remaining:
        fuel -= 1
        if fuel < 0:
            raise InvariantViolation('weighting of block ' + str((lo, hi)) +
                                     ' did not terminate')
        runs = _runs(remaining, labels)
        if len(runs) == 1:
            k = 0
            while k < len(remaining) - 1 - k:
                weight[arcs[(remaining[k], remaining[-1 - k])]] = 0
                k += 1
            return
        first, last = runs[0], runs[-1]
        big = max(len(first), len(last))
        small = min(len(first), len(last))
        for k in range(small):
            pair = (first[k], last[len(last) - 1 - k])
            # the k-th vertex from each end must be joined by an arc of B
            if pair != (remaining[k], remaining[-1 - k]) or pair not in arcs:
                raise InvariantViolation(side.value + ' block ' +
                                         str((lo, hi)) + ' has no arc ' +
                                         str(pair))
            weight[arcs[pair]] = big
        remaining = remaining[small:len(remaining) - small]


def build_weighted(spec):
    r"""
    Weight every arc of the meander of a spec.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    WeightedMeander

    Raises
    ------
    InvariantViolation
        If the procedure claims an arc the meander does not have.

    Examples
    --------
    >>> from seaweedindex.notation import parse_spec
    >>> wm = build_weighted(parse_spec('p 2|3|1|2|2 / 7|3'))
    >>> total_weight(wm)
    6

    """
    base = build_meander(spec)
    top_labels = blocks(spec.top).labels()
    bottom_labels = blocks(spec.bottom).labels()
    weight = {}
    for side, own, labels, edges in (
            (Side.TOP, spec.top, bottom_labels, base.top_edges),
            (Side.BOTTOM, spec.bottom, top_labels, base.bottom_edges)):
        arcs = {(e.i, e.j): e for e in edges}
        partition = blocks(own)
        for k in range(len(partition)):
            _weigh_block(partition.vertices(k), side, labels, arcs, weight)
    return WeightedMeander(base, MappingProxyType(weight))


def total_weight(wm):
    """Sum of all arc weights."""
    return int(np.sum(list(wm.weight.values()), dtype=np.int64))


def edge_weight(wm, side, i, j):
    return wm.weight[Edge(Side(side), i, j)]
