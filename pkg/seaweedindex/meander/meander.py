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

import enum
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

import networkx as nx
import numpy as np

from ..checks import InvariantViolation
from ..notation import blocks, partial_sums


class Side(enum.Enum):
    TOP = 'top'
    BOTTOM = 'bottom'


class Edge(NamedTuple):
    side: Side
    i: int
    j: int


def block_arcs(lo, hi, side):
    """Nested arcs of one block: first with last, second with second-to-last."""
    arcs = []
    while lo < hi:
        arcs.append(Edge(side, lo, hi))
        lo += 1
        hi -= 1
    return arcs


@dataclass(frozen=True)
class Meander:
    """N collinear vertices with top arcs and bottom arcs."""

    n_vertices: int
    top_edges: tuple
    bottom_edges: tuple

    def __post_init__(self):
        for side, edges in ((Side.TOP, self.top_edges),
                            (Side.BOTTOM, self.bottom_edges)):
            seen = Counter()
            for e in edges:
                if e.side is not side or not 1 <= e.i < e.j <= self.n_vertices:
                    raise InvariantViolation('bad ' + side.value + ' edge ' +
                                             str(tuple(e)))
                seen.update((e.i, e.j))
            if seen and max(seen.values()) > 1:
                raise InvariantViolation('vertex with two ' + side.value +
                                         ' edges')

    @property
    def edges(self):
        return self.top_edges + self.bottom_edges

    def to_graph(self):
        """networkx MultiGraph on 1..N keyed by side."""
        g = nx.MultiGraph()
        g.add_nodes_from(range(1, self.n_vertices + 1))
        for e in self.edges:
            g.add_edge(e.i, e.j, key=e.side.value)
        return g


@dataclass(frozen=True)
class CentralComponents:
    """Vertex intervals ``(lo, hi)`` cut at the common partial sums."""

    intervals: tuple

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def component_of(self, v):
        for k, (lo, hi) in enumerate(self.intervals):
            if lo <= v <= hi:
                return k
        raise ValueError(str(v) + ' was not a valid value for v')


def build_meander(spec):
    r"""
    Build the meander of a seaweed spec.

    Every top block gets nested concave-down arcs (first vertex to last,
    second to second-to-last, ...) as long as the endpoints differ; bottom
    blocks get concave-up arcs the same way.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    Meander

    Examples
    --------
    >>> from seaweedindex.notation import parse_spec
    >>> m = build_meander(parse_spec('p 2|4 / 1|2|3'))
    >>> [(e.i, e.j) for e in m.top_edges]
    [(1, 2), (3, 6), (4, 5)]
    >>> [(e.i, e.j) for e in m.bottom_edges]
    [(2, 3), (4, 6)]

    """
    top = []
    for lo, hi in blocks(spec.top):
        top.extend(block_arcs(lo, hi, Side.TOP))
    bottom = []
    for lo, hi in blocks(spec.bottom):
        bottom.extend(block_arcs(lo, hi, Side.BOTTOM))
    top.sort(key=lambda e: e.i)
    bottom.sort(key=lambda e: e.i)
    return Meander(spec.N, tuple(top), tuple(bottom))


def component_vertices(m):
    """Vertex sets of the connected components, ordered by least vertex."""
    comps = nx.connected_components(m.to_graph())
    return sorted((sorted(c) for c in comps), key=lambda c: c[0])


def cycles_and_paths(m):
    r"""
    Count the cycles and paths of a meander.

    A connected component is a cycle when it has as many edges as vertices
    (a parallel top/bottom pair is a 2-cycle); every other component,
    isolated vertices included, is a path.

    Parameters
    ----------
    m : Meander

    Returns
    -------
    tuple of int
        ``(C, P)``.

    """
    g = m.to_graph()
    cycles = 0
    paths = 0
    for comp in nx.connected_components(g):
        if g.subgraph(comp).number_of_edges() == len(comp):
            cycles += 1
        else:
            paths += 1
    return cycles, paths


def index_seaweed(spec):
    r"""
    Index of a seaweed algebra from its meander.

    ``2C + P`` for gl(N) seaweeds and ``2C + P - 1`` for the type-A ones,
    where C and P count cycles and paths of the meander.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    int

    References
    ----------
    [1] Dergachev, V., & Kirillov, A. (2000). Index of Lie algebras of
        seaweed type. J. Lie Theory, 10(2), 331-343.

    """
    cycles, paths = cycles_and_paths(build_meander(spec))
    ind = 2 * cycles + paths
    if spec.is_sl:
        ind -= 1
    return ind


def central_components(spec):
    r"""
    Central components of the meander.

    With ``PS(a) & PS(b) = {l_1 < ... < l_k}`` the components are the vertex
    intervals ``[1, l_1], [l_1 + 1, l_2], ..., [l_{k-1} + 1, l_k]``. There is
    always at least one, since N is a common partial sum.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    CentralComponents

    """
    cuts = sorted(partial_sums(spec.top) & partial_sums(spec.bottom))
    los = [1] + [c + 1 for c in cuts[:-1]]
    return CentralComponents(tuple(zip(los, cuts)))


def count_central_by_gaps(m):
    r"""
    Count central components from the arcs alone.

    One more than the number of gaps ``(i, i + 1)`` that no arc passes over.

    Parameters
    ----------
    m : Meander

    Returns
    -------
    int

    """
    cover = np.zeros(m.n_vertices + 1, dtype=np.int64)
    for e in m.edges:
        cover[e.i] += 1
        cover[e.j] -= 1
    crossing = np.cumsum(cover)[1:m.n_vertices]
    return 1 + int(np.count_nonzero(crossing == 0))


def simple_edges(m):
    r"""
    Arcs without a parallel partner.

    A top arc and a bottom arc on the same vertex pair are both dropped.

    Parameters
    ----------
    m : Meander

    Returns
    -------
    list of Edge
        Top arcs first, each side ordered by left endpoint.

    """
    pairs = Counter((e.i, e.j) for e in m.edges)
    return [e for e in m.edges if pairs[(e.i, e.j)] == 1]
