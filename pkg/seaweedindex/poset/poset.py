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

from dataclasses import dataclass

import networkx as nx
import numpy as np

from ..checks import SizeLimit, assert_strict_order
from ..notation import Composition, blocks

ISOMORPHISM_CAP = 14


@dataclass(frozen=True)
class Poset:
    """
    Finite poset on 1..size stored as its full strict relation.

    ``strict`` holds every pair (p, q) with p strictly below q, so the
    relation is materialised transitively closed.

    """

    size: int
    strict: frozenset

    def __post_init__(self):
        object.__setattr__(self, 'strict', frozenset(
            (int(p), int(q)) for p, q in self.strict))
        assert_strict_order(self.size, self.strict)

    @classmethod
    def from_pairs(cls, size, pairs):
        """Poset generated by ``pairs`` (transitive closure is taken)."""
        g = nx.DiGraph()
        g.add_nodes_from(range(1, size + 1))
        g.add_edges_from(pairs)
        closed = nx.transitive_closure(g, reflexive=False)
        return cls(size, frozenset(closed.edges()))

    def below(self):
        """Boolean matrix, entry [p - 1, q - 1] True iff p < q."""
        mat = np.zeros((self.size, self.size), dtype=bool)
        for p, q in self.strict:
            mat[p - 1, q - 1] = True
        return mat

    def to_digraph(self):
        g = nx.DiGraph()
        g.add_nodes_from(range(1, self.size + 1))
        g.add_edges_from(self.strict)
        return g


@dataclass(frozen=True)
class PosetStats:
    """Counts and sets derived from a poset's strict relation."""

    rel_count: int
    min_set: frozenset
    max_set: frozenset
    ext_set: frozenset
    down_counts: tuple
    up_counts: tuple
    covering_relations: tuple
    connected_components: tuple

    def down(self, p):
        return self.down_counts[p - 1]

    def up(self, p):
        return self.up_counts[p - 1]


def poset_stats(p):
    r"""
    Relation counts, extremal elements, covers and components of a poset.

    Parameters
    ----------
    p : Poset

    Returns
    -------
    PosetStats
        ``down_counts[k]`` and ``up_counts[k]`` belong to element k + 1;
        ``covering_relations`` is sorted; components are sorted tuples
        ordered by least element.

    Examples
    --------
    >>> s = poset_stats(chain_block_poset(Composition((2, 1, 3))))
    >>> sorted(s.min_set), sorted(s.max_set), s.rel_count
    ([1, 2], [4, 5, 6], 11)

    """
    below = p.below()
    down = below.sum(axis=0)
    up = below.sum(axis=1)
    elements = np.arange(1, p.size + 1)
    mins = frozenset(int(x) for x in elements[down == 0])
    maxs = frozenset(int(x) for x in elements[up == 0])
    as_int = below.astype(np.int64)
    two_step = (as_int @ as_int) > 0
    rows, cols = np.nonzero(below & ~two_step)
    covers = tuple(sorted((int(a) + 1, int(b) + 1) for a, b in
                          zip(rows, cols)))
    comps = sorted((tuple(sorted(c)) for c in
                    nx.weakly_connected_components(p.to_digraph())),
                   key=lambda c: c[0])
    return PosetStats(rel_count=len(p.strict),
                      min_set=mins,
                      max_set=maxs,
                      ext_set=mins | maxs,
                      down_counts=tuple(int(x) for x in down),
                      up_counts=tuple(int(x) for x in up),
                      covering_relations=covers,
                      connected_components=tuple(comps))


def chain_block_poset(c):
    r"""
    Layered poset of a composition.

    Layer j is an antichain of ``c[j]`` consecutive labels and every element
    of a layer lies below every element of each later layer.

    Parameters
    ----------
    c : Composition

    Returns
    -------
    Poset

    """
    if not isinstance(c, Composition):
        c = Composition(c)
    layer = blocks(c).labels()[1:]
    lower, upper = np.nonzero(layer[:, None] < layer[None, :])
    return Poset(c.sum, frozenset(zip(lower + 1, upper + 1)))


def index_nilpotent_poset(p):
    r"""
    Index of the nilpotent Lie poset algebra of a poset.

    ``|Rel(P)| - 2 * sum(min(D(p), U(p)))`` over the elements p that are
    neither minimal nor maximal, where D and U count strictly smaller and
    strictly larger elements.

    Parameters
    ----------
    p : Poset

    Returns
    -------
    int

    """
    stats = poset_stats(p)
    down = np.asarray(stats.down_counts)
    up = np.asarray(stats.up_counts)
    inner = (down > 0) & (up > 0)
    return stats.rel_count - 2 * int(np.sum(np.minimum(down, up)[inner]))


def index_chain_block_recursive(c):
    r"""
    Index of the layered poset algebra by peeling the outer layers.

    ``(a_1)`` gives 0 and ``(a_1, a_2)`` gives ``a_1 a_2``; otherwise the
    smaller of the outer layers is cancelled against the larger one and
    ``a_1 a_m`` is added.

    Parameters
    ----------
    c : Composition

    Returns
    -------
    int

    """
    parts = list(c.parts if isinstance(c, Composition) else c)
    if not parts:
        raise ValueError('a composition needs at least one part')
    total = 0
    while len(parts) > 2:
        first, last = parts[0], parts[-1]
        total += first * last
        if first == last:
            parts = parts[1:-1]
        elif first > last:
            parts = [first - last] + parts[1:-1]
        else:
            parts = parts[1:-1] + [last - first]
    if len(parts) == 2:
        total += parts[0] * parts[1]
    return total


def connected_components(p):
    r"""
    Connected subposets, relabelled.

    Parameters
    ----------
    p : Poset

    Returns
    -------
    list of (tuple of int, Poset)
        The original elements of each component in increasing order and the
        component relabelled onto 1..k by that order; components are sorted
        by least element.

    """
    out = []
    for elements in poset_stats(p).connected_components:
        relabel = {x: k + 1 for k, x in enumerate(elements)}
        strict = frozenset((relabel[a], relabel[b]) for a, b in p.strict
                           if a in relabel)
        out.append((elements, Poset(len(elements), strict)))
    return out


def hasse_heights(p):
    """Length of the longest chain ending at each element (minima are 0)."""
    stats = poset_stats(p)
    g = nx.DiGraph(list(stats.covering_relations))
    g.add_nodes_from(range(1, p.size + 1))
    height = {}
    for x in nx.topological_sort(g):
        height[x] = max((height[y] + 1 for y in g.predecessors(x)), default=0)
    return height


def poset_isomorphic(p, q, cap=ISOMORPHISM_CAP):
    r"""
    Decide whether two posets are order-isomorphic.

    Backtracking search (VF2) on the strict relation digraphs, pruned by
    matching the down count, up count and height of every element.

    Parameters
    ----------
    p, q : Poset
    cap : int, optional
        Largest size accepted. Default is 14.

    Returns
    -------
    bool

    Raises
    ------
    SizeLimit
        If either poset has more than ``cap`` elements.

    """
    if max(p.size, q.size) > cap:
        raise SizeLimit('poset of size ' + str(max(p.size, q.size)) +
                        ' exceeds the isomorphism cap of ' + str(cap))
    if p.size != q.size or len(p.strict) != len(q.strict):
        return False
    graphs = []
    for r in (p, q):
        stats = poset_stats(r)
        heights = hasse_heights(r)
        g = r.to_digraph()
        for x in g.nodes:
            g.nodes[x]['level'] = (stats.down(x), stats.up(x), heights[x])
        graphs.append(g)
    levels = [sorted(nx.get_node_attributes(g, 'level').values())
              for g in graphs]
    if levels[0] != levels[1]:
        return False
    return nx.is_isomorphic(graphs[0], graphs[1],
                            node_match=lambda a, b: a['level'] == b['level'])
