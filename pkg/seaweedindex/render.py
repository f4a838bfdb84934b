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
DOT and TikZ sources for meanders, block diagrams and Hasse diagrams.

Only diagram source text is produced; nothing is rendered to an image.
Output is deterministic: vertices in increasing order, top arcs before bottom
arcs, each side by left endpoint.

"""

from collections import defaultdict

import graphviz

from .checks import invalid_value
from .meander import Side, build_meander, build_weighted
from .poset import (Arrow, build_block_diagram, hasse_heights,
                    poset_from_diagram, poset_stats)

KINDS = ('meander', 'weighted', 'blocks', 'hasse')
FORMATS = ('dot', 'tikz')


def _arc_labels(spec, weighted):
    m = build_meander(spec)
    if not weighted:
        return [(e, None) for e in m.edges]
    wm = build_weighted(spec)
    return [(e, wm[e]) for e in m.edges]


def meander_dot(spec, weighted=False):
    r"""
    DOT source of the meander of a spec.

    Parameters
    ----------
    spec : SeaweedSpec
    weighted : bool, optional
        Label every arc with its weight. Default is False.

    Returns
    -------
    str

    """
    g = graphviz.Graph('meander', graph_attr={'rankdir': 'LR'},
                       node_attr={'shape': 'circle'})
    with g.subgraph() as row:
        row.attr(rank='same')
        for v in range(1, spec.N + 1):
            row.node(str(v))
    for e, w in _arc_labels(spec, weighted):
        attrs = {'side': e.side.value}
        if w is not None:
            attrs['label'] = str(w)
        g.edge(str(e.i), str(e.j), **attrs)
    return g.source


def blocks_dot(spec):
    """DOT source of the directed block diagram."""
    bd = build_block_diagram(spec)
    g = graphviz.Digraph('blocks', graph_attr={'rankdir': 'LR'},
                         node_attr={'shape': 'ellipse'})
    for k, (lo, hi) in enumerate(bd.blocks):
        g.node('C' + str(k + 1), ','.join(str(v) for v in range(lo, hi + 1)))
    for k, arrow in enumerate(bd.arrows):
        if arrow is Arrow.FORWARD:
            g.edge('C' + str(k + 1), 'C' + str(k + 2))
        elif arrow is Arrow.BACKWARD:
            g.edge('C' + str(k + 2), 'C' + str(k + 1))
    return g.source


def hasse_dot(p):
    r"""
    DOT source of the Hasse diagram of a poset.

    Covers only, drawn bottom to top; elements of equal height share a rank.

    Parameters
    ----------
    p : Poset

    Returns
    -------
    str

    """
    heights = hasse_heights(p)
    levels = defaultdict(list)
    for x in range(1, p.size + 1):
        levels[heights[x]].append(x)
    g = graphviz.Digraph('hasse', graph_attr={'rankdir': 'BT'},
                         edge_attr={'arrowhead': 'none'})
    for h in sorted(levels):
        with g.subgraph() as level:
            level.attr(rank='same')
            for x in levels[h]:
                level.node(str(x))
    for a, b in poset_stats(p).covering_relations:
        g.edge(str(a), str(b))
    return g.source


def _tikz(lines):
    return '\n'.join(['\\begin{tikzpicture}'] + ['  ' + s for s in lines] +
                     ['\\end{tikzpicture}']) + '\n'


def meander_tikz(spec, weighted=False):
    """TikZ picture: vertices on a line, top arcs above, bottom arcs below."""
    lines = []
    for v in range(1, spec.N + 1):
        lines.append('\\node[circle, draw, inner sep=1.5pt, label=below:{' +
                     str(v) + '}] (v' + str(v) + ') at (' + str(v) +
                     ', 0) {};')
    for e, w in _arc_labels(spec, weighted):
        bend = 'above' if e.side is Side.TOP else 'below'
        angle = '90' if e.side is Side.TOP else '-90'
        label = '' if w is None else \
            ' node[midway, ' + bend + '] {$' + str(w) + '$}'
        lines.append('\\draw (v' + str(e.i) + ') to[out=' + angle + ', in=' +
                     angle + ', looseness=1.4]' + label + ' (v' + str(e.j) +
                     ');')
    return _tikz(lines)


def blocks_tikz(spec):
    """TikZ picture of the block diagram, arrows drawn between neighbours."""
    bd = build_block_diagram(spec)
    lines = []
    for k, (lo, hi) in enumerate(bd.blocks):
        text = ','.join(str(v) for v in range(lo, hi + 1))
        lines.append('\\node[ellipse, draw] (C' + str(k + 1) + ') at (' +
                     str(2 * k) + ', 0) {$' + text + '$};')
    for k, arrow in enumerate(bd.arrows):
        if arrow is Arrow.FORWARD:
            lines.append('\\draw[->] (C' + str(k + 1) + ') -- (C' +
                         str(k + 2) + ');')
        elif arrow is Arrow.BACKWARD:
            lines.append('\\draw[->] (C' + str(k + 2) + ') -- (C' +
                         str(k + 1) + ');')
    return _tikz(lines)


def hasse_tikz(p):
    """TikZ picture of the Hasse diagram, one row per height."""
    heights = hasse_heights(p)
    column = defaultdict(int)
    lines = []
    for x in range(1, p.size + 1):
        h = heights[x]
        lines.append('\\node (p' + str(x) + ') at (' + str(column[h]) + ', ' +
                     str(h) + ') {$' + str(x) + '$};')
        column[h] += 1
    for a, b in poset_stats(p).covering_relations:
        lines.append('\\draw (p' + str(a) + ') -- (p' + str(b) + ');')
    return _tikz(lines)


def render(spec, kind, fmt='dot'):
    r"""
    Diagram source for a spec.

    Parameters
    ----------
    spec : SeaweedSpec
    kind : str
        One of ``'meander'``, ``'weighted'``, ``'blocks'`` or ``'hasse'``;
        the Hasse diagram is that of the block poset.
    fmt : str, optional
        ``'dot'`` or ``'tikz'``. Default is ``'dot'``.

    Returns
    -------
    str

    """
    if kind not in KINDS:
        invalid_value(kind, 'kind')
    if fmt not in FORMATS:
        invalid_value(fmt, 'fmt')
    dot = fmt == 'dot'
    if kind in ('meander', 'weighted'):
        weighted = kind == 'weighted'
        if dot:
            return meander_dot(spec, weighted)
        return meander_tikz(spec, weighted)
    if kind == 'blocks':
        return blocks_dot(spec) if dot else blocks_tikz(spec)
    p = poset_from_diagram(build_block_diagram(spec))
    return hasse_dot(p) if dot else hasse_tikz(p)
