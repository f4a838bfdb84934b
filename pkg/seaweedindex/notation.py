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
Compositions, block partitions, seaweed specs and the fraction notation.

A seaweed spec is written like the fraction it stands for::

    p 2|4 / 1|2|3      seaweed subalgebra of gl(6)
    pA 2|4 / 1|2|3     its traceless (type-A) counterpart in sl(6)
    2|4/1|2|3          same as the first line

Vertices and matrix indices are 1-indexed everywhere.

"""

import enum
import itertools
import re
from dataclasses import dataclass, field

import numpy as np

from .checks import ParseError, SumMismatch, positive_parts


class Flavor(enum.Enum):
    GL = 'p'
    SL = 'pA'


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of positive parts; ``sum`` is cached."""

    parts: tuple
    sum: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = positive_parts(self.parts)
        object.__setattr__(self, 'parts', parts)
        object.__setattr__(self, 'sum', int(np.sum(parts)))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return '|'.join(str(a) for a in self.parts)


@dataclass(frozen=True)
class BlockPartition:
    """Contiguous 1-indexed intervals ``(lo, hi)`` tiling 1..N."""

    intervals: tuple

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __getitem__(self, i):
        return self.intervals[i]

    def vertices(self, i):
        lo, hi = self.intervals[i]
        return tuple(range(lo, hi + 1))

    def labels(self):
        """Array whose entry v (v >= 1) is the block index of vertex v."""
        n = self.intervals[-1][1]
        lab = np.zeros(n + 1, dtype=np.int64)
        for i, (lo, hi) in enumerate(self.intervals):
            lab[lo:hi + 1] = i
        return lab


@dataclass(frozen=True)
class SeaweedSpec:
    """A pair of compositions of the same N and a flavor tag."""

    top: Composition
    bottom: Composition
    flavor: Flavor = Flavor.GL

    def __post_init__(self):
        if not isinstance(self.top, Composition):
            object.__setattr__(self, 'top', Composition(self.top))
        if not isinstance(self.bottom, Composition):
            object.__setattr__(self, 'bottom', Composition(self.bottom))
        if not isinstance(self.flavor, Flavor):
            object.__setattr__(self, 'flavor', Flavor(self.flavor))
        if self.top.sum != self.bottom.sum:
            raise SumMismatch(self.top.sum, self.bottom.sum)

    @property
    def N(self):
        return self.top.sum

    @property
    def is_sl(self):
        return self.flavor is Flavor.SL

    def with_flavor(self, flavor):
        return SeaweedSpec(self.top, self.bottom, Flavor(flavor))

    def __str__(self):
        return format_spec(self)


_TOKEN = re.compile(r'\s*(?:(?P<flavor>pA|p)|(?P<int>\d+)|(?P<bar>\|)|'
                    r'(?P<slash>/))')


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            raise ParseError('unexpected input at position ' + str(pos) +
                             ': ' + repr(text[pos:pos + 10]))
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
        pos = match.end()
    return tokens


class _Parser(object):

    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        if self.i < len(self.tokens):
            return self.tokens[self.i][0]
        return None

    def expect(self, kind):
        if self.peek() != kind:
            found = 'end of input' if self.peek() is None else \
                repr(self.tokens[self.i][1])
            raise ParseError('expected ' + kind + ' but found ' + found +
                             ' in ' + repr(self.text))
        value = self.tokens[self.i][1]
        self.i += 1
        return value

    def spec(self):
        flavor = Flavor.GL
        if self.peek() == 'flavor':
            flavor = Flavor(self.expect('flavor'))
        top = self.parts()
        self.expect('slash')
        bottom = self.parts()
        if self.peek() is not None:
            raise ParseError('trailing input ' +
                             repr(self.tokens[self.i][1]) + ' in ' +
                             repr(self.text))
        return top, bottom, flavor

    def parts(self):
        parts = [int(self.expect('int'))]
        while self.peek() == 'bar':
            self.expect('bar')
            parts.append(int(self.expect('int')))
        return parts


def parse_spec(text):
    r"""
    Parse seaweed fraction notation.

    The grammar is ``spec := flavor? parts '/' parts`` with
    ``flavor := 'p' | 'pA'`` and ``parts := INT ('|' INT)*``; whitespace
    between tokens is ignored.

    Parameters
    ----------
    text : str
        Notation such as ``'p 2|4 / 1|2|3'`` or ``'pA 7/7'``.

    Returns
    -------
    SeaweedSpec
        Flavor GL for ``p`` or no prefix, SL for ``pA``.

    Raises
    ------
    ParseError
        Malformed token or a part <= 0.
    SumMismatch
        The top and bottom parts have different sums.

    Examples
    --------
    >>> from seaweedindex.notation import parse_spec
    >>> s = parse_spec('p 2|4 / 1|2|3')
    >>> s.top.parts, s.bottom.parts, s.N
    ((2, 4), (1, 2, 3), 6)

    """
    top, bottom, flavor = _Parser(text).spec()
    top = Composition(top)
    bottom = Composition(bottom)
    if top.sum != bottom.sum:
        raise SumMismatch(top.sum, bottom.sum)
    return SeaweedSpec(top, bottom, flavor)


def format_spec(spec):
    """Canonical printer; ``parse_spec`` inverts it."""
    return spec.flavor.value + ' ' + str(spec.top) + ' / ' + str(spec.bottom)


def partial_sums(c):
    r"""
    Set of partial sums of a composition.

    Parameters
    ----------
    c : Composition

    Returns
    -------
    frozenset of int
        ``{c_1, c_1 + c_2, ..., c.sum}``.

    """
    return frozenset(int(x) for x in np.cumsum(c.parts))


def blocks(c):
    r"""
    Ordered set partition of 1..N cut by a composition.

    Parameters
    ----------
    c : Composition

    Returns
    -------
    BlockPartition
        The i-th interval has length ``c.parts[i]``.

    """
    his = np.cumsum(c.parts)
    los = his - np.asarray(c.parts) + 1
    return BlockPartition(tuple((int(lo), int(hi)) for lo, hi in
                                zip(los, his)))


def dim_seaweed(spec):
    r"""
    Dimension of the seaweed algebra.

    N diagonal entries, a(a-1)/2 strictly lower entries per top block and
    b(b-1)/2 strictly upper entries per bottom block; one less for SL.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    int

    """
    a = np.asarray(spec.top.parts)
    b = np.asarray(spec.bottom.parts)
    dim = spec.N + int(np.sum(a * (a - 1) // 2)) + \
        int(np.sum(b * (b - 1) // 2))
    if spec.is_sl:
        dim -= 1
    return dim


def seaweed_pattern(spec):
    r"""
    Positions of the seaweed algebra as a boolean matrix.

    Entry ``[p - 1, q - 1]`` is True when ``E_{p,q}`` lies in the seaweed:
    p == q, or p > q inside one top block, or p < q inside one bottom block.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    ndarray of bool, shape (N, N)

    """
    n = spec.N
    top = blocks(spec.top).labels()[1:]
    bottom = blocks(spec.bottom).labels()[1:]
    rows, cols = np.indices((n, n))
    lower = (rows > cols) & (top[rows] == top[cols])
    upper = (rows < cols) & (bottom[rows] == bottom[cols])
    return lower | upper | (rows == cols)


def is_parabolic(spec):
    """True for ``p a_1|...|a_m / N``."""
    return len(spec.bottom) == 1


def compositions(n):
    r"""
    All compositions of n in lexicographic order.

    Parameters
    ----------
    n : int
        Positive integer.

    Yields
    ------
    Composition
        2**(n - 1) compositions, ``(1, 1, ..., 1)`` first, ``(n,)`` last.

    """
    if n < 1:
        raise ValueError(str(n) + ' was not a valid value for n')
    # a composition is the set of cut points in 1..n-1
    for cuts in itertools.product((True, False), repeat=n - 1):
        parts = []
        size = 1
        for cut in cuts:
            if cut:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        yield Composition(tuple(parts))


def seaweed_specs(n, flavor=Flavor.GL):
    """Every spec of size n, top-major lexicographic order."""
    comps = list(compositions(n))
    for top in comps:
        for bottom in comps:
            yield SeaweedSpec(top, bottom, flavor)
