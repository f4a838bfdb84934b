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

import numpy as np


class ParseError(ValueError):
    """Malformed seaweed notation or an invalid composition."""


class SumMismatch(ParseError):
    """Top and bottom compositions do not sum to the same N."""

    def __init__(self, top_sum, bottom_sum):
        self.top_sum = int(top_sum)
        self.bottom_sum = int(bottom_sum)
        super().__init__('top sums to ' + str(self.top_sum) +
                         ' but bottom sums to ' + str(self.bottom_sum))


class GlueError(ValueError):
    """Adjacent in/out segments disagree on the size of the glued layer."""


class SizeLimit(ValueError):
    """Input is larger than a configured cap."""


class BracketNotClosed(ArithmeticError):
    """A bracket of two basis elements leaves their span."""


class NotASubspace(ArithmeticError):
    """A basis is not contained in the span of another."""


class InvariantViolation(AssertionError):
    """A structural invariant failed; either a bug or a counterexample."""


def invalid_value(value, variable):
    err = str(value) + ' was not a valid value for ' + variable
    raise ValueError(err)


def positive_parts(parts):
    r"""
    Validate composition parts and return them as a tuple of ints.

    Parameters
    ----------
    parts : iterable of int
        Candidate parts of a composition.

    Returns
    -------
    tuple of int
        The parts, left to right.

    Raises
    ------
    ParseError
        If there are no parts, a part is not integral, a part does not fit
        in int64, or a part is <= 0.

    """
    parts = np.asarray(list(parts))
    if parts.size == 0:
        raise ParseError('a composition needs at least one part')
    # integers beyond int64 come back as uint64 or object arrays
    if parts.dtype.kind in 'Ou' and parts.ndim == 1 and \
            all(isinstance(x, (int, np.integer)) for x in parts):
        big = [int(x) for x in parts if abs(int(x)) > np.iinfo(np.int64).max]
        if big:
            raise ParseError('composition part too large: ' + str(big[0]))
    if parts.ndim != 1 or not np.issubdtype(parts.dtype, np.integer):
        raise ParseError('composition parts must be integers: ' +
                         str(parts.tolist()))
    if np.any(parts <= 0):
        raise ParseError('composition parts must be positive: ' +
                         str(parts.tolist()))
    return tuple(int(x) for x in parts)


def assert_strict_order(n, strict):
    r"""
    Check that a set of pairs on 1..n is a strict partial order.

    Parameters
    ----------
    n : int
        Number of elements.
    strict : frozenset of (int, int)
        Pairs (p, q) meaning p strictly below q.

    Raises
    ------
    InvariantViolation
        If the relation is not irreflexive, antisymmetric and transitively
        closed, or mentions an element outside 1..n.

    """
    below = np.zeros((n + 1, n + 1), dtype=bool)
    for p, q in strict:
        if not (1 <= p <= n and 1 <= q <= n):
            raise InvariantViolation('pair ' + str((p, q)) +
                                     ' outside 1..' + str(n))
        below[p, q] = True
    if np.any(np.diag(below)):
        raise InvariantViolation('relation is not irreflexive')
    if np.any(below & below.T):
        raise InvariantViolation('relation is not antisymmetric')
    # boolean matrix product finds every two-step path
    two_step = (below.astype(np.int64) @ below.astype(np.int64)) > 0
    if np.any(two_step & ~below):
        raise InvariantViolation('relation is not transitively closed')
