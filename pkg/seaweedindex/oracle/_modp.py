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
Exact linear algebra over the integers modulo a prime below 2**31.

Entries are kept reduced in ``[0, prime)`` as int64, so a product of two
entries stays below 2**62 and every update is reduced before the next one.

"""

from dataclasses import dataclass

import numpy as np


def reduce_mod(a, prime):
    """Integer array reduced into ``[0, prime)``."""
    return np.mod(np.asarray(a, dtype=np.int64), prime)


@dataclass(frozen=True)
class Echelon:
    """Reduced row echelon form: pivot columns of ``rows`` are unit vectors."""

    rows: np.ndarray
    pivots: tuple
    prime: int

    @property
    def rank(self):
        return len(self.pivots)

    def residual(self, vectors):
        r"""
        Remainder of each row of ``vectors`` after reduction by the echelon.

        A row lies in the span iff its residual is zero.

        """
        v = reduce_mod(np.atleast_2d(vectors), self.prime)
        for row, col in zip(self.rows, self.pivots):
            factor = v[:, col:col + 1]
            v = np.mod(v - np.mod(factor * row, self.prime), self.prime)
        return v

    def contains(self, vectors):
        return not np.any(self.residual(vectors))

    def coordinates(self, vectors):
        """Coordinates of rows lying in the span, one column per pivot row."""
        v = reduce_mod(np.atleast_2d(vectors), self.prime)
        return v[:, list(self.pivots)]


def echelon(a, prime):
    r"""
    Gauss-Jordan elimination modulo a prime.

    Parameters
    ----------
    a : array_like of int, shape (m, n)
    prime : int
        Prime modulus below 2**31.

    Returns
    -------
    Echelon
        The nonzero rows of the reduced row echelon form of ``a``.

    """
    work = reduce_mod(a, prime)
    m, n = work.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        nonzero = np.flatnonzero(work[r:, c])
        if nonzero.size == 0:
            continue
        pivot = r + nonzero[0]
        if pivot != r:
            work[[r, pivot], :] = work[[pivot, r], :]
        inv = pow(int(work[r, c]), -1, prime)
        work[r, :] = np.mod(work[r, :] * inv, prime)
        factor = work[:, c:c + 1].copy()
        factor[r] = 0
        work = np.mod(work - np.mod(factor * work[r, :], prime), prime)
        pivots.append(c)
        r += 1
    return Echelon(work[:r].copy(), tuple(pivots), prime)


def rank(a, prime):
    """Rank of an integer matrix modulo a prime."""
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return echelon(a, prime).rank


def combine(coeffs, tensor, prime):
    r"""
    Contract the last axis of ``tensor`` against ``coeffs`` modulo a prime.

    One term at a time, so no intermediate sum leaves int64.

    """
    coeffs = reduce_mod(coeffs, prime)
    tensor = reduce_mod(tensor, prime)
    out = np.zeros(tensor.shape[:-1], dtype=np.int64)
    for k, f in enumerate(coeffs):
        out = np.mod(out + np.mod(tensor[..., k] * int(f), prime), prime)
    return out
