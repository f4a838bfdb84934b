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
Matrix Lie algebras given by explicit bases, computed exactly.

Every quantity is found by elimination over the integers modulo a large
prime. The index and the breadth maximise a rank over random choices, so a
single trial can only err on one side: the index is never underestimated and
the breadth is never overestimated.

"""

import enum
import zlib
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from sympy import isprime, prevprime

from ..checks import (BracketNotClosed, InvariantViolation, NotASubspace,
                      invalid_value)
from ..meander import central_components
from ..notation import seaweed_pattern
from . import _modp

DEFAULT_PRIME = 2147483647
DEFAULT_TRIALS = 3
ESCALATION_TRIALS = 16


class Kind(enum.Enum):
    ELEMENTARY = 'elementary'
    DIAGONAL = 'diagonal'


@dataclass(frozen=True)
class BasisElement:
    """
    An elementary matrix ``E_{i,j}`` or a diagonal matrix.

    Use :meth:`elementary` and :meth:`diagonal` to build one.

    """

    kind: Kind
    i: int = 0
    j: int = 0
    coeffs: tuple = ()

    def __post_init__(self):
        if self.kind is Kind.ELEMENTARY:
            if self.i < 1 or self.j < 1:
                raise ValueError('elementary indices start at 1, got ' +
                                 str((self.i, self.j)))
        elif not any(self.coeffs):
            raise ValueError('a diagonal basis element must be nonzero')

    @classmethod
    def elementary(cls, i, j):
        return cls(Kind.ELEMENTARY, int(i), int(j))

    @classmethod
    def diagonal(cls, coeffs):
        return cls(Kind.DIAGONAL, coeffs=tuple(int(c) for c in coeffs))

    @property
    def min_size(self):
        """Smallest matrix size this element fits in."""
        if self.kind is Kind.ELEMENTARY:
            return max(self.i, self.j)
        return len(self.coeffs)

    def to_matrix(self, n):
        """Dense int64 matrix of size n."""
        if self.min_size > n:
            raise ValueError('element does not fit in size ' + str(n))
        mat = np.zeros((n, n), dtype=np.int64)
        if self.kind is Kind.ELEMENTARY:
            mat[self.i - 1, self.j - 1] = 1
        else:
            k = len(self.coeffs)
            mat[np.arange(k), np.arange(k)] = self.coeffs
        return mat

    def __str__(self):
        if self.kind is Kind.ELEMENTARY:
            return 'E' + str(self.i) + ',' + str(self.j)
        return 'diag' + str(self.coeffs)


@dataclass(frozen=True, eq=False)
class AlgebraBasis:
    r"""
    Linearly independent N x N matrices spanning a Lie algebra.

    The matrices are stacked once on construction and the reduced echelon
    form for :data:`DEFAULT_PRIME` is computed eagerly; echelon forms for
    other primes are cached on first use.

    Raises
    ------
    InvariantViolation
        If the elements are linearly dependent.

    """

    n: int
    elements: tuple
    matrices: np.ndarray = field(init=False, repr=False)
    _echelons: dict = field(init=False, repr=False)
    _structures: dict = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'elements', tuple(self.elements))
        stack = np.zeros((len(self.elements), self.n, self.n),
                         dtype=np.int64)
        for k, x in enumerate(self.elements):
            stack[k] = x.to_matrix(self.n)
        stack.setflags(write=False)
        object.__setattr__(self, 'matrices', stack)
        object.__setattr__(self, '_echelons', {})
        object.__setattr__(self, '_structures', {})
        if self.echelon(DEFAULT_PRIME).rank != len(self.elements):
            raise InvariantViolation('basis elements are linearly dependent')

    def __len__(self):
        return len(self.elements)

    def vectors(self):
        """Row k is basis matrix k flattened row-major."""
        return self.matrices.reshape(len(self.elements), self.n * self.n)

    def echelon(self, prime):
        if prime not in self._echelons:
            self._echelons[prime] = _modp.echelon(self.vectors(), prime)
        return self._echelons[prime]

    def fingerprint(self):
        return zlib.crc32(self.matrices.tobytes())


@dataclass(frozen=True)
class FieldConfig:
    r"""
    Prime field and random trials used by the oracle.

    Parameters
    ----------
    prime : int, optional
        Prime modulus below 2**31. Default is 2147483647.
    trials : int, optional
        Random functionals or elements tried per randomized computation.
        Default is 3.
    seed : int, optional
        Nonnegative 64-bit seed. Default is 0.

    """

    prime: int = DEFAULT_PRIME
    trials: int = DEFAULT_TRIALS
    seed: int = 0

    def __post_init__(self):
        if self.prime >= 2 ** 31 or not isprime(self.prime):
            invalid_value(self.prime, 'prime')
        if self.trials < 1:
            invalid_value(self.trials, 'trials')
        if not 0 <= self.seed < 2 ** 64:
            invalid_value(self.seed, 'seed')

    def escalated(self):
        """At least as many trials, over the next smaller prime."""
        return FieldConfig(int(prevprime(self.prime)),
                           max(self.trials, ESCALATION_TRIALS), self.seed)

    def check_size(self, n):
        if self.prime <= 2 * n * n:
            raise ValueError(str(self.prime) + ' was not a valid value for '
                             'prime with N = ' + str(n) + ' (need > 2N^2)')

    def generator(self, basis, trial):
        """Counter-based generator keyed by seed, basis and trial."""
        key = np.random.SeedSequence([self.seed, basis.fingerprint(), trial])
        return np.random.Generator(np.random.Philox(key))


def _elementary_positions(mask):
    rows, cols = np.nonzero(mask)
    return [BasisElement.elementary(p + 1, q + 1) for p, q in zip(rows, cols)]


def seaweed_basis(spec):
    r"""
    Spanning set of the seaweed algebra.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    AlgebraBasis
        The diagonal part first (``E_{j,j}`` for GL, ``E_{1,1} - E_{j,j}``
        for j >= 2 in SL), then the off-diagonal ``E_{p,q}`` of the pattern
        in row-major order. Its size is ``dim_seaweed(spec)``.

    Examples
    --------
    >>> from seaweedindex.notation import parse_spec
    >>> len(seaweed_basis(parse_spec('p 2|4 / 1|2|3')))
    17

    """
    n = spec.N
    if spec.is_sl:
        diag = []
        for j in range(2, n + 1):
            coeffs = np.zeros(n, dtype=np.int64)
            coeffs[0] = 1
            coeffs[j - 1] = -1
            diag.append(BasisElement.diagonal(coeffs))
    else:
        diag = [BasisElement.elementary(j, j) for j in range(1, n + 1)]
    off = seaweed_pattern(spec) & ~np.eye(n, dtype=bool)
    return AlgebraBasis(n, diag + _elementary_positions(off))


def center_basis(spec):
    r"""
    Basis of the center of the seaweed algebra.

    Diagonal matrices constant on each central component. For SL only the
    traceless combinations ``|C_{k+1}| 1_{C_k} - |C_k| 1_{C_{k+1}}`` of
    neighbouring component indicators are kept.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    AlgebraBasis
        ``|Cen|`` elements for GL, ``|Cen| - 1`` for SL.

    """
    n = spec.N
    indicators = []
    for lo, hi in central_components(spec):
        ind = np.zeros(n, dtype=np.int64)
        ind[lo - 1:hi] = 1
        indicators.append(ind)
    if not spec.is_sl:
        return AlgebraBasis(n, [BasisElement.diagonal(c) for c in indicators])
    elements = []
    for left, right in zip(indicators[:-1], indicators[1:]):
        elements.append(BasisElement.diagonal(
            right.sum() * left - left.sum() * right))
    return AlgebraBasis(n, elements)


def nilradical_basis(spec):
    r"""
    Basis of the nilradical of the seaweed algebra.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    AlgebraBasis
        The center (see :func:`center_basis`) followed by every ``E_{p,q}``
        of the seaweed whose transpose is absent.

    """
    pattern = seaweed_pattern(spec)
    center = center_basis(spec)
    return AlgebraBasis(spec.N, center.elements +
                        tuple(_elementary_positions(pattern & ~pattern.T)))


def poset_algebra_basis(p):
    """Basis ``{E_{a,b} : a < b}`` of the nilpotent Lie algebra of a poset."""
    return AlgebraBasis(p.size, [BasisElement.elementary(a, b)
                                 for a, b in sorted(p.strict)])


def bracket(x, y, n=None):
    r"""
    Commutator ``xy - yx`` of two basis elements.

    Parameters
    ----------
    x, y : BasisElement
    n : int, optional
        Matrix size. Default is the smallest size both elements fit in.

    Returns
    -------
    scipy.sparse.csr_matrix
        Integer matrix of shape (n, n).

    Examples
    --------
    >>> e12 = BasisElement.elementary(1, 2)
    >>> e23 = BasisElement.elementary(2, 3)
    >>> int(bracket(e12, e23).toarray()[0, 2])
    1

    """
    if n is None:
        n = max(x.min_size, y.min_size)
    a = x.to_matrix(n)
    b = y.to_matrix(n)
    return csr_matrix(a @ b - b @ a)


def _structure(b, prime):
    r"""
    Span coordinates of every bracket ``[b_i, b_j]``.

    Returns an int64 array of shape (k, k, k) holding the coordinates of
    ``[b_i, b_j]`` against the echelon rows of ``b``.

    Raises BracketNotClosed when a bracket leaves the span.
    """
    if prime in b._structures:
        return b._structures[prime]
    k = len(b)
    x = b.matrices
    products = np.einsum('aij,bjk->abik', x, x)
    brackets = (products - products.transpose(1, 0, 2, 3)).reshape(
        k * k, b.n * b.n)
    ech = b.echelon(prime)
    residual = ech.residual(brackets)
    bad = np.flatnonzero(np.any(residual, axis=1))
    if bad.size:
        i, j = divmod(int(bad[0]), k)
        raise BracketNotClosed('[' + str(b.elements[i]) + ', ' +
                               str(b.elements[j]) + '] leaves the span')
    coords = ech.coordinates(brackets).reshape(k, k, ech.rank)
    b._structures[prime] = coords
    return coords


def index_randomized(b, cfg=None):
    r"""
    Index of a Lie algebra from random linear functionals.

    For each trial a functional F is drawn on span coordinates and the rank
    of the antisymmetric matrix ``F([b_i, b_j])`` is found exactly. Each
    trial gives ``len(b) - rank``, an upper bound on the index.

    Parameters
    ----------
    b : AlgebraBasis
    cfg : FieldConfig, optional
        Default is ``FieldConfig()``.

    Returns
    -------
    int
        ``len(b)`` minus the largest rank seen.

    Raises
    ------
    BracketNotClosed
        If ``b`` is not closed under the bracket.

    Examples
    --------
    >>> from seaweedindex.notation import parse_spec
    >>> index_randomized(seaweed_basis(parse_spec('p 3 / 3')))
    3

    """
    cfg = FieldConfig() if cfg is None else cfg
    cfg.check_size(b.n)
    k = len(b)
    if k == 0:
        return 0
    coords = _structure(b, cfg.prime)
    best = 0
    for trial in range(cfg.trials):
        f = cfg.generator(b, trial).integers(0, cfg.prime, size=k,
                                             dtype=np.int64)
        form = _modp.combine(f, coords, cfg.prime)
        if np.any(np.mod(form + form.T, cfg.prime)):
            raise InvariantViolation('functional matrix is not antisymmetric')
        best = max(best, _modp.rank(form, cfg.prime))
    return k - best


def lower_central_series(b, cfg=None):
    r"""
    Dimensions of the lower central series.

    ``g_0`` is the span of ``b`` and ``g_m`` is spanned by the brackets of
    ``b`` with a basis of ``g_{m-1}``.

    Parameters
    ----------
    b : AlgebraBasis
    cfg : FieldConfig, optional
        Only the prime is used.

    Returns
    -------
    list of int
        ``dim g_0, dim g_1, ...`` stopping at the first zero or the first
        repeated value.

    Raises
    ------
    BracketNotClosed
        If ``b`` is not closed under the bracket.

    """
    cfg = FieldConfig() if cfg is None else cfg
    cfg.check_size(b.n)
    _structure(b, cfg.prime)
    dims = [len(b)]
    current = b.echelon(cfg.prime).rows
    x = b.matrices
    while dims[-1] > 0:
        y = current.reshape(-1, b.n, b.n)
        xy = np.einsum('aij,bjk->abik', x, y)
        yx = np.einsum('bij,ajk->abik', y, x)
        brackets = (xy - yx).reshape(-1, b.n * b.n)
        ech = _modp.echelon(brackets, cfg.prime)
        dims.append(ech.rank)
        if ech.rank == dims[-2]:
            break
        current = ech.rows
    return dims


def is_nilpotent(b, cfg=None):
    """True iff the lower central series reaches zero."""
    return lower_central_series(b, cfg)[-1] == 0


def is_ideal(sub, ambient, cfg=None):
    r"""
    Decide whether ``sub`` spans an ideal of ``ambient``.

    Parameters
    ----------
    sub, ambient : AlgebraBasis
    cfg : FieldConfig, optional
        Only the prime is used.

    Returns
    -------
    bool
        True iff every ``[a, s]`` with a in ``ambient`` and s in ``sub``
        lies in the span of ``sub``.

    Raises
    ------
    NotASubspace
        If the span of ``sub`` is not contained in the span of ``ambient``.

    """
    cfg = FieldConfig() if cfg is None else cfg
    if sub.n != ambient.n:
        invalid_value(sub.n, 'sub.n')
    cfg.check_size(ambient.n)
    if len(sub) == 0:
        return True
    if not ambient.echelon(cfg.prime).contains(sub.vectors()):
        raise NotASubspace('sub is not contained in ambient')
    a = ambient.matrices
    s = sub.matrices
    brackets = (np.einsum('aij,bjk->abik', a, s) -
                np.einsum('bij,ajk->abik', s, a)).reshape(-1, sub.n * sub.n)
    return sub.echelon(cfg.prime).contains(brackets)


def center_dim_oracle(b, cfg=None):
    r"""
    Dimension of the center, from the linear system ``[x, b_k] = 0``.

    Parameters
    ----------
    b : AlgebraBasis
    cfg : FieldConfig, optional
        Only the prime is used.

    Returns
    -------
    int

    Raises
    ------
    BracketNotClosed
        If ``b`` is not closed under the bracket.

    """
    cfg = FieldConfig() if cfg is None else cfg
    cfg.check_size(b.n)
    k = len(b)
    if k == 0:
        return 0
    coords = _structure(b, cfg.prime)
    # column i holds the coordinates of [b_i, b_j] for every j
    system = coords.transpose(1, 2, 0).reshape(-1, k)
    return k - _modp.rank(system, cfg.prime)


def breadth_randomized(b, cfg=None):
    r"""
    Breadth of a Lie algebra, the largest rank of ``ad x``.

    Parameters
    ----------
    b : AlgebraBasis
    cfg : FieldConfig, optional
        Default is ``FieldConfig()``.

    Returns
    -------
    int
        The largest rank of ``ad x`` over ``cfg.trials`` random x; each trial
        is a lower bound on the breadth.

    Raises
    ------
    BracketNotClosed
        If ``b`` is not closed under the bracket.

    """
    cfg = FieldConfig() if cfg is None else cfg
    cfg.check_size(b.n)
    k = len(b)
    if k == 0:
        return 0
    adjoint = _structure(b, cfg.prime).transpose(1, 2, 0)
    best = 0
    for trial in range(cfg.trials):
        c = cfg.generator(b, trial).integers(0, cfg.prime, size=k,
                                             dtype=np.int64)
        best = max(best, _modp.rank(_modp.combine(c, adjoint, cfg.prime),
                                    cfg.prime))
    return best
