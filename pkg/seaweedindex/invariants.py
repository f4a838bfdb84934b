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
Index, center, bounds and breadth of a seaweed and its nilradical.

The combinatorial values come from the meander, the weighted meander and the
block poset; :func:`full_report` gathers them and, on request, the values the
matrix oracle finds for the same spec.

"""

import dataclasses
import json
import warnings
from dataclasses import dataclass
from typing import NamedTuple

from .checks import InvariantViolation
from .meander import (build_meander, build_weighted, central_components,
                      count_central_by_gaps, index_seaweed, simple_edges,
                      total_weight)
from .notation import dim_seaweed, format_spec
from .oracle import (FieldConfig, breadth_randomized, center_dim_oracle,
                     index_randomized, is_ideal, is_nilpotent,
                     nilradical_basis, poset_algebra_basis, seaweed_basis)
from .poset import (ISOMORPHISM_CAP, Poset, build_block_diagram,
                    chain_block_poset, connected_components,
                    decompose_in_out, glue_in_out,
                    index_chain_block_recursive, index_nilpotent_poset,
                    nilradical_poset, poset_from_diagram, poset_isomorphic,
                    tightness_shape)


@dataclass(frozen=True)
class OracleSection:
    """Values the matrix oracle finds for one spec."""

    index_seaweed_oracle: int
    index_nilradical_oracle: int
    center_oracle: int
    nilpotency_ok: bool
    ideal_ok: bool
    breadth_oracle: int


@dataclass(frozen=True)
class InvariantReport:
    """
    Every invariant of one spec.

    ``closed_form`` is a ``(tag, value)`` pair or None; ``oracle`` is an
    :class:`OracleSection` or None.

    """

    spec: str
    N: int
    dim: int
    index_seaweed: int
    center_dim: int
    n_central: int
    total_weight: int
    index_nilradical: int
    lower_bound: int
    e1_count: int
    breadth_seaweed: int
    closed_form: tuple = None
    oracle: OracleSection = None

    def to_dict(self):
        """Plain dict in field order; absent optional sections are left out."""
        out = {
            'spec': self.spec,
            'N': self.N,
            'dim': self.dim,
            'index_seaweed': self.index_seaweed,
            'center_dim': self.center_dim,
            'n_central': self.n_central,
            'total_weight': self.total_weight,
            'index_nilradical': self.index_nilradical,
            'lower_bound': self.lower_bound,
            'e1_count': self.e1_count,
            'breadth_seaweed': self.breadth_seaweed,
        }
        if self.closed_form is not None:
            tag, value = self.closed_form
            out['closed_form'] = {'tag': tag, 'value': value}
        if self.oracle is not None:
            o = self.oracle
            out['oracle'] = {
                'index_seaweed_oracle': o.index_seaweed_oracle,
                'index_nilradical_oracle': o.index_nilradical_oracle,
                'center_oracle': o.center_oracle,
                'nilpotency_ok': o.nilpotency_ok,
                'ideal_ok': o.ideal_ok,
                'breadth_oracle': o.breadth_oracle,
            }
        return out

    def to_json(self):
        return json.dumps(self.to_dict())


class CheckOutcome(NamedTuple):
    name: str
    passed: bool
    expected: object
    observed: object


def index_center(spec):
    """Dimension of the center: ``|Cen|``, one less for SL."""
    return len(central_components(spec)) - (1 if spec.is_sl else 0)


def index_nilradical(spec):
    r"""
    Index of the nilradical of a seaweed.

    ``|Cen| + sum(wt)`` over the weighted meander, minus one for SL.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    int

    Examples
    --------
    >>> from seaweedindex.notation import parse_spec
    >>> index_nilradical(parse_spec('p 3|3|5|2 / 6|2|1|2|2'))
    16

    """
    return index_center(spec) + total_weight(build_weighted(spec))


def lower_bound_nilradical(spec):
    r"""
    Lower bound on the nilradical index from the simple arcs.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    int
        ``|E_1| + |Cen|``, minus one for SL, where ``E_1`` are the arcs of
        the meander without a parallel partner.

    """
    return len(simple_edges(build_meander(spec))) + index_center(spec)


def closed_form_special(spec):
    r"""
    Closed form of the nilradical index for a few small type-A shapes.

    Parameters
    ----------
    spec : SeaweedSpec

    Returns
    -------
    tuple of (str, int) or None
        ``('ab', a*b)`` for ``pA a|b / N``;
        ``('ac+b|a-c|', a*c + b*|a - c|)`` for ``pA a|b|c / N``;
        ``('|a-c|(N-|a-c|)', ...)`` for ``pA a|b / c|d``, which is 1 when
        ``a == c``. None for every other spec, GL specs included.

    Examples
    --------
    >>> from seaweedindex.notation import parse_spec
    >>> closed_form_special(parse_spec('pA 2|3|4 / 9'))
    ('ac+b|a-c|', 14)

    """
    if not spec.is_sl:
        return None
    top = spec.top.parts
    bottom = spec.bottom.parts
    if len(bottom) == 1 and len(top) == 2:
        a, b = top
        return 'ab', a * b
    if len(bottom) == 1 and len(top) == 3:
        a, b, c = top
        return 'ac+b|a-c|', a * c + b * abs(a - c)
    if len(bottom) == 2 and len(top) == 2:
        gap = abs(top[0] - bottom[0])
        if gap == 0:
            # two central components and no arrows: only the center remains
            return '|a-c|(N-|a-c|)', 1
        return '|a-c|(N-|a-c|)', gap * (spec.N - gap)
    return None


def breadth_seaweed(spec):
    """``dim - N`` for GL and ``dim - N + 1`` for SL."""
    return dim_seaweed(spec) - spec.N + (1 if spec.is_sl else 0)


def oracle_section(spec, cfg=None):
    r"""
    Oracle values for one spec.

    Parameters
    ----------
    spec : SeaweedSpec
    cfg : FieldConfig, optional
        Default is ``FieldConfig()``.

    Returns
    -------
    OracleSection

    """
    cfg = FieldConfig() if cfg is None else cfg
    seaweed = seaweed_basis(spec)
    nil = nilradical_basis(spec)
    return OracleSection(
        index_seaweed_oracle=index_randomized(seaweed, cfg),
        index_nilradical_oracle=index_randomized(nil, cfg),
        center_oracle=center_dim_oracle(seaweed, cfg),
        nilpotency_ok=is_nilpotent(nil, cfg),
        ideal_ok=is_ideal(nil, seaweed, cfg),
        breadth_oracle=breadth_randomized(seaweed, cfg))


def full_report(spec, with_oracle=False, cfg=None):
    r"""
    Gather every invariant of a spec.

    Parameters
    ----------
    spec : SeaweedSpec
    with_oracle : bool, optional
        Also run the matrix oracle. Cost grows quickly with N, keep it to
        N <= 14 or so. Default is False.
    cfg : FieldConfig, optional
        Oracle configuration. Default is ``FieldConfig()``.

    Returns
    -------
    InvariantReport

    Raises
    ------
    InvariantViolation
        If the nilradical index disagrees with ``|Cen| + sum(wt)`` or falls
        below the lower bound.

    Examples
    --------
    >>> from seaweedindex.notation import parse_spec
    >>> r = full_report(parse_spec('p 1|2 / 2|1'))
    >>> r.index_nilradical, r.index_seaweed
    (3, 1)

    """
    sl = 1 if spec.is_sl else 0
    m = build_meander(spec)
    n_central = len(central_components(spec))
    weight = total_weight(build_weighted(spec))
    e1_count = len(simple_edges(m))
    report = InvariantReport(
        spec=format_spec(spec),
        N=spec.N,
        dim=dim_seaweed(spec),
        index_seaweed=index_seaweed(spec),
        center_dim=n_central - sl,
        n_central=n_central,
        total_weight=weight,
        index_nilradical=index_nilradical(spec),
        lower_bound=e1_count + n_central - sl,
        e1_count=e1_count,
        breadth_seaweed=breadth_seaweed(spec),
        closed_form=closed_form_special(spec),
        oracle=oracle_section(spec, cfg) if with_oracle else None)
    if report.index_nilradical != n_central + weight - sl:
        raise InvariantViolation(report.spec + ': index_nilradical ' +
                                 str(report.index_nilradical) +
                                 ' != |Cen| + sum(wt) - ' + str(sl))
    if report.index_nilradical < report.lower_bound:
        raise InvariantViolation(report.spec + ': index_nilradical ' +
                                 str(report.index_nilradical) +
                                 ' below lower bound ' +
                                 str(report.lower_bound))
    return report


def oracle_mismatches(report):
    r"""
    Formula values the oracle section disagrees with.

    Parameters
    ----------
    report : InvariantReport

    Returns
    -------
    list of CheckOutcome
        Failed comparisons only; empty when the report has no oracle section.

    """
    o = report.oracle
    if o is None:
        return []
    pairs = [('index_seaweed', report.index_seaweed, o.index_seaweed_oracle),
             ('index_nilradical', report.index_nilradical,
              o.index_nilradical_oracle),
             ('center', report.center_dim, o.center_oracle),
             ('nilradical_nilpotent', True, o.nilpotency_ok),
             ('nilradical_ideal', True, o.ideal_ok),
             ('breadth', report.breadth_seaweed, o.breadth_oracle)]
    return [CheckOutcome(name, False, expected, observed)
            for name, expected, observed in pairs if expected != observed]


def combine_oracle_sections(first, second):
    r"""
    Merge an oracle section with its escalated rerun.

    Each randomized trial can only overestimate an index and underestimate
    the breadth, so the smaller indices and the larger breadth are kept. The
    exact values come from ``second``.

    Parameters
    ----------
    first, second : OracleSection

    Returns
    -------
    OracleSection

    """
    return dataclasses.replace(
        second,
        index_seaweed_oracle=min(first.index_seaweed_oracle,
                                 second.index_seaweed_oracle),
        index_nilradical_oracle=min(first.index_nilradical_oracle,
                                    second.index_nilradical_oracle),
        breadth_oracle=max(first.breadth_oracle, second.breadth_oracle))


def _restrict(p, lo, hi):
    strict = frozenset((a - lo + 1, b - lo + 1) for a, b in p.strict
                       if lo <= a <= hi)
    return Poset(hi - lo + 1, strict)


def _escalate(name, spec, expected, compute, cfg, pick):
    observed = compute(cfg)
    if observed != expected:
        warnings.warn(name + ' of ' + format_spec(spec) + ': oracle gave ' +
                      str(observed) + ', formula ' + str(expected) +
                      '; retrying with more trials over another prime',
                      RuntimeWarning)
        observed = pick(observed, compute(cfg.escalated()))
    return CheckOutcome(name, observed == expected, expected, observed)


def verify_spec(spec, cfg=None, with_oracle=True):
    r"""
    Cross-check every formula for one spec.

    Parameters
    ----------
    spec : SeaweedSpec
    cfg : FieldConfig, optional
        Oracle configuration. Default is ``FieldConfig()``.
    with_oracle : bool, optional
        Include the checks against the matrix oracle. Default is True.

    Returns
    -------
    list of CheckOutcome
        One entry per check that applies to the spec. A randomized oracle
        value that disagrees is recomputed with ``cfg.escalated()`` and the
        better of the two values is kept, after a RuntimeWarning.

    """
    cfg = FieldConfig() if cfg is None else cfg
    out = []
    bd = build_block_diagram(spec)
    p = poset_from_diagram(bd)
    poset_index = index_nilpotent_poset(p)
    nil_index = index_nilradical(spec)
    weight = total_weight(build_weighted(spec))
    out.append(CheckOutcome('weight_is_poset_index', weight == poset_index,
                            poset_index, weight))
    pattern_poset = nilradical_poset(spec)
    out.append(CheckOutcome('diagram_matches_pattern', pattern_poset == p,
                            len(p.strict), len(pattern_poset.strict)))
    bound = lower_bound_nilradical(spec)
    out.append(CheckOutcome('lower_bound', nil_index >= bound, bound,
                            nil_index))
    if tightness_shape(spec):
        out.append(CheckOutcome('tightness', nil_index == bound, bound,
                                nil_index))
    closed = closed_form_special(spec)
    if closed is not None:
        out.append(CheckOutcome('closed_form', closed[1] == nil_index,
                                closed[1], nil_index))
    cen = len(central_components(spec))
    gaps = count_central_by_gaps(build_meander(spec))
    out.append(CheckOutcome('central_gaps', gaps == cen, cen, gaps))
    recursive = index_chain_block_recursive(spec.top)
    direct = index_nilpotent_poset(chain_block_poset(spec.top))
    out.append(CheckOutcome('chain_recursion', recursive == direct, direct,
                            recursive))
    parts = sum(index_nilpotent_poset(q) for _, q in connected_components(p))
    out.append(CheckOutcome('component_additivity', parts == poset_index,
                            poset_index, parts))
    if spec.N <= ISOMORPHISM_CAP:
        decompositions = decompose_in_out(bd)
        matched = 0
        for d, (first, last) in zip(decompositions, bd.components()):
            piece = _restrict(p, bd.blocks[first][0], bd.blocks[last][1])
            matched += poset_isomorphic(glue_in_out(d), piece)
        out.append(CheckOutcome('in_out_round_trip',
                                matched == len(decompositions),
                                len(decompositions), matched))
    if not with_oracle:
        return out

    seaweed = seaweed_basis(spec)
    nil = nilradical_basis(spec)
    out.append(_escalate('index_seaweed', spec, index_seaweed(spec),
                         lambda c: index_randomized(seaweed, c), cfg, min))
    out.append(_escalate('index_nilradical', spec, nil_index,
                         lambda c: index_randomized(nil, c), cfg, min))
    out.append(_escalate('poset_index', spec, poset_index,
                         lambda c: index_randomized(poset_algebra_basis(p),
                                                    c), cfg, min))
    out.append(_escalate('breadth', spec, breadth_seaweed(spec),
                         lambda c: breadth_randomized(seaweed, c), cfg, max))
    center = center_dim_oracle(seaweed, cfg)
    out.append(CheckOutcome('center', center == index_center(spec),
                            index_center(spec), center))
    ideal = is_ideal(nil, seaweed, cfg)
    out.append(CheckOutcome('nilradical_ideal', ideal, True, ideal))
    nilpotent = is_nilpotent(nil, cfg)
    out.append(CheckOutcome('nilradical_nilpotent', nilpotent, True,
                            nilpotent))
    return out
