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

"""
Invariants of seaweed subalgebras of gl(N) and sl(N).

Exit status is 0 on success, 1 when a formula disagrees with the matrix
oracle (after escalation) and 2 on a usage or parse error.
"""

import argparse
import contextlib
import dataclasses
import itertools
import logging
import sys
import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from .checks import InvariantViolation, ParseError
from .invariants import (combine_oracle_sections, full_report,
                         oracle_mismatches, verify_spec)
from .notation import Flavor, is_parabolic, parse_spec, seaweed_specs
from .oracle import DEFAULT_PRIME, DEFAULT_TRIALS, FieldConfig
from .render import KINDS, render

ENUMERATE_CAP = 12
ORACLE_CAP = 6
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

logger = logging.getLogger(__name__)

_TEXT_LABELS = (
    ('spec', 's'),
    ('N', 'N'),
    ('dim', 'dim s'),
    ('index_seaweed', 'ind s'),
    ('center_dim', 'dim Z(s)'),
    ('n_central', '|Cen(s)|'),
    ('total_weight', 'sum wt(e)'),
    ('index_nilradical', 'ind n(s)'),
    ('lower_bound', '|E_1(s)| + |Cen(s)| bound'),
    ('e1_count', '|E_1(s)|'),
    ('breadth_seaweed', 'b(s)'),
)


def _field_options():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--prime', type=int, default=DEFAULT_PRIME,
                        help='prime modulus of the oracle field')
    parent.add_argument('--trials', type=int, default=DEFAULT_TRIALS,
                        help='random trials per randomized oracle value')
    parent.add_argument('--seed', type=int, default=0,
                        help='seed of the oracle random generator')
    parent.add_argument('--out', default=None,
                        help='write to this file instead of standard output')
    return parent


def build_parser():
    parser = argparse.ArgumentParser(prog='seaweedindex', description=__doc__,
                                     formatter_class=argparse.
                                     RawDescriptionHelpFormatter)
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='log progress at DEBUG level')
    commands = parser.add_subparsers(dest='command', required=True)
    common = _field_options()

    analyze = commands.add_parser('analyze', parents=[common],
                                  help='report the invariants of one spec')
    analyze.add_argument('spec', help="seaweed notation, e.g. 'p 2|4 / 1|2|3'")
    analyze.add_argument('--json', action='store_true',
                         help='print the report as one JSON object')
    analyze.add_argument('--oracle', action='store_true',
                         help='compare against the matrix oracle')
    analyze.add_argument('--type-a', action='store_true',
                         help='use the sl(N) flavor')

    enumerate_ = commands.add_parser('enumerate', parents=[common],
                                     help='one JSON report per spec of size N')
    enumerate_.add_argument('N', type=int)
    enumerate_.add_argument('--oracle', action='store_true',
                            help='add the oracle section to every report')
    enumerate_.add_argument('--parts-le-2', action='store_true',
                            help='only parts 1 and 2 (top parts only with '
                            '--parabolic)')
    enumerate_.add_argument('--parabolic', action='store_true',
                            help="only specs 'a_1|...|a_m / N'")
    enumerate_.add_argument('--type-a', action='store_true',
                            help='use the sl(N) flavor')
    enumerate_.add_argument('--jobs', type=int, default=1,
                            help='worker processes')

    verify = commands.add_parser('verify', parents=[common],
                                 help='cross-check every formula up to N')
    verify.add_argument('N', type=int)
    verify.add_argument('--jobs', type=int, default=1,
                        help='worker processes')

    render_ = commands.add_parser('render', parents=[common],
                                  help='DOT or TikZ diagram of one spec')
    render_.add_argument('spec')
    render_.add_argument('kind', choices=KINDS)
    fmt = render_.add_mutually_exclusive_group()
    fmt.add_argument('--dot', dest='fmt', action='store_const', const='dot')
    fmt.add_argument('--tikz', dest='fmt', action='store_const',
                     const='tikz')
    render_.add_argument('--type-a', action='store_true',
                         help='use the sl(N) flavor')
    render_.set_defaults(fmt='dot')
    return parser


@contextlib.contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, 'w') as handle:
            yield handle


def _spec(args):
    spec = parse_spec(args.spec)
    if args.type_a:
        spec = spec.with_flavor(Flavor.SL)
    return spec


def _checked_report(spec, with_oracle, cfg):
    """Report plus the oracle mismatches left after escalation."""
    report = full_report(spec, with_oracle, cfg)
    bad = oracle_mismatches(report)
    if bad:
        warnings.warn(report.spec + ': ' + ', '.join(b.name for b in bad) +
                      ' disagree with the oracle; escalating',
                      RuntimeWarning)
        retry = full_report(spec, with_oracle, cfg.escalated())
        report = dataclasses.replace(retry, oracle=combine_oracle_sections(
            report.oracle, retry.oracle))
        bad = oracle_mismatches(report)
    return report, bad


def _report_task(task):
    spec, with_oracle, cfg = task
    report, bad = _checked_report(spec, with_oracle, cfg)
    return report.to_json(), bad


def _verify_task(task):
    spec, with_oracle, cfg = task
    return spec, verify_spec(spec, cfg, with_oracle)


def _imap(func, tasks, jobs, batch=256):
    """Ordered map, optionally over a process pool, consumed in batches."""
    if jobs <= 1:
        yield from map(func, tasks)
        return
    tasks = iter(tasks)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        while True:
            chunk = list(itertools.islice(tasks, batch))
            if not chunk:
                return
            yield from pool.map(func, chunk)


def _check_n(n, cap):
    if not 1 <= n <= cap:
        raise ValueError(str(n) + ' was not a valid value for N (1..' +
                         str(cap) + ')')


def _keep(spec, args):
    if args.parabolic and not is_parabolic(spec):
        return False
    if args.parts_le_2:
        if any(a > 2 for a in spec.top):
            return False
        if not args.parabolic and any(b > 2 for b in spec.bottom):
            return False
    return True


def cmd_analyze(args, cfg):
    spec = _spec(args)
    report, bad = _checked_report(spec, args.oracle, cfg)
    with _output(args.out) as out:
        if args.json:
            out.write(report.to_json() + '\n')
        else:
            values = report.to_dict()
            for key, label in _TEXT_LABELS:
                out.write(label + ' = ' + str(values[key]) + '\n')
            if report.closed_form is not None:
                out.write('closed form ' + report.closed_form[0] + ' = ' +
                          str(report.closed_form[1]) + '\n')
            if report.oracle is not None:
                for key, value in values['oracle'].items():
                    out.write(key + ' = ' + str(value) + '\n')
    for b in bad:
        logger.error('%s: %s formula %s, oracle %s', report.spec, b.name,
                     b.expected, b.observed)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_enumerate(args, cfg):
    _check_n(args.N, ORACLE_CAP if args.oracle else ENUMERATE_CAP)
    flavor = Flavor.SL if args.type_a else Flavor.GL
    tasks = ((spec, args.oracle, cfg) for spec in seaweed_specs(args.N, flavor)
             if _keep(spec, args))
    failures = 0
    count = 0
    with _output(args.out) as out:
        for line, bad in _imap(_report_task, tasks, args.jobs):
            out.write(line + '\n')
            count += 1
            for b in bad:
                failures += 1
                logger.error('%s formula %s, oracle %s in %s', b.name,
                             b.expected, b.observed, line)
    logger.info('enumerated %d specs of size %d', count, args.N)
    return EXIT_MISMATCH if failures else EXIT_OK


def cmd_verify(args, cfg):
    _check_n(args.N, ENUMERATE_CAP)
    tasks = ((spec, n <= ORACLE_CAP, cfg)
             for n in range(1, args.N + 1)
             for flavor in (Flavor.GL, Flavor.SL)
             for spec in seaweed_specs(n, flavor))
    passed = Counter()
    failed = Counter()
    for spec, outcomes in _imap(_verify_task, tasks, args.jobs):
        logger.debug('verified %s', spec)
        for o in outcomes:
            if o.passed:
                passed[o.name] += 1
            else:
                failed[o.name] += 1
                logger.error('%s: %s expected %s, got %s', spec, o.name,
                             o.expected, o.observed)
    with _output(args.out) as out:
        width = max(len(name) for name in passed | failed)
        for name in sorted(passed | failed):
            out.write(name.ljust(width) + '  passed ' +
                      str(passed[name]).rjust(8) + '  failed ' +
                      str(failed[name]).rjust(4) + '\n')
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_render(args, cfg):
    spec = _spec(args)
    with _output(args.out) as out:
        out.write(render(spec, args.kind, args.fmt))
    return EXIT_OK


_COMMANDS = {
    'analyze': cmd_analyze,
    'enumerate': cmd_enumerate,
    'verify': cmd_verify,
    'render': cmd_render,
}


def main(argv=None):
    r"""
    Run the command line.

    Parameters
    ----------
    argv : list of str, optional
        Arguments without the program name. Default is ``sys.argv[1:]``.

    Returns
    -------
    int
        Exit status.

    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code
    logging.basicConfig(level=logging.DEBUG if args.verbose else
                        logging.INFO, format='%(levelname)s %(name)s: '
                        '%(message)s', stream=sys.stderr)
    logging.captureWarnings(True)
    try:
        cfg = FieldConfig(args.prime, args.trials, args.seed)
        return _COMMANDS[args.command](args, cfg)
    except ParseError as err:
        logger.error('%s: %s', type(err).__name__, err)
        return EXIT_USAGE
    except InvariantViolation as err:
        logger.error('invariant violated: %s', err)
        return EXIT_MISMATCH
    except ValueError as err:
        logger.error('%s', err)
        return EXIT_USAGE
