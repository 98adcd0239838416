# MIT License

# Copyright (c) 2021 Izhar Ahmad

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

from __future__ import annotations
import argparse
import json
import logging
from contextlib import nullcontext
from typing import Any, Callable, Dict, List, NoReturn, Optional, Sequence, Tuple

from laxtop.cli.dot import emit_dot
from laxtop.cli.parsers import encode_element, encode_nested, parse_monad_spec, parse_space_file, serialize_space, space_to_payload
from laxtop.core import using
from laxtop.errors import BudgetExceeded, LaxtopError, ParseError
from laxtop.flags import Conditions
from laxtop.internal.logger import logger
from laxtop.models import ReflectionKind
from laxtop.monads import check_monad_laws
from laxtop.reflect import check_CF, reflect
from laxtop.tspace import barr_extend, check_axioms, check_khaus, product_space

__all__ = (
    'build_parser',
    'run_command',
    'main',
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BUDGET = 2

# (text, json payload) of a successful command
Output = Tuple[str, Dict[str, Any]]


class _UsageError(LaxtopError):
    DEFAULT_ERROR_MESSAGE = 'Invalid command line.'


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise _UsageError(message)


def _read(path: str) -> str:
    try:
        with open(path, encoding='utf-8') as fp:
            return fp.read()
    except OSError as exc:
        raise ParseError('cannot read {0}: {1}'.format(path, exc.strerror)) from None


def _check(args: argparse.Namespace) -> Output:
    s = parse_space_file(_read(args.file))
    axioms = check_axioms(s)
    khaus = check_khaus(s)
    conditions = Conditions(
        reflexive=axioms.reflexive,
        transitive=axioms.transitive,
        compact=khaus.compact,
        hausdorff=khaus.hausdorff,
        algebraic=khaus.compact and khaus.hausdorff,
    )
    # C and F are only meaningful for spaces
    if axioms.ok:
        cf = check_CF(s)
        conditions.completely_regular = cf.completely_regular
        conditions.functionally_hausdorff = cf.functionally_hausdorff
        conditions.known |= Conditions.completely_regular | Conditions.functionally_hausdorff

    return conditions.summary(), {'ok': True, 'conditions': conditions.to_dict()}


def _reflect(args: argparse.Namespace) -> Output:
    s = parse_space_file(_read(args.file))
    result = reflect(s, args.into)
    unit = list(result.unit.f.table)
    text = 'unit: {0}\n{1}'.format(json.dumps(unit), serialize_space(result.reflected))
    return text, {'ok': True, 'kind': args.into, 'unit': unit, 'reflected': space_to_payload(result.reflected)}


def _extend(args: argparse.Namespace) -> Output:
    s = parse_space_file(_read(args.file))
    monad = s.monad
    n = s.points.size
    pairs = [[encode_nested(monad, big, n), encode_element(monad, t, n)] for big, t in barr_extend(s).pairs]
    return '\n'.join(json.dumps(pair, ensure_ascii=False) for pair in pairs), {'ok': True, 'pairs': pairs}


def _product(args: argparse.Namespace) -> Output:
    a = parse_space_file(_read(args.files[0]))
    b = parse_space_file(_read(args.files[1]))
    p = product_space(a, b)
    return serialize_space(p), {'ok': True, 'space': space_to_payload(p)}


def _laws(args: argparse.Namespace) -> Output:
    report = check_monad_laws(parse_monad_spec(args.monad), args.max_n)
    if not report.passed:
        failed = ', '.join(r.name for r in report if not r.passed)
        logger.info('laws failing: %s', failed)
    payload = report.to_dict()
    payload['ok'] = report.passed
    return '\n'.join(report.lines()), payload


def _dot(args: argparse.Namespace) -> Output:
    text = emit_dot(parse_space_file(_read(args.file)))
    return text.rstrip('\n'), {'ok': True, 'dot': text}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument('--json', action='store_true', help='print a JSON object instead of text')
    common.add_argument('--budget', type=int, default=None, metavar='N', help='largest enumeration allowed')
    common.add_argument('-v', '--verbose', action='store_true', help='log debug messages to stderr')

    parser = _Parser(prog='laxtop', description='Finite lax algebras and their reflections.')
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    check = sub.add_parser('check', parents=[common], help='report the conditions a space satisfies')
    check.add_argument('file')
    check.set_defaults(handler=_check)

    refl = sub.add_parser('reflect', parents=[common], help='reflect a space into a subcategory')
    refl.add_argument('--into', required=True, choices=ReflectionKind.ALL)
    refl.add_argument('file')
    refl.set_defaults(handler=_reflect)

    extend = sub.add_parser('extend', parents=[common], help='print the extension of the convergence relation')
    extend.add_argument('file')
    extend.set_defaults(handler=_extend)

    product = sub.add_parser('product', parents=[common], help='print the product of two spaces')
    product.add_argument('files', nargs=2, metavar='FILE')
    product.set_defaults(handler=_product)

    laws = sub.add_parser('laws', parents=[common], help='check the monad laws on small carriers')
    laws.add_argument('--monad', required=True, metavar='SPEC')
    laws.add_argument('--max-n', type=int, default=3, dest='max_n', metavar='N')
    laws.set_defaults(handler=_laws)

    dot = sub.add_parser('dot', parents=[common], help='render a space as Graphviz DOT')
    dot.add_argument('file')
    dot.set_defaults(handler=_dot)

    return parser


def _render(as_json: bool, text: str, payload: Dict[str, Any]) -> str:
    if as_json:
        return json.dumps(payload, ensure_ascii=False)
    return text


def run_command(argv: Sequence[str]) -> Tuple[int, str]:
    """
    Runs one command and returns ``(exit_code, output)`` without printing.

    The exit code is ``0`` on success, ``2`` when an enumeration exceeded
    the budget and ``1`` for every other error, including failed law checks.
    """
    as_json = '--json' in argv
    try:
        args = build_parser().parse_args(list(argv))
        if args.verbose:
            logging.basicConfig(level=logging.DEBUG)
            logging.getLogger('laxtop').setLevel(logging.DEBUG)

        handler: Callable[[argparse.Namespace], Output] = args.handler
        scope = using(budget=args.budget) if args.budget is not None else nullcontext()
        with scope:
            text, payload = handler(args)
    except LaxtopError as exc:
        code = EXIT_BUDGET if isinstance(exc, BudgetExceeded) else EXIT_ERROR
        logger.debug('command %s failed with %r', list(argv), exc)
        return code, _render(as_json, 'error: {0}'.format(exc), {'ok': False, 'error': exc.to_dict()})
    except (TypeError, ValueError) as exc:
        return EXIT_ERROR, _render(as_json, 'error: {0}'.format(exc), {'ok': False, 'error': {'type': exc.__class__.__name__, 'message': str(exc)}})

    return (EXIT_OK if payload['ok'] else EXIT_ERROR), _render(as_json, text, payload)


def main(argv: Optional[Sequence[str]] = None) -> int:
    import sys

    args: List[str] = list(sys.argv[1:] if argv is None else argv)
    if args in ([], ['-h'], ['--help']):
        build_parser().print_help()
        return EXIT_OK

    code, output = run_command(args)
    stream = sys.stdout if code == EXIT_OK else sys.stderr
    print(output, file=stream)
    return code
