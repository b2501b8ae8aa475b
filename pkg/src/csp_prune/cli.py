"""Command-line entry point: csp-prune <command> [options]."""

import argparse
import logging
import os
import sys
import time
from typing import Callable, Dict, List, Optional, Sequence

from .adapter import (
    parse_instance,
    parse_pattern,
    parse_schedule,
    serialize_instance,
    serialize_trace,
)
from .core.algebra import occurs_at
from .core.catalog import get_pattern
from .core.config import EngineConfig, PhasePolicy
from .core.constants import (
    DEFAULT_RULE_ORDER,
    EXIT_OK,
    EXIT_UNSAT,
    EXIT_USAGE,
    VALUE_LETTERS,
    parse_rule,
)
from .core.errors import (
    ContractError,
    CspPruneError,
    EliminationError,
    FormatError,
    SizeLimitError,
    TraceError,
)
from .core.instance import Instance
from .core.pattern import Pattern
from .core.trace import EliminationTrace
from .core.transform import greedy_solve, preprocess, recover_one
from .fixtures import FIXTURE_NAMES, all_fixtures, fixture, verify_fixture
from .oracle import check_preprocessing, count_solutions, cross_check, injective_mappings, solve

LOG = logging.getLogger(__name__)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def _write(path: str, text: str) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)


def _load_instance(path: str) -> Instance:
    return parse_instance(_read(path))


def _label(rule) -> str:
    return get_pattern(rule).label


def _format_solution(solution: Dict[int, int]) -> str:
    return ' '.join(f'{v}={a}' for v, a in sorted(solution.items()))


def _engine_config(args: argparse.Namespace) -> EngineConfig:
    rules = DEFAULT_RULE_ORDER
    if args.rules:
        rules = tuple(parse_rule(name) for name in args.rules.split(',') if name.strip())
    schedule = ()
    order = args.order
    if order.startswith('explicit:'):
        schedule = parse_schedule(_read(order[len('explicit:'):]))
    elif order != 'canonical':
        raise UsageError(f"--order must be 'canonical' or 'explicit:<script>', got '{order}'")
    return EngineConfig(
        rules=rules,
        var_elim=not args.no_var,
        val_elim=not args.no_val,
        phase_policy=PhasePolicy(args.policy),
        max_steps=args.max_steps,
        schedule=schedule,
    )


def _report_preprocessing(original: Instance, reduced: Instance, trace: EliminationTrace) -> None:
    tally = trace.tally()
    for name, counter in (('var-elim', tally.var), ('val-elim', tally.val)):
        total = sum(counter.values())
        detail = ', '.join(f'{_label(rule)}: {count}' for rule, count in counter.items())
        print(f'{name}: {total}' + (f' ({detail})' if detail else ''))
    print(f'ac: {tally.ac}')
    print(f'variables: {reduced.present_count}/{original.var_count}')
    if trace.wipeout is not None:
        print(f'wipeout: variable {trace.wipeout}, unsatisfiable')
    elif all(reduced.domain_size(v) == 1 for v in reduced.variables()):
        print('final domains singleton')


# ---- commands ------------------------------------------------------------------

def cmd_preprocess(args: argparse.Namespace) -> int:
    instance = _load_instance(args.instance)
    config = _engine_config(args)
    start = time.perf_counter()
    reduced, trace = preprocess(instance, config)
    elapsed = time.perf_counter() - start
    _report_preprocessing(instance, reduced, trace)
    if args.trace:
        _write(args.trace, serialize_trace(trace))
        print(f'trace: {args.trace}')
    if args.output and trace.wipeout is not None:
        print('wipeout: no reduced instance written')
    elif args.output:
        _write(args.output, serialize_instance(reduced))
        print(f'reduced instance: {args.output}')
    print(f'time: {elapsed:.3f}s')
    return EXIT_UNSAT if trace.wipeout is not None else EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    instance = _load_instance(args.instance)
    start = time.perf_counter()
    if not (args.preprocess or args.reconstruct):
        solution = solve(instance)
    else:
        reduced, trace = preprocess(instance, _engine_config(args))
        _report_preprocessing(instance, reduced, trace)
        if trace.wipeout is not None:
            solution = None
        elif reduced.present_count <= 1 and args.reconstruct:
            solution = greedy_solve(reduced, trace, instance)
        else:
            solution = solve(reduced)
            if solution is not None and args.reconstruct:
                solution = recover_one(instance, trace, solution)
        if solution is not None and args.reconstruct and not instance.is_solution(solution):
            raise CspPruneError(f"Recovered assignment {solution} is not a solution")
    elapsed = time.perf_counter() - start
    if solution is None:
        print('unsatisfiable')
        print(f'time: {elapsed:.3f}s')
        return EXIT_UNSAT
    print(f'solution: {_format_solution(solution)}')
    print(f'time: {elapsed:.3f}s')
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    instance = _load_instance(args.instance)
    start = time.perf_counter()
    count = count_solutions(instance)
    print(f'solutions: {count}')
    print(f'time: {time.perf_counter() - start:.3f}s')
    return EXIT_OK if count else EXIT_UNSAT


def _load_pattern(reference: str) -> Pattern:
    if os.path.exists(reference):
        return parse_pattern(_read(reference))
    return get_pattern(reference).pattern


def _parse_map(text: str) -> Dict[int, int]:
    mapping: Dict[int, int] = {}
    for item in filter(None, (part.strip() for part in text.split(','))):
        key, sep, value = item.partition('=')
        key = key.strip().lower()
        if not sep or not value.strip().isdigit():
            raise UsageError(f"--map entries look like a=<v>, got '{item}'")
        if key in VALUE_LETTERS:
            mapping[VALUE_LETTERS[key]] = int(value)
        elif key.isdigit():
            mapping[int(key)] = int(value)
        else:
            raise UsageError(f"Unknown pattern value '{key}' in --map")
    return mapping


def cmd_check(args: argparse.Namespace) -> int:
    instance = _load_instance(args.instance)
    pattern = _load_pattern(args.pattern)
    if pattern.is_quantified and args.at is None:
        raise UsageError("A quantified pattern needs --at <var>")
    x = args.at if pattern.is_quantified else None
    if args.map is not None:
        mappings = [_parse_map(args.map)]
    elif pattern.is_quantified:
        mappings = list(injective_mappings(pattern, instance, x))
    else:
        mappings = [{}]
    for m in mappings:
        witness = occurs_at(pattern, instance, x, m)
        if witness is not None:
            where = f' under {m}' if m else ''
            print(f'occurrence{where}: ' + ' '.join(f'<{v},{a}>' for v, a in witness.image()))
            return EXIT_OK
    print('no occurrence')
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if not args.instances and not args.fixtures:
        raise UsageError("verify needs instance files or --fixtures")
    config = _engine_config(args)
    failures = 0
    start = time.perf_counter()

    def report(name: str, problems: List[str]) -> None:
        nonlocal failures
        if problems:
            failures += 1
            print(f'{name}: FAIL')
            for problem in problems:
                print(f'  {problem}')
        else:
            print(f'{name}: ok')

    for path in args.instances:
        instance = _load_instance(path)
        problems = check_preprocessing(instance, config)
        if instance.present_count <= args.cross_check_vars:
            problems += cross_check(instance).disagreements
        report(path, problems)
    if args.fixtures:
        for fx in all_fixtures():
            problems = verify_fixture(fx) + check_preprocessing(fx.instance, config)
            if fx.instance.present_count <= args.cross_check_vars:
                problems += cross_check(fx.instance).disagreements
            report(fx.name, problems)
    print(f'failures: {failures}')
    print(f'time: {time.perf_counter() - start:.3f}s')
    return EXIT_UNSAT if failures else EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.list:
        for name in FIXTURE_NAMES:
            fx = fixture(name)
            print(f'{name:10s} {fx.description}')
        return EXIT_OK
    if not args.name:
        raise UsageError("gen needs a fixture name or --list")
    fx = fixture(args.name, *args.params, inner=args.inner)
    text = serialize_instance(fx.instance)
    header = f'# {fx.name}' + (f" {' '.join(map(str, fx.params))}" if fx.params else '') + f': {fx.description}\n'
    if args.output:
        _write(args.output, header + text)
        print(f'wrote {fx!r} to {args.output}')
    else:
        sys.stdout.write(header + text)
    return EXIT_OK


# ---- parser ----------------------------------------------------------------------

def _add_engine_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--rules', help='comma-separated rules to enable, in scan order')
    parser.add_argument('--no-var', action='store_true', help='disable variable elimination')
    parser.add_argument('--no-val', action='store_true', help='disable value elimination')
    parser.add_argument('--order', default='canonical', help="'canonical' or 'explicit:<schedule file>'")
    parser.add_argument(
        '--policy', default=PhasePolicy.VAR_FIRST.value,
        choices=[policy.value for policy in PhasePolicy], help='phase order'
    )
    parser.add_argument('--max-steps', type=int, help='stop after this many eliminations')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='csp-prune',
        description='Forbidden-pattern preprocessing for binary CSP instances'
    )
    parser.add_argument('-v', '--verbose', action='store_true', help='log library steps')
    commands = parser.add_subparsers(dest='command', required=True)

    p = commands.add_parser('preprocess', help='reduce an instance')
    p.add_argument('instance')
    _add_engine_options(p)
    p.add_argument('--trace', help='write the elimination trace here')
    p.add_argument('-o', '--output', help='write the reduced instance here')
    p.set_defaults(func=cmd_preprocess)

    p = commands.add_parser('solve', help='find one solution')
    p.add_argument('instance')
    p.add_argument('--preprocess', action='store_true', help='reduce before searching')
    p.add_argument('--reconstruct', action='store_true', help='map the solution back to the original')
    _add_engine_options(p)
    p.set_defaults(func=cmd_solve)

    p = commands.add_parser('count', help='count solutions')
    p.add_argument('instance')
    p.set_defaults(func=cmd_count)

    p = commands.add_parser('check', help='look for a pattern occurrence')
    p.add_argument('instance')
    p.add_argument('--pattern', required=True, help='catalog name or pattern file')
    p.add_argument('--at', type=int, help='target of the distinguished variable')
    p.add_argument('--map', help='existential value mapping, e.g. a=0,b=1')
    p.set_defaults(func=cmd_check)

    p = commands.add_parser('verify', help='compare preprocessing and detectors with the oracle')
    p.add_argument('instances', nargs='*')
    p.add_argument('--fixtures', action='store_true', help='verify every built-in fixture')
    p.add_argument(
        '--cross-check-vars', type=int, default=5,
        help='cross-check detectors on instances with at most this many variables'
    )
    _add_engine_options(p)
    p.set_defaults(func=cmd_verify)

    p = commands.add_parser('gen', help='write a built-in fixture')
    p.add_argument('name', nargs='?')
    p.add_argument('params', nargs='*', type=int)
    p.add_argument('--inner', help='fixture wrapped by IJ')
    p.add_argument('--list', action='store_true', help='list fixtures')
    p.add_argument('-o', '--output')
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format='%(levelname)s %(name)s: %(message)s')
    LOG.debug("Running %s", args.command)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except (UsageError, FormatError, ContractError, TraceError, EliminationError, SizeLimitError, OSError) as exc:
        print(f'error: {exc}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
