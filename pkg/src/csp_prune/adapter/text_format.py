# Line-oriented text documents for instances, patterns, traces and schedules.
# Blank lines and everything after '#' are ignored.

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Set, Tuple

from ..core.config import ScheduledStep
from ..core.constants import INSTANCE_HEADER, PATTERN_HEADER, TRACE_HEADER, RuleId, parse_rule
from ..core.errors import ContractError, FormatError, InstanceError, PatternError
from ..core.instance import Instance, make_instance
from ..core.pattern import Edge, Pattern
from ..core.trace import ElimRecord, EliminationTrace, RecordKind


@dataclass
class _Token:
    text: str
    column: int


@dataclass
class _Line:
    number: int
    tokens: List[_Token]

    @property
    def keyword(self) -> str:
        return self.tokens[0].text

    def error(self, message: str, index: Optional[int] = None) -> FormatError:
        column = self.tokens[index].column if index is not None and index < len(self.tokens) else None
        return FormatError(message, self.number, column)

    def int_at(self, index: int, what: str) -> int:
        if index >= len(self.tokens):
            raise self.error(f"missing {what}")
        token = self.tokens[index]
        try:
            value = int(token.text)
        except ValueError:
            raise FormatError(f"{what} must be an integer, got '{token.text}'", self.number, token.column)
        if value < 0:
            raise FormatError(f"{what} must be non-negative, got {value}", self.number, token.column)
        return value

    def expect_length(self, count: int, usage: str) -> None:
        if len(self.tokens) != count:
            index = count if len(self.tokens) > count else None
            raise self.error(f"expected '{usage}'", index)


def _lines(text: str) -> Iterator[_Line]:
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0]
        tokens: List[_Token] = []
        position = 0
        for part in content.split():
            position = content.index(part, position)
            tokens.append(_Token(part, position + 1))
            position += len(part)
        if tokens:
            yield _Line(number, tokens)


def _header(lines: List[_Line], header: str) -> int:
    if not lines:
        raise FormatError(f"empty document, expected header '{header}'", 1, 1)
    first = lines[0]
    words = header.split()
    if [token.text for token in first.tokens[:len(words)]] != words:
        raise first.error(f"expected header '{header}'", 0)
    return len(words)


def _var_count(line: Optional[_Line]) -> int:
    if line is None or line.keyword != 'vars':
        raise FormatError("expected 'vars <n>' after the header", line.number if line else None)
    line.expect_length(2, 'vars <n>')
    return line.int_at(1, 'variable count')


def _check_var(line: _Line, index: int, var_count: int) -> int:
    v = line.int_at(index, 'variable')
    if v >= var_count:
        raise line.error(f"variable {v} out of range 0..{var_count - 1}", index)
    return v


def _domain_line(line: _Line, var_count: int, domains: Dict[int, List[int]]) -> None:
    if len(line.tokens) < 4 or line.tokens[2].text != ':':
        raise line.error("expected 'dom <i> : <v0> <v1> ...'")
    v = _check_var(line, 1, var_count)
    if v in domains:
        raise line.error(f"duplicate domain for variable {v}", 1)
    values = [line.int_at(index, 'value') for index in range(3, len(line.tokens))]
    if len(set(values)) != len(values):
        raise line.error(f"repeated value in the domain of variable {v}", 3)
    domains[v] = values


def _missing_domains(domains: Dict[int, List[int]], var_count: int, line_number: int) -> None:
    missing = [v for v in range(var_count) if v not in domains]
    if missing:
        raise FormatError(f"no domain for variables {missing}", line_number)


# ---- instances ---------------------------------------------------------------

def parse_instance(text: str) -> Instance:
    """
    Parse an instance document.

    Args:
        text: document starting with the 'bcsp 1' header

    Returns:
        Instance; variables listed on 'eliminated' lines are removed
    """
    lines = list(_lines(text))
    _header(lines, INSTANCE_HEADER)
    lines[0].expect_length(2, INSTANCE_HEADER)
    var_count = _var_count(lines[1] if len(lines) > 1 else None)

    domains: Dict[int, List[int]] = {}
    constraints: List[Tuple[int, int, List[Tuple[int, int]]]] = []
    scopes: Set[Tuple[int, int]] = set()
    eliminated: List[int] = []
    block: Optional[Tuple[_Line, int, int, List[Tuple[int, int]]]] = None

    for line in lines[2:]:
        if block is not None:
            opener, i, j, tuples = block
            if line.keyword == 'end':
                line.expect_length(1, 'end')
                constraints.append((i, j, tuples))
                block = None
                continue
            line.expect_length(2, '<a> <b>')
            a, b = line.int_at(0, 'value'), line.int_at(1, 'value')
            for index, (v, value) in enumerate(((i, a), (j, b))):
                if value not in domains.get(v, ()):
                    raise line.error(f"value {value} is not in the domain of variable {v}", index)
            tuples.append((a, b))
            continue
        if line.keyword == 'dom':
            _domain_line(line, var_count, domains)
        elif line.keyword == 'con':
            line.expect_length(3, 'con <i> <j>')
            i, j = _check_var(line, 1, var_count), _check_var(line, 2, var_count)
            if i == j:
                raise line.error("a constraint needs two distinct variables", 2)
            scope = (min(i, j), max(i, j))
            if scope in scopes:
                raise line.error(f"duplicate constraint on variables {scope}", 1)
            missing = [v for v in (i, j) if v not in domains]
            if missing:
                raise line.error(f"constraint on variable {missing[0]} before its domain", 1)
            scopes.add(scope)
            block = (line, i, j, [])
        elif line.keyword == 'eliminated':
            line.expect_length(2, 'eliminated <i>')
            eliminated.append(_check_var(line, 1, var_count))
        else:
            raise line.error(f"unknown keyword '{line.keyword}'", 0)

    if block is not None:
        raise block[0].error("constraint block is not terminated by 'end'", 0)
    _missing_domains(domains, var_count, lines[-1].number)
    try:
        instance = make_instance(var_count, [domains[v] for v in range(var_count)], constraints)
        for v in eliminated:
            instance.remove_variable(v)
    except (InstanceError, ContractError) as exc:
        raise FormatError(str(exc)) from exc
    return instance


def serialize_instance(instance: Instance) -> str:
    """Canonical document for the live view of an instance."""
    wiped = instance.wiped_out()
    if wiped is not None:
        raise ContractError(f"Variable {wiped} has an empty domain; a wiped-out instance has no document")
    out = [INSTANCE_HEADER, f'vars {instance.var_count}']
    for v in range(instance.var_count):
        out.append(f"dom {v} : {' '.join(map(str, instance.domain(v)))}")
    for v in range(instance.var_count):
        if not instance.is_present(v):
            out.append(f'eliminated {v}')
    for v, w, tuples in instance.constraints():
        out.append(f'con {v} {w}')
        out.extend(f'{a} {b}' for a, b in sorted(tuples))
        out.append('end')
    return '\n'.join(out) + '\n'


# ---- patterns ----------------------------------------------------------------

def parse_pattern(text: str) -> Pattern:
    lines = list(_lines(text))
    _header(lines, PATTERN_HEADER)
    lines[0].expect_length(2, PATTERN_HEADER)
    var_count = _var_count(lines[1] if len(lines) > 1 else None)

    domains: Dict[int, List[int]] = {}
    cpt: Dict[Edge, bool] = {}
    distinguished_var: Optional[int] = None
    existential: List[int] = []
    distinguished_val: Optional[int] = None

    def value_of(line: _Line, var_index: int) -> Tuple[int, int]:
        v = _check_var(line, var_index, var_count)
        a = line.int_at(var_index + 1, 'value')
        if a not in domains.get(v, ()):
            raise line.error(f"value {a} is not in the domain of variable {v}", var_index + 1)
        return v, a

    def quantified_value(line: _Line) -> int:
        v, a = value_of(line, 1)
        if distinguished_var is None:
            raise line.error(f"'{line.keyword}' before 'evar'", 0)
        if v != distinguished_var:
            raise line.error(f"variable {v} is not the distinguished variable {distinguished_var}", 1)
        return a

    for line in lines[2:]:
        keyword = line.keyword
        if keyword == 'dom':
            _domain_line(line, var_count, domains)
        elif keyword == 'edge':
            line.expect_length(6, 'edge +|- <i> <a> <j> <b>')
            sign = line.tokens[1].text
            if sign not in ('+', '-'):
                raise line.error(f"edge sign must be '+' or '-', got '{sign}'", 1)
            p, q = value_of(line, 2), value_of(line, 4)
            if p[0] == q[0]:
                raise line.error("an edge needs two distinct variables", 4)
            key = (min(p, q), max(p, q))
            if key in cpt:
                raise line.error(f"duplicate edge {key}", 2)
            cpt[key] = sign == '+'
        elif keyword == 'evar':
            line.expect_length(2, 'evar <i>')
            if distinguished_var is not None:
                raise line.error("duplicate 'evar'", 0)
            distinguished_var = _check_var(line, 1, var_count)
        elif keyword == 'eval':
            line.expect_length(3, 'eval <i> <a>')
            existential.append(quantified_value(line))
        elif keyword == 'dval':
            line.expect_length(3, 'dval <i> <a>')
            if distinguished_val is not None:
                raise line.error("duplicate 'dval'", 0)
            distinguished_val = quantified_value(line)
        else:
            raise line.error(f"unknown keyword '{keyword}'", 0)

    _missing_domains(domains, var_count, lines[-1].number)
    try:
        return Pattern(
            [domains[v] for v in range(var_count)], cpt,
            distinguished_var, existential, distinguished_val
        )
    except PatternError as exc:
        raise FormatError(str(exc)) from exc


def serialize_pattern(pattern: Pattern) -> str:
    out = [PATTERN_HEADER, f'vars {pattern.var_count}']
    for v in range(pattern.var_count):
        out.append(f"dom {v} : {' '.join(map(str, pattern.domain(v)))}")
    for ((v, a), (w, b)), value in pattern.edges():
        out.append(f"edge {'+' if value else '-'} {v} {a} {w} {b}")
    x = pattern.distinguished_var
    if x is not None:
        out.append(f'evar {x}')
        out.extend(f'eval {x} {a}' for a in sorted(pattern.existential))
        if pattern.distinguished_val is not None:
            out.append(f'dval {x} {pattern.distinguished_val}')
    return '\n'.join(out) + '\n'


# ---- traces --------------------------------------------------------------------

def _rule_field(line: _Line, index: int, kind: RecordKind) -> RuleId:
    token = line.tokens[index]
    if not token.text.startswith('rule='):
        raise FormatError("expected 'rule=<R>'", line.number, token.column)
    try:
        rule = parse_rule(token.text[len('rule='):])
    except ContractError as exc:
        raise FormatError(str(exc), line.number, token.column) from exc
    if (kind is RecordKind.VAR) != rule.is_var_rule:
        raise FormatError(f"{rule} is not a {kind} elimination rule", line.number, token.column)
    return rule


def _mapping_field(line: _Line, index: int) -> Dict[int, int]:
    token = line.tokens[index]
    if not token.text.startswith('m='):
        raise FormatError("expected 'm=<k>:<v>,...'", line.number, token.column)
    mapping: Dict[int, int] = {}
    body = token.text[len('m='):]
    for item in filter(None, body.split(',')):
        key, sep, value = item.partition(':')
        if not sep or not key.isdigit() or not value.isdigit():
            raise FormatError(f"malformed mapping entry '{item}'", line.number, token.column)
        mapping[int(key)] = int(value)
    if len(set(mapping.values())) != len(mapping):
        raise FormatError("value mapping is not injective", line.number, token.column)
    return mapping


def parse_trace(text: str) -> EliminationTrace:
    """Parse a trace document; the records carry no restoration state until replayed."""
    lines = list(_lines(text))
    _header(lines, TRACE_HEADER)
    head = lines[0]
    head.expect_length(3, f'{TRACE_HEADER} <fingerprint>')
    trace = EliminationTrace(head.tokens[2].text)

    for line in lines[1:]:
        keyword = line.keyword
        if keyword == 'var':
            line.expect_length(4, 'var <x> rule=<R> m=<a>:<d>')
            trace.append(ElimRecord(
                RecordKind.VAR, line.int_at(1, 'variable'),
                rule=_rule_field(line, 2, RecordKind.VAR), mapping=_mapping_field(line, 3),
            ))
        elif keyword == 'val':
            line.expect_length(5, 'val <x> <b> rule=<R> m=<a>:<d>,<b>:<b>')
            trace.append(ElimRecord(
                RecordKind.VAL, line.int_at(1, 'variable'), line.int_at(2, 'value'),
                rule=_rule_field(line, 3, RecordKind.VAL), mapping=_mapping_field(line, 4),
            ))
        elif keyword == 'ac':
            line.expect_length(3, 'ac <x> <v>')
            trace.append(ElimRecord(RecordKind.AC, line.int_at(1, 'variable'), line.int_at(2, 'value')))
        elif keyword == 'wipeout':
            line.expect_length(2, 'wipeout <x>')
            trace.wipeout = line.int_at(1, 'variable')
        else:
            raise line.error(f"unknown record kind '{keyword}'", 0)
    return trace


def _format_mapping(mapping: Optional[Dict[int, int]]) -> str:
    return 'm=' + ','.join(f'{k}:{v}' for k, v in sorted((mapping or {}).items()))


def serialize_trace(trace: EliminationTrace) -> str:
    out = [f'{TRACE_HEADER} {trace.fingerprint}']
    for record in trace:
        if record.kind is RecordKind.VAR:
            out.append(f'var {record.var} rule={record.rule} {_format_mapping(record.mapping)}')
        elif record.kind is RecordKind.VAL:
            out.append(
                f'val {record.var} {record.val} rule={record.rule} {_format_mapping(record.mapping)}'
            )
        else:
            out.append(f'ac {record.var} {record.val}')
    if trace.wipeout is not None:
        out.append(f'wipeout {trace.wipeout}')
    return '\n'.join(out) + '\n'


# ---- schedules -----------------------------------------------------------------

def parse_schedule(text: str) -> Tuple[ScheduledStep, ...]:
    """
    Parse an explicit elimination order, one step per line.

    Steps are 'var <x> [rule]' or 'val <x> <b> [rule]'; without a rule the
    first enabled rule that licenses the step is used.
    """
    steps: List[ScheduledStep] = []
    for line in _lines(text):
        keyword = line.keyword
        if keyword not in ('var', 'val'):
            raise line.error(f"expected 'var' or 'val', got '{keyword}'", 0)
        arity = 2 if keyword == 'var' else 3
        if len(line.tokens) not in (arity, arity + 1):
            usage = 'var <x> [rule]' if keyword == 'var' else 'val <x> <b> [rule]'
            raise line.error(f"expected '{usage}'", min(len(line.tokens), arity + 1))
        var = line.int_at(1, 'variable')
        val = line.int_at(2, 'value') if keyword == 'val' else None
        rule = None
        if len(line.tokens) > arity:
            token = line.tokens[arity]
            try:
                rule = parse_rule(token.text)
            except ContractError as exc:
                raise FormatError(str(exc), line.number, token.column) from exc
            if (keyword == 'var') != rule.is_var_rule:
                raise FormatError(f"{rule} cannot license a {keyword} step", line.number, token.column)
        steps.append(ScheduledStep(keyword, var, val, rule))
    return tuple(steps)


def serialize_schedule(steps: Tuple[ScheduledStep, ...]) -> str:
    return ''.join(f'{step}\n' for step in steps)
