import pytest

from csp_prune.adapter import parse_instance, parse_trace
from csp_prune.cli import main
from csp_prune.core.constants import EXIT_OK, EXIT_UNSAT, EXIT_USAGE
from csp_prune.fixtures import fixture


@pytest.fixture
def gen(tmp_path):
    def write(name, *params):
        path = tmp_path / f"{name.lower()}{''.join(map(str, params))}.bcsp"
        assert main(['gen', name, *map(str, params), '-o', str(path)]) == EXIT_OK
        return str(path)
    return write


def test_gen_writes_a_parsable_document(gen, capsys):
    path = gen('K4')
    with open(path, encoding='utf-8') as f:
        text = f.read()
    assert text.startswith('# K4_COLOUR: list colouring of K4\n')
    assert parse_instance(text) == fixture('K4_COLOUR').instance
    assert 'wrote' in capsys.readouterr().out


def test_gen_list(capsys):
    assert main(['gen', '--list']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'NONCONF' in out
    assert 'STAR' in out


def test_gen_to_stdout(capsys):
    assert main(['gen', 'STAR', '5']) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith('# STAR 5: ')
    assert 'vars 5' in out


def test_preprocess_report(gen, tmp_path, capsys):
    path = gen('K4')
    trace_path, out_path = tmp_path / 'k4.trace', tmp_path / 'k4.reduced'
    code = main([
        'preprocess', path, '--rules', 'Exists2Snake', '--no-var',
        '--trace', str(trace_path), '-o', str(out_path),
    ])
    assert code == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert 'var-elim: 0' in lines
    assert 'val-elim: 3 (∃2snake: 3)' in lines
    assert 'ac: 3' in lines
    assert 'variables: 4/4' in lines
    assert 'final domains singleton' in lines
    assert len(parse_trace(trace_path.read_text(encoding='utf-8'))) == 6
    reduced = parse_instance(out_path.read_text(encoding='utf-8'))
    assert [reduced.domain(v) for v in range(4)] == [(0,), (1,), (2,), (3,)]


def test_preprocess_with_explicit_order(gen, tmp_path, capsys):
    path = gen('NONCONF')
    schedule = tmp_path / 'order.txt'
    schedule.write_text('val 2 0 Exists2Snake\n', encoding='utf-8')
    code = main([
        'preprocess', path, '--rules', 'Exists2Snake', '--no-var', '--order', f'explicit:{schedule}',
    ])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert 'val-elim: 1 (∃2snake: 1)' in out
    assert 'final domains singleton' not in out


def test_preprocess_proves_unsatisfiability(gen, capsys):
    assert main(['preprocess', gen('K3')]) == EXIT_UNSAT
    assert 'wipeout: variable' in capsys.readouterr().out


def test_preprocess_does_not_write_a_wiped_out_instance(gen, tmp_path, capsys):
    out_path = tmp_path / 'k3.reduced'
    assert main(['preprocess', gen('K3'), '-o', str(out_path)]) == EXIT_UNSAT
    assert 'wipeout: no reduced instance written' in capsys.readouterr().out.splitlines()
    assert not out_path.exists()


def test_solve(gen, capsys):
    path = gen('K4')
    assert main(['solve', path]) == EXIT_OK
    assert 'solution: 0=0 1=1 2=2 3=3' in capsys.readouterr().out
    assert main(['solve', path, '--reconstruct']) == EXIT_OK
    assert 'solution: ' in capsys.readouterr().out


def test_solve_unsatisfiable(gen, capsys):
    path = gen('K3')
    assert main(['solve', path, '--preprocess']) == EXIT_UNSAT
    assert 'unsatisfiable' in capsys.readouterr().out
    assert main(['solve', path]) == EXIT_UNSAT


def test_count(gen, capsys):
    assert main(['count', gen('NONCONF')]) == EXIT_OK
    assert 'solutions: 7' in capsys.readouterr().out
    assert main(['count', gen('I4K')]) == EXIT_UNSAT


def test_check(gen, capsys):
    path = gen('STAR', 4)
    assert main(['check', path, '--pattern', 'BTP', '--at', '1']) == EXIT_OK
    assert capsys.readouterr().out.strip() == 'no occurrence'
    assert main(['check', path, '--pattern', 'BTP', '--at', '0']) == EXIT_OK
    assert capsys.readouterr().out.startswith('occurrence: <0,')


def test_check_existential_snake_at_star_centre(gen, capsys):
    path = gen('STAR', 4)
    assert main(['check', path, '--pattern', '∃snake', '--at', '0', '--map', 'a=0']) == EXIT_OK
    assert capsys.readouterr().out.strip() == 'no occurrence'


def test_check_with_mapping(gen, capsys):
    path = gen('K4')
    assert main(['check', path, '--pattern', '∃2snake', '--at', '0', '--map', 'a=0,b=1']) == EXIT_OK
    assert capsys.readouterr().out.strip() == 'no occurrence'
    assert main(['check', path, '--pattern', 'Exists2Snake', '--at', '0', '--map', 'a=1,b=0']) == EXIT_OK
    assert capsys.readouterr().out.startswith('occurrence under')


@pytest.mark.parametrize('extra', [
    ['check', '{path}', '--pattern', 'NS'],
    ['check', '{path}', '--pattern', 'NS', '--at', '0', '--map', 'c=1'],
    ['check', '{path}', '--pattern', 'Pentagon', '--at', '0'],
    ['preprocess', '{path}', '--order', 'random'],
    ['preprocess', '{path}', '--rules', 'NS,NS'],
    ['count', '{missing}'],
    ['gen', 'PENTAGON'],
    ['gen'],
])
def test_usage_errors(gen, tmp_path, capsys, extra):
    path = gen('K4')
    argv = [arg.format(path=path, missing=tmp_path / 'missing.bcsp') for arg in extra]
    assert main(argv) == EXIT_USAGE
    assert capsys.readouterr().err.startswith('error: ')


def test_malformed_instance_file(tmp_path, capsys):
    path = tmp_path / 'bad.bcsp'
    path.write_text('bcsp 1\nvars 1\ndom 0 : a\n', encoding='utf-8')
    assert main(['count', str(path)]) == EXIT_USAGE
    assert 'line 3, column 9' in capsys.readouterr().err


def test_unknown_command():
    with pytest.raises(SystemExit):
        main(['shrink'])


@pytest.mark.slow
def test_verify_fixtures(capsys):
    assert main(['verify', '--fixtures']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'K4_COLOUR: ok' in out
    assert 'failures: 0' in out


def test_verify_instance_file(gen, capsys):
    assert main(['verify', gen('BOOL3')]) == EXIT_OK
    assert 'failures: 0' in capsys.readouterr().out
