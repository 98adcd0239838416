from __future__ import annotations
import json

import pytest

from laxtop import EncodingError, MonadKind, ParseError, PowersetMonad, ReflectionKind
from laxtop.cli import emit_dot, main, parse_monad_spec, parse_space_file, run_command, serialize_space
from tests.conftest import DATA, GOLDEN, MAKERS


def _data(name):
    return str(DATA / name)


def _golden(name):
    return (GOLDEN / name).read_text(encoding='utf-8').rstrip('\n')


# space files

@pytest.mark.parametrize('name', sorted(MAKERS))
def test_parse_fixture_files(name):
    s = parse_space_file((DATA / (name + '.json')).read_text(encoding='utf-8'))
    assert s == MAKERS[name]()


@pytest.mark.parametrize('name', sorted(MAKERS))
def test_serialize_round_trip(name):
    s = MAKERS[name]()
    assert parse_space_file(serialize_space(s)) == s


def test_parse_keeps_labels_and_drops_duplicates():
    s = parse_space_file((DATA / 'fix_ord_eq.json').read_text(encoding='utf-8'))
    assert s.points.labels == ('x', 'y')
    assert len(s.converges) == 4
    assert json.loads(serialize_space(s))['labels'] == ['x', 'y']


def test_minimal_file():
    s = parse_space_file('{"monad": {"kind": "identity"}, "points": 1, "converges": [[0, 0]]}')
    assert s.points.size == 1
    assert s.converges.pairs == ((0, 0),)


def test_out_of_range_subset():
    with pytest.raises(EncodingError) as info:
        parse_space_file((DATA / 'bad_encoding.json').read_text(encoding='utf-8'))
    assert info.value.field == 'converges[0][0]'


@pytest.mark.parametrize('text, field', [
    ('{"monad": {"kind": "identity"}, "converges": []}', 'points'),
    ('{"monad": {"kind": "identity"}, "points": 1, "converges": [], "extra": 1}', 'extra'),
    ('{"monad": {"kind": "monoid_action"}, "points": 1, "converges": []}', 'monad.monoid'),
    ('{"monad": {"kind": "fuzzy"}, "points": 1, "converges": []}', 'monad.kind'),
    ('{"monad": {"kind": "identity"}, "points": -1, "converges": []}', 'points'),
    ('{"monad": {"kind": "identity"}, "points": 1, "converges": [[0]]}', 'converges[0]'),
    ('{"monad": {"kind": "identity"}, "points": 2, "labels": ["a", "a"], "converges": []}', 'labels'),
])
def test_schema_errors(text, field):
    with pytest.raises(ParseError) as info:
        parse_space_file(text)
    assert info.value.field == field


def test_syntax_error_has_line():
    with pytest.raises(ParseError) as info:
        parse_space_file('{\n  "monad": \n}')
    assert info.value.line == 3


def test_parse_monad_spec(tmp_path):
    assert parse_monad_spec('powerset') == PowersetMonad()
    inline = parse_monad_spec('{"kind": "monoid_action", "monoid": {"size": 2, "unit": 0, "table": [[0, 1], [1, 1]]}}')
    assert inline.kind == MonadKind.MONOID_ACTION
    assert parse_monad_spec(_data('fix_m2.json')) == inline

    path = tmp_path / 'monad.json'
    path.write_text('{"kind": "t1"}', encoding='utf-8')
    assert parse_monad_spec(str(path)).kind == MonadKind.T1

    with pytest.raises(ParseError):
        parse_monad_spec(str(tmp_path / 'missing.json'))


# commands

CHECKED = sorted(MAKERS) + ['not_a_space']


@pytest.mark.parametrize('name, summary', [
    ('fix_plu', 'R ✓ T ✓ K ✗ H ✓ A ✗ C ✓ F ✓'),
    ('fix_ord', 'R ✓ T ✓ K ✓ H ✗ A ✗ C ✗ F ✗'),
    ('fix_ord_eq', 'R ✓ T ✓ K ✓ H ✗ A ✗ C ✓ F ✗'),
    ('fix_plu3', 'R ✓ T ✓ K ✗ H ✓ A ✗ C ✗ F ✓'),
    ('fix_m2', 'R ✓ T ✓ K ✗ H ✓ A ✗ C ✗ F ✓'),
    ('not_a_space', 'R ✗ T ✓ K ✗ H ✓ A ✗ C ? F ?'),
])
def test_check(name, summary):
    assert run_command(['check', _data(name + '.json')]) == (0, summary)


@pytest.mark.parametrize('name', CHECKED)
def test_check_json(name):
    code, out = run_command(['check', '--json', _data(name + '.json')])
    assert code == 0
    payload = json.loads(out)
    assert payload == json.loads(_golden('check_{0}.json'.format(name)))
    assert list(payload['conditions']) == ['R', 'T', 'K', 'H', 'A', 'C', 'F']


@pytest.mark.parametrize('name', sorted(MAKERS))
@pytest.mark.parametrize('kind', ReflectionKind.ALL)
def test_reflect(name, kind):
    golden = _golden('reflect_{0}_{1}.txt'.format(kind.lower(), name))
    assert run_command(['reflect', '--into', kind, _data(name + '.json')]) == (0, golden)

    code, out = run_command(['reflect', '--into', kind, '--json', _data(name + '.json')])
    assert code == 0
    payload = json.loads(out)
    assert list(payload) == ['ok', 'kind', 'unit', 'reflected']
    assert payload['ok'] is True
    assert payload['kind'] == kind
    unit, reflected = golden.split('\n')
    assert 'unit: {0}'.format(json.dumps(payload['unit'])) == unit
    assert payload['reflected'] == json.loads(reflected)


def test_reflect_json():
    code, out = run_command(['reflect', '--into', 'H', '--json', _data('fix_ord.json')])
    assert code == 0
    payload = json.loads(out)
    assert payload['kind'] == 'H'
    assert payload['unit'] == [0, 0, 1]
    assert payload['reflected']['points'] == 2


@pytest.mark.parametrize('kind', ReflectionKind.ALL)
def test_reflect_needs_a_space(kind):
    code, out = run_command(['reflect', '--into', kind, '--json', _data('not_a_space.json')])
    assert code == 1
    assert json.loads(out) == {
        'ok': False,
        'error': {'type': 'LawViolation', 'message': '(R) fails at point 1'},
    }

    code, out = run_command(['reflect', '--into', kind, _data('not_a_space.json')])
    assert (code, out) == (1, 'error: (R) fails at point 1')


@pytest.mark.parametrize('kind', [ReflectionKind.B, ReflectionKind.C, ReflectionKind.F, ReflectionKind.CF])
def test_reflect_over_budget(kind):
    code, out = run_command(['reflect', '--into', kind, '--budget', '16', '--json', _data('powerset3.json')])
    assert code == 2
    payload = json.loads(out)
    assert payload['ok'] is False
    assert payload['error']['type'] == 'BudgetExceeded'
    assert (payload['error']['required'], payload['error']['budget']) == (256, 16)

    assert run_command(['reflect', '--into', kind, '--budget', '16', _data('powerset3.json')])[0] == 2


def test_extend():
    assert run_command(['extend', _data('fix_ord.json')]) == (0, _golden('extend_fix_ord.txt'))

    code, out = run_command(['extend', '--json', _data('fix_plu.json')])
    assert code == 0
    pairs = json.loads(out)['pairs']
    assert [[[0], [1]], [0, 1]] in pairs
    assert [[], []] in pairs


def test_extend_over_budget():
    code, out = run_command(['extend', '--budget', '16', '--json', _data('powerset3.json')])
    assert code == 2
    error = json.loads(out)['error']
    assert error['type'] == 'BudgetExceeded'
    assert (error['required'], error['budget']) == (256, 16)

    assert run_command(['extend', '--budget', '16', _data('powerset3.json')])[0] == 2


def test_product():
    code, out = run_command(['product', _data('fix_ord.json'), _data('point.json')])
    assert code == 0
    assert out == _golden('product_fix_ord_point.txt')

    code, out = run_command(['product', '--json', _data('fix_ord.json'), _data('fix_plu.json')])
    assert code == 1
    assert json.loads(out)['error']['type'] == 'IncompatibleMonads'


def test_laws():
    code, out = run_command(['laws', '--monad', 'identity', '--max-n', '2'])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 8
    assert all(line.endswith(': pass') for line in lines)

    code, out = run_command(['laws', '--json', '--monad', _data('fix_m2.json')])
    assert code == 0
    payload = json.loads(out)
    assert payload['ok'] and payload['passed']
    assert payload['max_n'] == 3


def test_laws_reject_non_commutative_monoid():
    spec = '{"kind": "monoid_action", "monoid": {"size": 3, "unit": 0, "table": [[0, 1, 2], [1, 1, 1], [2, 2, 2]]}}'
    code, out = run_command(['laws', '--json', '--monad', spec])
    assert code == 1
    assert json.loads(out)['error']['type'] == 'LawViolation'


@pytest.mark.parametrize('name', CHECKED)
def test_dot(name):
    golden = _golden('dot_{0}.dot'.format(name))
    assert run_command(['dot', _data(name + '.json')]) == (0, golden)

    code, out = run_command(['dot', '--json', _data(name + '.json')])
    assert code == 0
    assert json.loads(out) == {'ok': True, 'dot': golden + '\n'}


def test_dot_is_deterministic(fix_plu3):
    assert emit_dot(fix_plu3) == emit_dot(parse_space_file(serialize_space(fix_plu3)))


@pytest.mark.parametrize('argv', [
    ['reflect', '--into', 'X', 'file.json'],
    ['frobnicate'],
    ['product', 'only-one.json'],
])
def test_usage_errors(argv):
    code, out = run_command(argv)
    assert code == 1
    assert out.startswith('error: ')


def test_missing_file_json():
    code, out = run_command(['check', '--json', _data('missing.json')])
    assert code == 1
    payload = json.loads(out)
    assert payload['ok'] is False
    assert payload['error']['type'] == 'ParseError'


def test_main_prints(capsys):
    assert main(['check', _data('fix_plu.json')]) == 0
    captured = capsys.readouterr()
    assert captured.out == 'R ✓ T ✓ K ✗ H ✓ A ✗ C ✓ F ✓\n'

    assert main(['extend', '--budget', '16', _data('powerset3.json')]) == 2
    captured = capsys.readouterr()
    assert captured.out == ''
    assert captured.err.startswith('error: ')

    assert main([]) == 0
    assert 'usage: laxtop' in capsys.readouterr().out


def test_verbose_logs(caplog):
    with caplog.at_level('DEBUG', logger='laxtop'):
        assert run_command(['reflect', '-v', '--into', 'B', _data('fix_plu.json')])[0] == 0
    assert any('algebra reflection' in record.getMessage() for record in caplog.records)
