import json
import pytest

from cutenum import cli
from cutenum.cli import RunConfig, load_config, main, run
from cutenum.errors import InternalInvariantError
from cutenum.graphs import complete_graph, random_connected_graph, serialize_graph
from cutenum.uncross import Lemma1Report

P3 = '3 2\n0 1 1\n1 2 1\n'
K3 = '3 3\n0 1 1\n1 2 1\n0 2 1\n'
C8 = '8 8\n' + ''.join(f'{i} {(i + 1) % 8} 1\n' for i in range(8))


def test_mincut_text(write_graph_file, capsys):
    assert main(['mincut', write_graph_file(P3)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == 'lambda=1'
    assert 'cut 1,2 value=1' in out

def test_mincut_prints_input_units(write_graph_file, capsys):
    path = write_graph_file('3 2\n0 1 0.5\n1 2 1.25\n')
    assert main(['mincut', path]) == 0
    assert capsys.readouterr().out.splitlines()[0] == 'lambda=0.5'

    assert main(['mincut', path, '--output', 'json']) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload['lambda'] == 50
    assert payload['stats']['weight_scale'] == 100

def test_enumerate_json(write_graph_file, capsys):
    assert main(['enumerate', write_graph_file(K3), '--alpha', '1', '--output', 'json']) == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {'lambda', 'alpha', 'cuts', 'witness', 'stats'}
    assert payload['lambda'] == 2
    assert payload['alpha'] == '1'
    assert payload['witness'] is None
    assert payload['cuts'] == [
        {'side': [1], 'value': 2}, {'side': [1, 2], 'value': 2}, {'side': [2], 'value': 2}]
    assert payload['stats']['count'] == 3

def test_enumerate_is_deterministic(write_graph_file, capsys):
    path = write_graph_file(serialize_graph(random_connected_graph(7, seed=9)))
    outputs = []
    for _ in range(2):
        assert main(['enumerate', path, '--alpha', '3/2', '--output', 'json']) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]

    assert main(['enumerate', path, '--alpha', '3/2', '--output', 'json', '--threads', '2']) == 0
    assert json.loads(capsys.readouterr().out)['cuts'] == json.loads(outputs[0])['cuts']

def test_verify_match(write_graph_file, capsys):
    path = write_graph_file(serialize_graph(random_connected_graph(8, seed=4)))
    assert main(['verify', path, '--alpha', '2']) == 0
    assert 'MATCH' in capsys.readouterr().out.splitlines()

def test_witness_subcommand(write_graph_file, capsys):
    assert main(['witness', write_graph_file(P3), '--cut', '0', '--output', 'json']) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload['witness']['S'] == [0]
    assert payload['witness']['T'] == [1]
    assert payload['witness']['size_bound_holds'] is True
    assert payload['cuts'] == [{'side': [1, 2], 'value': 1}]

    assert main(['witness', write_graph_file(P3), '--cut', '1,2']) == 0
    out = capsys.readouterr().out
    assert 'S=1' in out.splitlines()
    assert 'size_bound=3 holds=yes' in out

def test_check_lemma_subcommand(write_graph_file, capsys):
    assert main(['check-lemma', write_graph_file(C8), '--trials', '200', '--seed', '1']) == 0
    out = capsys.readouterr().out
    assert 'violations=0' in out

def test_check_lemma_stops_at_target(write_graph_file, capsys):
    assert main(['check-lemma', write_graph_file(C8), '--trials', '200', '--seed', '1',
        '--target', '1', '--output', 'json']) == 0
    stats = json.loads(capsys.readouterr().out)['stats']
    assert stats['hits'] == 1
    assert stats['trials'] <= 200

def test_check_lemma_reports_averaging_failures(write_graph_file, capsys, monkeypatch):
    monkeypatch.setattr(Lemma1Report, 'averaging_bound_holds', lambda self, d_u: False)
    assert main(['check-lemma', write_graph_file(C8), '--trials', '200', '--seed', '1']) == 1
    out = capsys.readouterr().out
    assert 'violations=0' not in out

def test_internal_failure_has_its_own_exit_code(write_graph_file, capsys, monkeypatch):
    def broken(*args, **kwargs):
        raise InternalInvariantError('flow value differs from cut value')

    monkeypatch.setattr(cli, 'global_min_cut', broken)
    assert main(['mincut', write_graph_file(P3)]) == 4
    assert 'internal error: flow value differs' in capsys.readouterr().err

def test_bench_subcommand(write_graph_file, capsys):
    path = write_graph_file(serialize_graph(complete_graph(5)))
    assert main(['bench', path, '--trials', '50', '--output', 'json']) == 0
    stats = json.loads(capsys.readouterr().out)['stats']
    assert stats['contraction_subset'] is True
    assert stats['contraction_trials'] == 50

@pytest.mark.parametrize('args', [
    ['enumerate', '{path}', '--alpha', '0.5'],
    ['enumerate', '{path}', '--alpha', 'x'],
    ['witness', '{path}'],
    ['witness', '{path}', '--cut', '0,1,2'],
    ['witness', '{path}', '--cut', '7'],
    ['enumerate', '{path}', '--threads', '0'],
])
def test_domain_errors_exit_2(write_graph_file, capsys, args):
    path = write_graph_file(P3)
    assert main([a.format(path=path) for a in args]) == 2
    assert capsys.readouterr().err.startswith('error:')

def test_input_errors_exit_2(write_graph_file, tmp_path, capsys):
    assert main(['mincut', str(tmp_path / 'missing.txt')]) == 2
    assert main(['mincut', write_graph_file('3 2\n0 1 1\n')]) == 2
    assert 'error:' in capsys.readouterr().err
    assert main(['mincut', write_graph_file('4 2\n0 1 1\n2 3 1\n', 'split.txt')]) == 2

def test_budget_exit_3(write_graph_file, capsys):
    path = write_graph_file(serialize_graph(complete_graph(6)))
    assert main(['enumerate', path, '--budget', '10']) == 3
    assert 'budget' in capsys.readouterr().err
    assert main(['enumerate', path, '--budget', '10', '--force']) == 0

def test_bad_flags_exit_2(write_graph_file):
    with pytest.raises(SystemExit) as excinfo:
        main(['enumerate', write_graph_file(P3), '--engine', 'Nope'])
    assert excinfo.value.code == 2

def test_yaml_config_and_overrides(write_graph_file, tmp_path, capsys):
    config = tmp_path / 'run.yaml'
    config.write_text("alpha: '2'\noutput_format: json\n", encoding='utf-8')
    path = write_graph_file(P3)

    cfg = load_config(['enumerate', path, '--config', str(config)])
    assert isinstance(cfg, RunConfig)
    assert (cfg.alpha, cfg.output_format, cfg.seed) == ('2', 'json', 0)

    assert main(['enumerate', path, '--config', str(config)]) == 0
    assert len(json.loads(capsys.readouterr().out)['cuts']) == 3
    assert main(['enumerate', path, '--config', str(config), '--alpha', '1']) == 0
    assert len(json.loads(capsys.readouterr().out)['cuts']) == 2

def test_invalid_config_exit_2(write_graph_file, tmp_path):
    config = tmp_path / 'bad.yaml'
    config.write_text('budget: lots\n', encoding='utf-8')
    assert main(['enumerate', write_graph_file(P3), '--config', str(config)]) == 2

def test_run_with_explicit_streams(write_graph_file, capsys):
    import io
    out, err = io.StringIO(), io.StringIO()
    cfg = RunConfig(input_path=write_graph_file(K3), subcommand='mincut')
    assert run(cfg, stdout=out, stderr=err) == 0
    assert out.getvalue().startswith('lambda=2\n')
    assert err.getvalue() == ''
