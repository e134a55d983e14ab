import io
import logging
import os
import pytest

from fractions import Fraction

from cutenum.enumeration import PAIR_FILTERS
from cutenum.flows import FLOW_ENGINES
from cutenum.utils import CustomLogger, MetricLogger, Registry, SmoothedValue, format_fraction, format_weight, \
    make_rng, progressbar, setup_logging, timer
from cutenum.vizual import PlotRuntime


def test_registry():
    registry = Registry('things')

    @registry.register()
    class Thing:
        def __init__(self, size: int = 1) -> None:
            self.size = size

    assert 'Thing' in registry
    assert registry.registry_names == ['Thing']
    assert registry.build('Thing', size=3).size == 3
    assert len(registry) == 1
    with pytest.raises(KeyError, match='Thing'):
        registry['Other']
    with pytest.raises(AssertionError):
        registry.register()(Thing)

def test_builtin_registries():
    assert set(FLOW_ENGINES.registry_names) == {'Dinic', 'PushRelabel'}
    assert set(PAIR_FILTERS.registry_names) == {'NoFilter', 'SubsumedPairFilter'}

@pytest.mark.parametrize('value, scale, text', [
    (30, 10, '3'),
    (15, 10, '1.5'),
    (5, 100, '0.05'),
    (125, 100, '1.25'),
    (7, 1, '7'),
    (0, 10, '0'),
])
def test_format_weight(value, scale, text):
    assert format_weight(value, scale) == text

def test_format_fraction():
    assert format_fraction(Fraction(3, 2)) == '3/2'
    assert format_fraction(Fraction(4, 2)) == '2'

def test_make_rng_is_seeded():
    assert make_rng(4).integers(0, 1000, size=5).tolist() == make_rng(4).integers(0, 1000, size=5).tolist()

def test_timer_keeps_the_result(caplog, monkeypatch):
    @timer('square')
    def square(x):
        return x * x

    monkeypatch.setattr(logging.getLogger('cutenum'), 'propagate', True)
    with caplog.at_level(logging.DEBUG, logger='cutenum.timer'):
        assert square(3) == 9
    assert any('[SQUARE]' in rec.getMessage() for rec in caplog.records)

def test_progressbar_yields_everything():
    stream = io.StringIO()
    assert list(progressbar(range(4), 'work', stream=stream)) == [0, 1, 2, 3]
    assert '100.0%' in stream.getvalue()

def test_setup_logging_writes_to_stream():
    stream = io.StringIO()
    logger = setup_logging(logging.INFO, stream=stream)
    logging.getLogger('cutenum.test').info('hello')
    assert stream.getvalue().rstrip().endswith(' - hello')
    # a second call replaces the handler instead of stacking another one
    setup_logging(logging.INFO, stream=stream)
    assert sum(getattr(h, '_cutenum_stream', False) for h in logger.handlers) == 1

def test_smoothed_value():
    meter = SmoothedValue(window_size=3)
    for v in (1, 2, 3, 10):
        meter.update(v)
    assert meter.median == 3
    assert meter.value == 10
    assert meter.global_avg == 4

def test_metric_logger_log_every():
    stream = io.StringIO()
    setup_logging(logging.INFO, stream=stream)
    metric_logger = MetricLogger(delimiter=' ')
    for i in metric_logger.log_every(list(range(5)), print_freq=2, header='[LOOP]'):
        metric_logger.update(cuts=i)
    assert str(metric_logger).startswith('cuts: ')
    assert '[LOOP]' in stream.getvalue()
    with pytest.raises(AttributeError):
        metric_logger.missing

def test_custom_logger_writes_files(tmp_path):
    custom = CustomLogger(delimiter=' ', filename='sweep', work_dir=str(tmp_path))
    for i in custom.log_every(list(range(3)), print_freq=1, header='[SWEEP]'):
        custom.update(cuts=i, enumerate_seconds=0.1 * i)

    csv_path = os.path.join(str(tmp_path), custom.logfilename + '.csv')
    log_path = os.path.join(str(tmp_path), custom.logfilename + '.log')
    assert os.path.exists(csv_path) and os.path.exists(log_path)
    with open(csv_path) as f:
        lines = f.read().splitlines()
    assert lines[0].split(',')[-2:] == ['cuts', 'enumerate_seconds']
    assert len(lines) == 4

def test_plot_runtime(tmp_path):
    plot = PlotRuntime()
    plot.feed([4, 6, 8], [0.01, 0.05, 0.2], label='scan')
    plot.feed([4, 6, 8], [0.02, 0.03, 0.04], label='contraction')
    path = tmp_path / 'runtime.png'
    plot.save(str(path))
    assert path.stat().st_size > 0
