import argparse
import json
import logging
import sys
import time

from dataclasses import dataclass
from typing import List, Optional, Sequence, TextIO

from omegaconf import OmegaConf
from omegaconf.errors import OmegaConfBaseException

from .enumeration import DEFAULT_BUDGET, PAIR_FILTERS, brute_force_cuts, check_alpha, contraction_baseline, \
    enumerate_approx_min_cuts
from .errors import BudgetExceededError, DomainError, GraphParseError, InternalInvariantError
from .flows import FLOW_ENGINES, global_min_cut
from .graphs import Cut, Graph, as_mask, canonicalize, read_graph
from .uncross import harvest_on_graph
from .utils.logger import setup_logging
from .utils.useful_funcs import format_fraction, format_weight
from .witness import check_size_bound, find_witness

__all__ = ['RunConfig', 'build_parser', 'load_config', 'run', 'main']

logger = logging.getLogger('cutenum.cli')

SUBCOMMANDS = ('mincut', 'enumerate', 'witness', 'check-lemma', 'verify', 'bench')

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3, 4


@dataclass
class RunConfig:
    ''' Everything a CLI run depends on. Filled from an optional YAML file,
    then overridden by the flags given on the command line. '''

    input_path: str = ''
    subcommand: str = 'mincut'
    alpha: str = '1'
    cut_spec: Optional[str] = None
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    output_format: str = 'text'
    force: bool = False
    threads: int = 1
    engine: str = 'Dinic'
    pair_filter: str = 'NoFilter'
    trials: int = 100
    target: int = 100
    verbose: int = 0


class VerificationMismatch(Exception):
    ''' A cross-check disagreed; the report is still printed and the exit code is 1 '''

    def __init__(self, payload: dict, extra: List[str]) -> None:
        self.payload = payload
        self.extra = extra
        super(VerificationMismatch, self).__init__('verification mismatch')


def build_parser() -> argparse.ArgumentParser:

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('input_path', metavar='input', type=str,
        help='path to the edge-list graph file (str)')
    # SUPPRESS keeps unset flags out of the namespace so YAML values survive the merge
    common.add_argument('--alpha', type=str, default=argparse.SUPPRESS,
        help='approximation factor as "p/q" or a decimal, at least 1 (str). Defaults to 1')
    common.add_argument('--cut', dest='cut_spec', type=str, default=argparse.SUPPRESS,
        help='comma-separated vertex ids of one cut side, for witness (str)')
    common.add_argument('--seed', type=int, default=argparse.SUPPRESS,
        help='random seed (int). Defaults to 0')
    common.add_argument('--budget', type=int, default=argparse.SUPPRESS,
        help=f'maximum number of terminal pairs to scan (int). Defaults to {DEFAULT_BUDGET}')
    common.add_argument('--force', action='store_true', default=argparse.SUPPRESS,
        help='scan even when the pair budget is exceeded')
    common.add_argument('--output', dest='output_format', choices=('text', 'json'), default=argparse.SUPPRESS,
        help='output format (str). Defaults to text')
    common.add_argument('--threads', type=int, default=argparse.SUPPRESS,
        help='worker processes for the pair scan (int). Defaults to 1')
    common.add_argument('--engine', choices=FLOW_ENGINES.registry_names, default=argparse.SUPPRESS,
        help='max-flow engine (str). Defaults to Dinic')
    common.add_argument('--pair-filter', dest='pair_filter', choices=PAIR_FILTERS.registry_names,
        default=argparse.SUPPRESS, help='pair filter for the scan (str). Defaults to NoFilter')
    common.add_argument('--trials', type=int, default=argparse.SUPPRESS,
        help='contraction trials for bench, search trials for check-lemma (int). Defaults to 100')
    common.add_argument('--target', type=int, default=argparse.SUPPRESS,
        help='stop check-lemma after this many hypothesis-holding instances (int). Defaults to 100')
    common.add_argument('--config', type=str, default=None,
        help='YAML file with default values for the options above (str)')
    common.add_argument('-v', '--verbose', action='count', default=argparse.SUPPRESS,
        help='log progress to standard error, repeat for debug output')

    parser = argparse.ArgumentParser(prog='cutenum',
        description='Enumerate and certify approximate minimum cuts of weighted graphs')
    subparsers = parser.add_subparsers(dest='subcommand', metavar='command', required=True)
    helps = {
        'mincut': 'print λ and one minimum cut',
        'enumerate': 'list every cut of value at most α·λ',
        'witness': 'certify a cut with small terminal sets',
        'check-lemma': 'search and check uncrossing instances',
        'verify': 'compare enumeration with brute force (n <= 24)',
        'bench': 'time enumeration against random contraction'
        }
    for name in SUBCOMMANDS:
        subparsers.add_parser(name, parents=[common], help=helps[name])

    return parser

def load_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    ''' Parse flags, merge them over the optional YAML config and validate '''

    args = vars(build_parser().parse_args(argv))
    config_path = args.pop('config', None)

    cfg = OmegaConf.structured(RunConfig)
    if config_path is not None:
        cfg = OmegaConf.merge(cfg, OmegaConf.load(config_path))
    cfg = OmegaConf.merge(cfg, args)
    return OmegaConf.to_object(cfg)

def _parse_cut(spec: Optional[str], g: Graph) -> int:
    if not spec:
        raise DomainError('witness needs --cut with a comma-separated list of vertex ids')
    try:
        vertices = [int(tok) for tok in spec.split(',') if tok.strip()]
    except ValueError:
        raise DomainError(f'--cut must list integer vertex ids, got {spec!r}') from None
    mask = as_mask(vertices, g.n)
    if mask == 0 or mask == g.full:
        raise DomainError('--cut must be a non-empty proper subset of the vertices')
    return mask

def _payload(g: Graph, lam: Optional[int] = None, alpha=None, cuts: Sequence[Cut] = (),
    witness: Optional[dict] = None, **stats) -> dict:
    return {
        'lambda': lam,
        'alpha': format_fraction(alpha) if alpha is not None else None,
        'cuts': [c.as_dict() for c in cuts],
        'witness': witness,
        'stats': {'n': g.n, 'm': g.m, 'weight_scale': g.scale, **stats}
        }

def _cut_line(cut: Cut, scale: int) -> str:
    side = ','.join(str(v) for v in cut.vertices)
    return f'cut {side} value={format_weight(cut.value, scale)}'

def _text(payload: dict, extra: List[str]) -> str:
    scale = payload['stats']['weight_scale']
    lines = []
    if payload['lambda'] is not None:
        lines.append(f'lambda={format_weight(payload["lambda"], scale)}')
    if payload['alpha'] is not None:
        lines.append(f'alpha={payload["alpha"]}')
    for c in payload['cuts']:
        lines.append(_cut_line(Cut(as_mask(c['side'], payload['stats']['n']), c['value']), scale))
    lines.extend(extra)
    return '\n'.join(lines) + '\n'

def _mincut(g: Graph, cfg: RunConfig):
    result = global_min_cut(g, engine=cfg.engine)
    return _payload(g, lam=result.lam, cuts=[result.witness], flow_calls=result.flow_calls), []

def _enumerate(g: Graph, cfg: RunConfig):
    result = enumerate_approx_min_cuts(g, cfg.alpha, engine=cfg.engine, budget=cfg.budget,
        force=cfg.force, workers=cfg.threads, pair_filter=cfg.pair_filter)
    payload = _payload(g, lam=result.lam, alpha=result.alpha, cuts=result.cuts, count=len(result.cuts),
        k=result.k, pairs_scanned=result.pairs_scanned, pairs_skipped=result.skipped, flow_calls=result.flow_calls)
    extra = [f'count={len(result.cuts)} pairs_scanned={result.pairs_scanned} flow_calls={result.flow_calls}']
    return payload, extra

def _witness(g: Graph, cfg: RunConfig):
    u = _parse_cut(cfg.cut_spec, g)
    w = find_witness(g, u, engine=cfg.engine)
    holds = check_size_bound(g, u, w)
    payload = _payload(g, lam=w.lam, alpha=w.alpha_of_cut, cuts=[canonicalize(g, u)],
        witness={**w.as_dict(), 'size_bound_holds': holds})
    extra = [
        'S=' + ','.join(str(v) for v in w.as_dict()['S']),
        'T=' + ','.join(str(v) for v in w.as_dict()['T']),
        f'size_bound={w.size_bound} holds={"yes" if holds else "no"}'
        ]
    if not holds:
        raise VerificationMismatch(payload, extra)
    return payload, extra

def _check_lemma(g: Graph, cfg: RunConfig):
    result = harvest_on_graph(g, seed=cfg.seed, trials=cfg.trials, engine=cfg.engine, target=cfg.target)
    violations = result.violations
    payload = _payload(g, hits=result.hits, trials=result.trials, violations=len(violations),
        reports=[rec.report.as_dict() for rec in violations])
    extra = [f'hits={result.hits} trials={result.trials} violations={len(violations)}']
    if violations:
        raise VerificationMismatch(payload, extra)
    return payload, extra

def _verify(g: Graph, cfg: RunConfig):
    result = enumerate_approx_min_cuts(g, cfg.alpha, engine=cfg.engine, budget=cfg.budget,
        force=cfg.force, workers=cfg.threads, pair_filter=cfg.pair_filter)
    expected = brute_force_cuts(g, result.alpha)
    match = set(result.cuts) == expected
    payload = _payload(g, lam=result.lam, alpha=result.alpha, cuts=result.cuts,
        match=match, count=len(result.cuts), brute_force_count=len(expected))
    extra = ['MATCH' if match else 'MISMATCH']
    if not match:
        missing = sorted(expected - set(result.cuts), key=lambda c: c.sort_key)
        extra.extend(f'missing {_cut_line(c, g.scale)}' for c in missing)
        raise VerificationMismatch(payload, extra)
    return payload, extra

def _bench(g: Graph, cfg: RunConfig):
    alpha = check_alpha(cfg.alpha)

    start = time.perf_counter()
    result = enumerate_approx_min_cuts(g, alpha, engine=cfg.engine, budget=cfg.budget,
        force=cfg.force, workers=cfg.threads, pair_filter=cfg.pair_filter)
    enum_seconds = time.perf_counter() - start

    start = time.perf_counter()
    found = contraction_baseline(g, alpha, trials=cfg.trials, seed=cfg.seed, lam=result.lam)
    contraction_seconds = time.perf_counter() - start

    subset = found <= set(result.cuts)
    payload = _payload(g, lam=result.lam, alpha=alpha, cuts=result.cuts,
        enumerate_seconds=round(enum_seconds, 6), contraction_seconds=round(contraction_seconds, 6),
        contraction_trials=cfg.trials, contraction_cuts=len(found), contraction_subset=subset)
    extra = [
        f'enumerate: {len(result.cuts)} cuts in {enum_seconds:.3f}s',
        f'contraction: {len(found)} cuts in {contraction_seconds:.3f}s ({cfg.trials} trials)'
        ]
    if not subset:
        raise VerificationMismatch(payload, extra + ['MISMATCH'])
    return payload, extra

_HANDLERS = {
    'mincut': _mincut,
    'enumerate': _enumerate,
    'witness': _witness,
    'check-lemma': _check_lemma,
    'verify': _verify,
    'bench': _bench
    }

def _write(stdout: TextIO, cfg: RunConfig, payload: dict, extra: List[str]) -> None:
    if cfg.output_format == 'json':
        stdout.write(json.dumps(payload, indent=2) + '\n')
    else:
        stdout.write(_text(payload, extra))

def run(cfg: RunConfig, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    ''' Execute one subcommand and return its exit code.

    Args:
        cfg (RunConfig): run configuration
        stdout (TextIO, optional): result stream. Defaults to None (sys.stdout).
        stderr (TextIO, optional): diagnostics stream. Defaults to None (sys.stderr).

    Returns:
        int: 0 success, 1 verification mismatch, 2 input or domain error,
        3 pair budget exceeded, 4 internal invariant failure
    '''

    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    if cfg.subcommand not in _HANDLERS:
        stderr.write(f'error: unknown command {cfg.subcommand!r}\n')
        return EXIT_INPUT

    try:
        if cfg.threads < 1:
            raise DomainError(f'--threads must be at least 1, got {cfg.threads}')
        g = read_graph(cfg.input_path)
        logger.info(f'loaded {g} from {cfg.input_path}')
        payload, extra = _HANDLERS[cfg.subcommand](g, cfg)
    except VerificationMismatch as e:
        _write(stdout, cfg, e.payload, e.extra)
        return EXIT_MISMATCH
    except BudgetExceededError as e:
        stderr.write(f'error: {e}\n')
        return EXIT_BUDGET
    except InternalInvariantError as e:
        stderr.write(f'internal error: {e}\n')
        return EXIT_INTERNAL
    except (GraphParseError, DomainError, OSError) as e:
        stderr.write(f'error: {e}\n')
        return EXIT_INPUT

    _write(stdout, cfg, payload, extra)
    return EXIT_OK

def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = load_config(argv)
    except (OmegaConfBaseException, OSError) as e:
        sys.stderr.write(f'error: invalid configuration: {e}\n')
        return EXIT_INPUT

    level = {0: logging.WARNING, 1: logging.INFO}.get(cfg.verbose, logging.DEBUG)
    setup_logging(level)
    return run(cfg)


if __name__ == '__main__':
    sys.exit(main())
