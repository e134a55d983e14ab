import hydra
import logging
import os
import time
import pandas

from fractions import Fraction
from omegaconf import DictConfig

from cutenum.enumeration import brute_force_cuts, contraction_baseline, enumerate_approx_min_cuts
from cutenum.graphs import random_connected_graph
from cutenum.witness import check_size_bound, find_witness
from cutenum.utils.logger import CustomLogger, setup_logging
from cutenum.utils.seed import set_seed
from cutenum.utils.useful_funcs import format_fraction, mkdir
from cutenum.vizual import PlotRuntime

def _jobs(cfg: DictConfig) -> list:
    jobs = []
    for n in cfg.graphs.sizes:
        for i in range(cfg.graphs.per_size):
            graph_seed = cfg.seed * 10_000 + n * 100 + i
            for alpha in cfg.alphas:
                jobs.append((int(n), graph_seed, Fraction(str(alpha))))
    return jobs

def _witness_violations(g, result, engine: str) -> int:
    violations = 0
    for cut in result.cuts:
        w = find_witness(g, cut.side, lam=result.lam, engine=engine)
        if not check_size_bound(g, cut.side, w):
            violations += 1
    return violations

def _plot(df: pandas.DataFrame, path: str) -> None:
    mkdir(os.path.dirname(path) or '.')
    times = df.groupby('n')[['enumerate_seconds', 'contraction_seconds']].mean()
    plot = PlotRuntime()
    plot.feed(times.index.tolist(), times['enumerate_seconds'].tolist(), label='terminal-pair scan')
    plot.feed(times.index.tolist(), times['contraction_seconds'].tolist(), label='random contraction')
    plot.save(path)

@hydra.main(config_path='../configs', config_name='config')
def main(cfg: DictConfig) -> None:

    cfg = cfg.sweep

    # Set the seed
    print(f'Setting the seed to {cfg.seed}')
    set_seed(cfg.seed)
    setup_logging(logging.INFO)

    jobs = _jobs(cfg)
    print(f'Sweeping {len(jobs)} (graph, alpha) instances ...')

    metric_logger = CustomLogger(delimiter=' ', filename='sweep', work_dir=os.getcwd())
    rows = []
    for n, graph_seed, alpha in metric_logger.log_every(jobs, cfg.print_freq, header='[SWEEP]'):

        g = random_connected_graph(n, seed=graph_seed, 
            weight_range=tuple(cfg.graphs.weight_range), density=cfg.graphs.density)

        start = time.perf_counter()
        result = enumerate_approx_min_cuts(g, alpha, 
            engine=cfg.enumeration.engine, 
            workers=cfg.enumeration.threads,
            pair_filter=cfg.enumeration.pair_filter,
            force=True
            )
        enum_seconds = time.perf_counter() - start

        expected = brute_force_cuts(g, alpha)
        match = set(result.cuts) == expected

        violations = _witness_violations(g, result, cfg.enumeration.engine) if cfg.witness else 0

        start = time.perf_counter()
        found = contraction_baseline(g, alpha, trials=cfg.contraction.trials, seed=graph_seed, lam=result.lam)
        contraction_seconds = time.perf_counter() - start

        metric_logger.update(cuts=len(result.cuts), enumerate_seconds=enum_seconds)

        rows.append(dict(
            n=n, m=g.m, graph_seed=graph_seed, alpha=format_fraction(alpha), lam=result.lam,
            cuts=len(result.cuts), brute_force_cuts=len(expected), match=match,
            pairs_scanned=result.pairs_scanned, flow_calls=result.flow_calls,
            witness_violations=violations, contraction_cuts=len(found),
            contraction_subset=found <= set(result.cuts),
            enumerate_seconds=enum_seconds, contraction_seconds=contraction_seconds
            ))

    df = pandas.DataFrame(rows)
    df.to_csv(cfg.outputs.csv, index=False)
    _plot(df, cfg.outputs.plot)

    mismatches = int((~df['match']).sum())
    print(f'{len(df)} instances, {mismatches} mismatches, '
        f'{int(df["witness_violations"].sum())} witness size violations, '
        f'{int((~df["contraction_subset"]).sum())} contraction subset failures')
    print(f'Results saved to {os.path.join(os.getcwd(), cfg.outputs.csv)}')

if __name__ == '__main__':
    main()
