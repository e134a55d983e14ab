import hydra
import logging
import os

from omegaconf import DictConfig

from cutenum.uncross import harvest_lemma1
from cutenum.utils.logger import setup_logging
from cutenum.utils.seed import set_seed

@hydra.main(config_path='../configs', config_name='config')
def main(cfg: DictConfig) -> None:

    cfg = cfg.harvest

    print(f'Setting the seed to {cfg.seed}')
    set_seed(cfg.seed)
    setup_logging(logging.INFO)

    print(f'Harvesting {cfg.target} uncrossing instances ({cfg.mode} mode) ...')
    result = harvest_lemma1(
        seed = cfg.seed,
        target = cfg.target,
        max_trials = cfg.max_trials,
        n_range = tuple(cfg.n_range),
        p_choices = tuple(int(p) for p in cfg.p_choices),
        mode = cfg.mode,
        engine = cfg.engine
        )

    df = result.frame()
    df.to_csv(cfg.outputs.csv, index=False)

    print(f'{result.hits} hits in {result.trials} trials, {len(result.violations)} violations')
    if result.hits:
        print(df.groupby(['mode', 'p']).size().to_string())
    print(f'Reports saved to {os.path.join(os.getcwd(), cfg.outputs.csv)}')

if __name__ == '__main__':
    main()
