import argparse
import os

from cutenum.graphs import complete_graph, cycle_graph, path_graph, random_connected_graph, \
    tightness_instance, write_graph
from cutenum.graphs.types import vertices_of
from cutenum.utils.progress import progressbar
from cutenum.utils.useful_funcs import mkdir

parser = argparse.ArgumentParser(prog='make_graph', description='Write edge-list graph instances')

parser.add_argument('kind', type=str, choices=['path', 'cycle', 'complete', 'random', 'tightness'],
    help='graph family (str)')
parser.add_argument('n', type=int,
    help='number of vertices; for tightness, the alpha of the instance (int)')
parser.add_argument('dest', type=str,
    help='destination file, or directory when -count > 1 (str)')
parser.add_argument('-weight', type=int, default=1,
    help='edge weight of path, cycle and complete graphs (int). Defaults to 1')
parser.add_argument('-seed', type=int, default=0,
    help='seed of the first random graph (int). Defaults to 0')
parser.add_argument('-wmin', type=int, default=1,
    help='minimum random edge weight (int). Defaults to 1')
parser.add_argument('-wmax', type=int, default=10,
    help='maximum random edge weight (int). Defaults to 10')
parser.add_argument('-density', type=float, default=0.3,
    help='probability of each extra random edge (float). Defaults to 0.3')
parser.add_argument('-count', type=int, default=1,
    help='number of random graphs, with consecutive seeds (int). Defaults to 1')

args = parser.parse_args()

def _build(seed: int):
    if args.kind == 'path':
        return path_graph(args.n, args.weight)
    if args.kind == 'cycle':
        return cycle_graph(args.n, args.weight)
    if args.kind == 'complete':
        return complete_graph(args.n, args.weight)
    if args.kind == 'random':
        return random_connected_graph(args.n, seed=seed, 
            weight_range=(args.wmin, args.wmax), density=args.density)

    g, u = tightness_instance(args.n)
    print(f'U = {",".join(str(v) for v in vertices_of(u))}')
    return g

def main():

    if args.count == 1:
        write_graph(_build(args.seed), args.dest)
        return

    mkdir(args.dest)
    seeds = list(range(args.seed, args.seed + args.count))
    for seed in progressbar(seeds, 'Writing graphs', length=50):
        write_graph(_build(seed), os.path.join(args.dest, f'{args.kind}_n{args.n}_s{seed}.txt'))


if __name__ == '__main__':
    main()
