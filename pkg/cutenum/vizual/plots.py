import matplotlib
matplotlib.use('Agg')

import matplotlib.pyplot as plt
import random
import itertools

from typing import List, Optional

__all__ = ['PlotRuntime']

class PlotRuntime:
    ''' Runtime versus graph size, one curve per method (e.g. the pair scan
    and the contraction baseline) '''

    def __init__(
        self,
        figsize: tuple = (7,5), 
        legend: bool = True, 
        logy: bool = True,
        seed: int = 1
        ) -> None:
        
        self.figsize = figsize
        self.legend = legend
        self.logy = logy
        self.seed = seed

        self._data = []
        self._labels = []

    def feed(self, sizes: List[int], seconds: List[float], label: Optional[str] = None) -> None:
        self._data.append((sizes, seconds))
        self._labels.append(label)
    
    def plot(self) -> None:
        
        random.seed(self.seed)
        colors = self._gen_colors(len(self._data))
        
        fig = plt.figure(figsize=self.figsize)
        ax = fig.add_subplot(1,1,1)
        ax.set_xlabel('Number of vertices')
        ax.set_ylabel('Time [s]')
        if self.logy:
            ax.set_yscale('log')

        markers = self._markers
        for i, (sizes, seconds) in enumerate(self._data):
            ax.plot(sizes, seconds,
                color=colors[i],
                marker=next(markers),
                alpha=0.7,
                label=self._labels[i])
        
        if self.legend:
            ax.legend(loc='upper left')
        
        self.fig = fig
    
    def save(self, path: str) -> None:
        if 'fig' not in self.__dict__:
            self.plot()

        self.fig.savefig(path, dpi=150, format='png', bbox_inches='tight')
        plt.close(self.fig)

    def _gen_colors(self, n: int) -> list:

        colors = ["#"+''.join([random.choice('0123456789ABCDEF') for j in range(6)])
            for i in range(n)]

        return colors
    
    @property
    def _markers(self) -> itertools.cycle:
        return itertools.cycle(('^','o','s','x','D','v','>'))
