import sys

from typing import Iterable, Iterator, Optional, TextIO

__all__ = ['progressbar']

def progressbar(
    iterable: Iterable, 
    prefix: str = '', 
    suffix: str = '', 
    decimals: int = 1, 
    length: int = 50, 
    fill: str = '█', 
    stream: Optional[TextIO] = None
    ) -> Iterator:
    '''

    Call in a loop to draw a terminal progress bar on `stream` (standard
    error by default, so it never mixes with results on standard output)

    Args::
        iterable (iterable): sized iterable to loop through
        prefix (str, optional): prefix string
        suffix (str, optional): suffix string
        decimals (int, optional): positive number of decimals in percent complete
        length (int, optional): character length of bar
        fill (str, optional): bar fill character
        stream (TextIO, optional): where to draw. Defaults to None (sys.stderr)
    '''

    stream = stream or sys.stderr

    total = max(len(iterable), 1)

    def print_progress(iteration):
        percent = ("{0:." + str(decimals) + "f}").format(100 * (iteration / float(total)))
        filled = int(length * iteration // total)
        bar = fill * filled + '-' * (length - filled)
        stream.write(f'\r{prefix} |{bar}| {percent}% {suffix}')
        stream.flush()

    print_progress(0)

    for i, item in enumerate(iterable):
        yield item
        print_progress(i + 1)

    stream.write('\n')
