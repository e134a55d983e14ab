''' Smoothed meters and a loop logger, reworked from torchvision's
references/detection/utils.py to run on numpy and the logging module '''

import datetime
import logging
import time
import numpy

from collections import defaultdict, deque
from typing import Iterable, Iterator, Optional

__all__ = ['SmoothedValue', 'MetricLogger']

logger = logging.getLogger('cutenum')


class SmoothedValue(object):
    """Track a series of values and provide access to smoothed values over a
    window or the global series average.
    """

    def __init__(self, window_size=20, fmt=None):
        if fmt is None:
            fmt = "{median:.4f} ({global_avg:.4f})"
        self.deque = deque(maxlen=window_size)
        self.total = 0.0
        self.count = 0
        self.fmt = fmt

    def update(self, value, n=1):
        self.deque.append(value)
        self.count += n
        self.total += value * n

    @property
    def median(self):
        return float(numpy.median(numpy.asarray(self.deque, dtype=numpy.float64)))

    @property
    def avg(self):
        return float(numpy.mean(numpy.asarray(self.deque, dtype=numpy.float64)))

    @property
    def global_avg(self):
        return self.total / self.count if self.count else 0.0

    @property
    def max(self):
        return max(self.deque)

    @property
    def value(self):
        return self.deque[-1]

    def __str__(self):
        if not self.deque:
            return '-'
        return self.fmt.format(
            median=self.median,
            avg=self.avg,
            global_avg=self.global_avg,
            max=self.max,
            value=self.value)


class MetricLogger(object):
    ''' Holds named meters and logs their state while iterating a loop '''

    def __init__(self, delimiter="\t"):
        self.meters = defaultdict(SmoothedValue)
        self.delimiter = delimiter

    def update(self, **kwargs):
        for k, v in kwargs.items():
            assert isinstance(v, (float, int)), \
                f'meter \'{k}\' must be a number, got {type(v)}'
            self.meters[k].update(v)

    def __getattr__(self, attr):
        if attr in self.meters:
            return self.meters[attr]
        if attr in self.__dict__:
            return self.__dict__[attr]
        raise AttributeError("'{}' object has no attribute '{}'".format(
            type(self).__name__, attr))

    def __str__(self):
        return self.delimiter.join(
            "{}: {}".format(name, str(meter)) for name, meter in self.meters.items())

    def emit(self, msg: str) -> None:
        ''' Where loop messages go; subclasses add file/CSV sinks '''
        logger.info(msg)

    def log_every(self, iterable: Iterable, print_freq: int, header: Optional[str] = None) -> Iterator:
        i = 0
        if not header:
            header = ''
        total = len(iterable)
        start_time = time.time()
        end = time.time()
        iter_time = SmoothedValue(fmt='{avg:.4f}')
        space_fmt = ':' + str(len(str(total))) + 'd'
        log_msg = self.delimiter.join([
            header,
            '[{0' + space_fmt + '}/{1}]',
            'eta: {eta}',
            '{meters}',
            'time: {time}'
        ])
        for obj in iterable:
            yield obj
            iter_time.update(time.time() - end)
            if i % print_freq == 0 or i == total - 1:
                eta_seconds = iter_time.global_avg * (total - i)
                eta_string = str(datetime.timedelta(seconds=int(eta_seconds)))
                self.emit(log_msg.format(
                    i + 1, total, eta=eta_string,
                    meters=str(self), time=str(iter_time)))
                self._on_log(header, i, total, eta_string, iter_time)
            i += 1
            end = time.time()
        total_time = time.time() - start_time
        total_time_str = str(datetime.timedelta(seconds=int(total_time)))
        self.emit('{} Total time: {} ({:.4f} s / it)'.format(
            header, total_time_str, total_time / max(total, 1)))

    def _on_log(self, header, i, total, eta, iter_time) -> None:
        pass
