import csv
import logging
import os
import sys

from typing import List, Optional, TextIO

from .meters import MetricLogger
from .useful_funcs import current_date, get_date_time

__all__ = ['setup_logging', 'CustomLogger', 'CSVLogger']

LOG_FORMAT = '%(asctime)s - %(message)s'
DATE_FORMAT = '%d-%m-%Y %H:%M:%S'

def setup_logging(level: int = logging.WARNING, stream: Optional[TextIO] = None) -> logging.Logger:
    ''' Configure the package logger once. Diagnostics go to standard error
    (or `stream`), results to standard output. '''

    root = logging.getLogger('cutenum')
    root.setLevel(level)
    for handler in list(root.handlers):
        if getattr(handler, '_cutenum_stream', False):
            root.removeHandler(handler)

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))
    handler._cutenum_stream = True
    root.addHandler(handler)
    root.propagate = False
    return root


class CustomLogger(MetricLogger):
    ''' Loop logger that also writes a dated `.log` file and a `.csv` meter log
    into `work_dir` when a `filename` is given '''

    def __init__(self, delimiter: str = '\t', filename: Optional[str] = None, work_dir: Optional[str] = None):
        super(CustomLogger, self).__init__(delimiter)

        self.logger = None
        self.csvlogger = None
        if filename is not None:
            work_dir = work_dir or os.getcwd()
            self.logfilename = f'{current_date()}_{filename}'
            self.logger = self._create_logger(self.logfilename, work_dir)
            self.csvlogger = self._create_csv_logger(self.logfilename, work_dir)
            self._header_flag = True

    def emit(self, msg: str) -> None:
        super(CustomLogger, self).emit(msg)
        if self.logger is not None:
            self.logger.info(msg)

    def _on_log(self, header, i, total, eta, iter_time) -> None:
        if self.csvlogger is None:
            return

        if self._header_flag:
            # new header to add meters
            self.csvlogger.update_header([*self.csvlogger.csvheader, *self.meters.keys()])
            self._header_flag = False

        date, time = get_date_time()
        row = dict(date=date, time=time, header=header, iter=i + 1,
            total_iters=total, eta=eta, iter_time=str(iter_time))
        row.update({k: m.value for k, m in self.meters.items() if m.deque})
        self.csvlogger.add(row)

    def _create_logger(self, filename: str, directory: str) -> logging.Logger:
        ''' Method to create a file logger object '''
        logpath = os.path.join(directory, filename + '.log')
        handler = logging.FileHandler(logpath, 'a+')
        handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))

        file_logger = logging.getLogger(f'cutenum.files.{filename}')
        file_logger.setLevel(logging.INFO)
        file_logger.propagate = False
        if not file_logger.handlers:
            file_logger.addHandler(handler)

        return file_logger

    def _create_csv_logger(self, filename: str, directory: str) -> 'CSVLogger':
        csvheader = ['date', 'time', 'header', 'iter', 'total_iters', 'eta', 'iter_time']
        return CSVLogger(filename, directory, csvheader)


class CSVLogger:
    ''' Class for creating object to hold and save logs to CSV '''

    def __init__(self, filename: str, directory: str, header: List[str]):
        self.csvpath = os.path.join(directory, filename + '.csv')
        self.filename = filename
        self.directory = directory
        self.csvheader = list(header)

        if not os.path.exists(self.csvpath):
            self._write_header()

    def add(self, msg_dict: dict) -> None:
        ''' Add a log row to the CSV file '''
        with open(self.csvpath, 'a+', newline='') as csvfile:
            writer = csv.DictWriter(csvfile, fieldnames=self.csvheader, extrasaction='ignore')
            writer.writerow(msg_dict)

    def update_header(self, new_header: List[str]) -> None:
        ''' Update header, rewritten only while the file holds no rows '''
        self.csvheader = list(new_header)

        with open(self.csvpath, 'r', newline='') as rfile:
            n_rows = sum(1 for _ in csv.reader(rfile))

        if n_rows < 2:
            self._write_header()

    def _write_header(self) -> None:
        with open(self.csvpath, 'w', newline='') as csvfile:
            csv.DictWriter(csvfile, fieldnames=self.csvheader).writeheader()
