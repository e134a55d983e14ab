import time
import datetime
import logging

from functools import wraps

__all__ = ['timer']

logger = logging.getLogger('cutenum.timer')

def timer(text=None):
    ''' Decorator to log function's elapsed time (DEBUG level) '''
    def inner(function):
        @wraps(function)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            out = function(*args, **kwargs)
            elapsed = datetime.timedelta(seconds=time.perf_counter() - start)
            if text is not None:
                logger.debug(f'[{text.upper()}] - {function.__name__} - Elapsed time : {elapsed}')
            else:
                logger.debug(f'{function.__name__} - Elapsed time : {elapsed}')
            return out
        return wrapper
    return inner
