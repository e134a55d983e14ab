import os

from datetime import date, datetime
from fractions import Fraction
from typing import Tuple

__all__ = ['mkdir', 'current_date', 'get_date_time', 'format_fraction', 'format_weight']

def mkdir(path: str) -> None:
    ''' To make a directory (and its parents) if missing '''
    os.makedirs(path, exist_ok=True)

def current_date() -> str:
    ''' To get current date in YYYYMMDD format '''
    return date.today().strftime('%Y%m%d')

def get_date_time() -> Tuple[str, str]:
    ''' To get current date and time in "d/m/Y H:M:S" format '''
    now = datetime.now()
    return now.strftime('%d/%m/%Y'), now.strftime('%H:%M:%S')

def format_fraction(value: Fraction) -> str:
    ''' Exact "p/q" string, or "p" for integers '''
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'

def format_weight(value: int, scale: int = 1) -> str:
    ''' Render a scaled integer weight back in input units.

    `scale` is a power of ten, so the decimal expansion is finite and exact.

    Args:
        value (int): scaled integer weight
        scale (int, optional): the graph's weight scale. Defaults to 1.

    Returns:
        str
    '''

    if scale == 1:
        return str(value)

    digits = len(str(scale)) - 1
    sign = '-' if value < 0 else ''
    whole, frac = divmod(abs(value), scale)
    frac_str = str(frac).rjust(digits, '0').rstrip('0')
    if not frac_str:
        return f'{sign}{whole}'
    return f'{sign}{whole}.{frac_str}'
