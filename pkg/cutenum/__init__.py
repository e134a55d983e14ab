from cutenum import errors
from cutenum import utils
from cutenum import graphs
from cutenum import flows
from cutenum import enumeration
from cutenum import witness
from cutenum import uncross
from cutenum import vizual

__version__ = '0.1.0'
