import logging

from decimal import Decimal, InvalidOperation
from fractions import Fraction
from pathlib import Path
from typing import List, Tuple, Union

from ..errors import DomainError, GraphParseError, WeightOverflowError
from ..utils.useful_funcs import format_weight
from .graph import Graph
from .types import MAX_WEIGHT

__all__ = ['parse_graph', 'serialize_graph', 'read_graph', 'write_graph']

logger = logging.getLogger('cutenum.graphs')


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    ''' Non-blank, non-comment lines as (line number, tokens) '''
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        lines.append((number, stripped.split()))
    return lines

def _parse_int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f'{what} must be an integer, got {token!r}', line) from None

def _parse_weight(token: str, line: int) -> Decimal:
    try:
        w = Decimal(token)
    except InvalidOperation:
        raise GraphParseError(f'weight must be a decimal number, got {token!r}', line) from None
    if not w.is_finite():
        raise GraphParseError(f'weight must be finite, got {token!r}', line)
    if w <= 0:
        raise GraphParseError(f'weight must be positive, got {token!r}', line)
    return w

def _decimals(w: Decimal) -> int:
    exponent = w.normalize().as_tuple().exponent
    return max(0, -exponent)

def parse_graph(text: str) -> Graph:
    ''' Parse the edge-list format.

    The first content line is "n m", followed by m lines "u v w" with
    0 <= u, v < n and w a positive decimal. Lines starting with '#' are
    comments. Decimal weights are scaled by the smallest common power of ten
    so that every weight becomes an integer.

    Args:
        text (str): file content

    Returns:
        Graph
    '''

    lines = _content_lines(text)
    if not lines:
        raise GraphParseError('missing "n m" header line')

    header_line, header = lines[0]
    if len(header) != 2:
        raise GraphParseError(f'header must be "n m", got {" ".join(header)!r}', header_line)
    n = _parse_int(header[0], 'n', header_line)
    m = _parse_int(header[1], 'm', header_line)
    if n < 1:
        raise GraphParseError(f'n must be positive, got {n}', header_line)
    if m < 0:
        raise GraphParseError(f'm must be non-negative, got {m}', header_line)

    body = lines[1:]
    if len(body) != m:
        line = body[m][0] if len(body) > m else None
        raise GraphParseError(f'header announces {m} edges, found {len(body)}', line)

    raw_edges = []
    for number, tokens in body:
        if len(tokens) != 3:
            raise GraphParseError(f'edge line must be "u v w", got {" ".join(tokens)!r}', number)
        u = _parse_int(tokens[0], 'u', number)
        v = _parse_int(tokens[1], 'v', number)
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphParseError(f'vertex {x} outside [0, {n})', number)
        raw_edges.append((number, u, v, _parse_weight(tokens[2], number)))

    digits = max((_decimals(w) for *_, w in raw_edges), default=0)
    scale = 10 ** digits

    edges = []
    running = 0
    for number, u, v, w in raw_edges:
        scaled = int(Fraction(w) * scale)
        if u != v:
            # the total bounds every merged edge and every cut value
            running += scaled
        if scaled > MAX_WEIGHT or running > MAX_WEIGHT:
            raise GraphParseError(
                f'weight overflow after scaling by {scale} (limit {MAX_WEIGHT})', number)
        edges.append((u, v, scaled))

    try:
        g = Graph(n, edges, scale=scale)
    except (DomainError, WeightOverflowError) as e:
        raise GraphParseError(str(e)) from e

    logger.debug(f'parsed {g}: {m} input edges, {g.m} stored')
    return g

def serialize_graph(g: Graph) -> str:
    ''' Edge-list text of `g`, weights back in input units '''
    lines = [f'{g.n} {g.m}']
    for u, v, w in g.edges:
        lines.append(f'{u} {v} {format_weight(w, g.scale)}')
    return '\n'.join(lines) + '\n'

def read_graph(path: Union[str, Path]) -> Graph:
    return parse_graph(Path(path).read_text(encoding='utf-8'))

def write_graph(g: Graph, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize_graph(g), encoding='utf-8')
