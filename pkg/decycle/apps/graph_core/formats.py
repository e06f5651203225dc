"""
    Graph formats
    =============

    This module implements the two interchange formats understood by django-decycle:

    graph6
        The printable encoding of the upper triangle of the adjacency matrix (column by column,
        six bits per byte, each byte offset by 63, zero padding). An optional ``>>graph6<<`` header
        is accepted on input and never written on output.
    edge list
        A plain text format: a first line ``n m`` followed by ``m`` lines ``u v`` (0-based).

"""

from typing import List

from decycle.conf import settings as decycle_settings
from decycle.core.exceptions import GraphFormatError, GraphSizeError

from .graph import Graph


GRAPH6_HEADER = '>>graph6<<'
GRAPH6_OFFSET = 63
GRAPH6_LONG_MARKER = 126
GRAPH6_SHORT_MAX_ORDER = 62


def _graph6_order_bytes(n: int) -> List[int]:
    if n <= GRAPH6_SHORT_MAX_ORDER:
        return [n + GRAPH6_OFFSET]
    return [GRAPH6_LONG_MARKER] + [(n >> shift & 0x3F) + GRAPH6_OFFSET for shift in (12, 6, 0)]


def encode_graph6(g: Graph) -> str:
    """ Returns the header-less graph6 string of ``g``. """
    bits = [
        g.adj[i] >> j & 1
        for j in range(1, g.n)
        for i in range(j)
    ]
    bits.extend([0] * (-len(bits) % 6))
    data = _graph6_order_bytes(g.n)
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = value << 1 | bit
        data.append(value + GRAPH6_OFFSET)
    return bytes(data).decode('ascii')


def decode_graph6(text: str) -> Graph:
    """ Decodes a graph6 string; errors carry the offending byte offset (header excluded). """
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    try:
        data = text.encode('ascii')
    except UnicodeEncodeError as e:
        raise GraphFormatError('Non-ASCII character in graph6 input', position=e.start)
    if not data:
        raise GraphFormatError('Empty graph6 input', position=0)
    for offset, byte in enumerate(data):
        if not GRAPH6_OFFSET <= byte <= GRAPH6_LONG_MARKER:
            raise GraphFormatError('Invalid graph6 byte {!r}'.format(chr(byte)), position=offset)

    if data[0] != GRAPH6_LONG_MARKER:
        n, start = data[0] - GRAPH6_OFFSET, 1
    else:
        if len(data) < 4:
            raise GraphFormatError('Truncated graph6 order field', position=len(data))
        if data[1] == GRAPH6_LONG_MARKER:
            raise GraphSizeError('graph6 orders above 258047 are not supported')
        n = 0
        for byte in data[1:4]:
            n = n << 6 | (byte - GRAPH6_OFFSET)
        start = 4

    if n > decycle_settings.MAX_ORDER:
        raise GraphSizeError(
            'graph6 input has {} vertices, the cap is {}'.format(n, decycle_settings.MAX_ORDER)
        )

    bit_count = n * (n - 1) // 2
    expected = start + (bit_count + 5) // 6
    if len(data) < expected:
        raise GraphFormatError('Truncated graph6 adjacency data', position=len(data))
    if len(data) > expected:
        raise GraphFormatError('Trailing bytes after graph6 adjacency data', position=expected)

    bits = []
    for byte in data[start:]:
        value = byte - GRAPH6_OFFSET
        bits.extend(value >> shift & 1 for shift in range(5, -1, -1))
    if any(bits[bit_count:]):
        raise GraphFormatError('Non-zero graph6 padding bits', position=len(data) - 1)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_edge_list(text: str) -> Graph:
    """ Parses the ``n m`` / ``u v`` edge-list format; errors carry the 1-based line number. """
    lines = [line.strip() for line in text.splitlines()]
    numbered = [(number, line) for number, line in enumerate(lines, start=1) if line]
    if not numbered:
        raise GraphFormatError('Empty edge list', position=1)

    def _ints(number, line):
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError('Expected two integers', position=number)
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError('Expected two integers', position=number)

    header_line, header = numbered[0]
    n, m = _ints(header_line, header)
    if n < 1 or n > decycle_settings.MAX_ORDER:
        raise GraphSizeError(
            'Edge list declares {} vertices, allowed range is 1..{}'.format(
                n, decycle_settings.MAX_ORDER,
            ),
        )
    body = numbered[1:]
    if len(body) != m:
        raise GraphFormatError(
            'Edge list declares {} edges but lists {}'.format(m, len(body)),
            position=body[m][0] if len(body) > m else len(lines) + 1,
        )

    adj = [0] * n
    for number, line in body:
        u, v = _ints(number, line)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError('Vertex out of range', position=number)
        if u == v:
            raise GraphFormatError('Self-loops are not allowed', position=number)
        if adj[u] >> v & 1:
            raise GraphFormatError('Repeated edge', position=number)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = ['{} {}'.format(g.n, len(edges))]
    lines.extend('{} {}'.format(u, v) for u, v in edges)
    return '\n'.join(lines) + '\n'

