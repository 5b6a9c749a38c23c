"""
graph6 codec.

Bit layout: the upper triangle of the adjacency matrix read column by
column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed big-endian into 6-bit
groups, each group offset by 63. Marks are not representable and are
dropped on encode.
"""
import logging
from pathlib import Path

from ..exceptions import Graph6Error, MalformedHeader, NonCanonicalPadding, TruncatedBits
from .marked_graph import MarkedGraph


logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"
_BIAS = 63
_SHORT_LIMIT = 62
_MEDIUM_LIMIT = 258047


def _size_chars(n: int) -> str:
    if n <= _SHORT_LIMIT:
        return chr(n + _BIAS)
    if n <= _MEDIUM_LIMIT:
        return "~" + "".join(chr(((n >> shift) & 63) + _BIAS) for shift in (12, 6, 0))
    return "~~" + "".join(chr(((n >> shift) & 63) + _BIAS) for shift in (30, 24, 18, 12, 6, 0))


def _parse_size(raw: list) -> tuple:
    """Return (n, header length) from the raw character codes."""
    if raw[0] != 126:
        return raw[0] - _BIAS, 1
    if len(raw) >= 2 and raw[1] == 126:
        if len(raw) < 8:
            raise MalformedHeader("eight-byte size field is incomplete")
        fields = raw[2:8]
    else:
        if len(raw) < 4:
            raise MalformedHeader("four-byte size field is incomplete")
        fields = raw[1:4]
    n = 0
    for code in fields:
        n = (n << 6) | (code - _BIAS)
    return n, len(fields) + (2 if len(fields) == 6 else 1)


def decode(text) -> MarkedGraph:
    """Decode one graph6 line into an unmarked graph."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise MalformedHeader("empty graph6 input")
    raw = [ord(ch) for ch in line]
    if any(not _BIAS <= c <= 126 for c in raw):
        raise MalformedHeader("graph6 characters must lie in the range 63..126")
    n, header = _parse_size(raw)
    body = [c - _BIAS for c in raw[header:]]

    bit_count = n * (n - 1) // 2
    needed = -(-bit_count // 6)
    if len(body) < needed:
        raise TruncatedBits(f"expected {needed} body characters, found {len(body)}",
                            expected=needed, found=len(body))
    if len(body) > needed:
        raise NonCanonicalPadding(f"{len(body) - needed} trailing characters after the body")
    padding = needed * 6 - bit_count
    if padding and body[-1] & ((1 << padding) - 1):
        raise NonCanonicalPadding("padding bits of the last character are not zero")

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return MarkedGraph.from_edges(n, edges)


def encode(g: MarkedGraph) -> str:
    """Canonical graph6 line (no header, no newline); marks are dropped."""
    n = g.n
    bits = []
    for j in range(1, n):
        nbrs = g.neighbors(j)
        bits.extend(1 if i in nbrs else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start:start + 6]:
            value = (value << 1) | bit
        chars.append(chr(value + _BIAS))
    return _size_chars(n) + "".join(chars)


def read_graph6_file(path) -> list:
    """Decode every non-blank line of a graph6 file, in file order."""
    graphs = []
    with Path(path).open("rb") as handle:
        for lineno, raw in enumerate(handle, start=1):
            try:
                stripped = raw.decode("ascii").strip()
            except UnicodeDecodeError:
                raise MalformedHeader(f"line {lineno} is not ASCII", line=lineno) from None
            if not stripped or stripped == HEADER:
                continue
            try:
                graphs.append(decode(stripped))
            except Graph6Error as exc:
                exc.details.setdefault("line", lineno)
                raise
    logger.debug("Read %d graphs from %s", len(graphs), path)
    return graphs
