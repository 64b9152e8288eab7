"""graph6 codec: compact ASCII encoding of undirected simple graphs.

One graph per line. The optional ">>graph6<<" header is tolerated and
stripped; sparse6 (':' / ';' prefix or its header) and digraph6 ('&') are
rejected rather than misparsed. Encoding is bit-exact against the published
format: N(n) followed by the upper triangle in column-major order, packed
into 6-bit groups (most significant bit first, zero-padded) with 63 added
to every byte.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import MalformedGraph6Error, UnsupportedFormatError
from .graph import Graph, build_graph

_HEADER = ">>graph6<<"


def _strip_header(text: str) -> str:
    s = text.strip()
    if s.startswith(">>"):
        if s.startswith(_HEADER):
            return s[len(_HEADER):].strip()
        raise UnsupportedFormatError(f"unsupported header in {s[:20]!r}")
    return s


def _decode_n(s: str) -> tuple[int, int]:
    """Return (n, chars consumed)."""
    if not s:
        raise MalformedGraph6Error("empty graph6 string")
    c0 = ord(s[0])
    if c0 != 126:
        if not 63 <= c0 <= 125:
            raise MalformedGraph6Error(f"bad size byte {s[0]!r}")
        return c0 - 63, 1
    if len(s) >= 2 and ord(s[1]) == 126:
        if len(s) < 8:
            raise MalformedGraph6Error("truncated 8-byte size")
        n = 0
        for ch in s[2:8]:
            c = ord(ch)
            if not 63 <= c <= 126:
                raise MalformedGraph6Error(f"bad size byte {ch!r}")
            n = (n << 6) | (c - 63)
        return n, 8
    if len(s) < 4:
        raise MalformedGraph6Error("truncated 4-byte size")
    n = 0
    for ch in s[1:4]:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise MalformedGraph6Error(f"bad size byte {ch!r}")
        n = (n << 6) | (c - 63)
    return n, 4


def _encode_n(n: int) -> str:
    if n < 0:
        raise MalformedGraph6Error("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise MalformedGraph6Error(f"n={n} too large for graph6")


def decode_graph6(text: str) -> Graph:
    """Parse one graph6 line into a Graph (trailing newline tolerated)."""
    s = _strip_header(text)
    if s and s[0] in ":;&":
        raise UnsupportedFormatError("sparse6/digraph6 input rejected (graph6 only)")
    n, used = _decode_n(s)
    body = s[used:]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise MalformedGraph6Error(
            f"expected {nbytes} data bytes for n={n}, got {len(body)}"
        )
    bits = []
    for ch in body:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise MalformedGraph6Error(f"bad data byte {ch!r}")
        c -= 63
        bits.extend(((c >> 5) & 1, (c >> 4) & 1, (c >> 3) & 1, (c >> 2) & 1, (c >> 1) & 1, c & 1))
    if any(bits[nbits:]):
        raise MalformedGraph6Error("nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode a Graph as one canonical graph6 line (no header, no newline)."""
    n = g.n
    out = [_encode_n(n)]
    bits = 0
    nb = 0
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | (1 if g.has_edge(i, j) else 0)
            nb += 1
            if nb == 6:
                out.append(chr(bits + 63))
                bits = 0
                nb = 0
    if nb:
        out.append(chr((bits << (6 - nb)) + 63))
    return "".join(out)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph | None, str | None]]:
    """Decode a stream of graph6 lines.

    Yields (line_number, raw_line, graph_or_None, error_message_or_None);
    blank lines are skipped. Callers decide whether errors abort (strict) or
    get reported and skipped.
    """
    for lineno, raw in enumerate(lines, start=1):
        s = raw.strip()
        if not s:
            continue
        try:
            yield lineno, s, decode_graph6(s), None
        except MalformedGraph6Error as exc:
            yield lineno, s, None, str(exc)
