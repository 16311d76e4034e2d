"""Bit-exact graph6 encoding and decoding.

graph6 is the line-oriented interchange format used by exhaustive graph
generation tools: a length header followed by the upper triangle of the
adjacency matrix in column order, six bits per printable character
(values 63..126).  Supported range here is 0 <= n < 2**18.
"""
from __future__ import annotations

from .errors import DomainError, Graph6Error
from .graphs import Graph

__all__ = ["encode", "decode", "Graph6Error"]

_HEADER = ">>graph6<<"


def encode(g: Graph) -> str:
    """Encode a graph as a graph6 string (no trailing newline)."""
    n = g.n
    if n >= 1 << 18:
        raise DomainError(f"graph6 encoding supported for n < 2**18, got {n}")
    if n <= 62:
        chars = [chr(63 + n)]
    else:
        chars = ["~", chr(63 + (n >> 12 & 63)), chr(63 + (n >> 6 & 63)), chr(63 + (n & 63))]
    adj = g.masks()
    buf = 0
    nbits = 0
    for k in range(1, n):
        row = adj[k]
        for j in range(k):
            buf = buf << 1 | (row >> j & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(63 + buf))
                buf = 0
                nbits = 0
    if nbits:
        chars.append(chr(63 + (buf << (6 - nbits))))
    return "".join(chars)


def decode(text: str) -> Graph:
    """Decode one graph6 line.  Errors carry the byte offset of the fault."""
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        base = len(_HEADER)
    if not s:
        raise Graph6Error("empty graph6 input", base)

    def val(i: int) -> int:
        c = ord(s[i])
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {s[i]!r} outside graph6 range", base + i)
        return c - 63

    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise Graph6Error("n >= 2**18 not supported", base)
        if len(s) < 4:
            raise Graph6Error("truncated vertex-count header", base + len(s))
        n = val(1) << 12 | val(2) << 6 | val(3)
        body = 4
    else:
        n = val(0)
        body = 1

    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    have = len(s) - body
    if have < need:
        raise Graph6Error(f"truncated: need {need} data characters, got {have}", base + len(s))
    if have > need:
        raise Graph6Error(f"trailing data beyond {need} data characters", base + body + need)

    masks = [0] * n
    idx = 0
    j, k = 0, 1  # column-major pair cursor
    for i in range(need):
        v6 = val(body + i)
        for b in range(5, -1, -1):
            bit = v6 >> b & 1
            if idx < npairs:
                if bit:
                    masks[j] |= 1 << k
                    masks[k] |= 1 << j
                j += 1
                if j == k:
                    j, k = 0, k + 1
            elif bit:
                raise Graph6Error("nonzero padding bits", base + body + i)
            idx += 1
    return Graph.from_masks(n, masks)
