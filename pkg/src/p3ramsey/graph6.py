"""Reading and writing graphs in graph6 line format.

Only single-byte size headers are supported (order <= 62 in the format,
further capped at 32 by the graph core).  The payload packs the upper
triangle column by column, 6 bits per byte, each byte offset by 63, with
zero padding in the final byte.
"""

from __future__ import annotations

import gzip
import io
from pathlib import Path
from typing import Iterable, Iterator, Union

from .graphs import MAX_VERTICES, Graph, _make


class Graph6Error(ValueError):
    """Malformed graph6 input.

    offset is the byte position within the offending line; line_number is
    filled in by stream_graphs when reading multi-line sources.
    """

    def __init__(self, message: str, offset: int, line_number: int | None = None):
        self.offset = offset
        self.line_number = line_number
        where = f"byte {offset}"
        if line_number is not None:
            where = f"line {line_number}, {where}"
        super().__init__(f"{message} ({where})")


def _strip_newline(data: bytes) -> bytes:
    if data.endswith(b"\r\n"):
        return data[:-2]
    if data.endswith(b"\n"):
        return data[:-1]
    return data


def parse_graph6(line: Union[str, bytes]) -> Graph:
    """Parse one graph6 line into a Graph.

    Raises Graph6Error with a byte offset for: empty input, multi-byte size
    headers, size over the 32-vertex cap, bytes outside the printable range
    63..126, payload length mismatch, and nonzero padding bits.
    """
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = _strip_newline(data)
    if not data:
        raise Graph6Error("empty graph6 line", 0)
    head = data[0]
    if head == 126:
        raise Graph6Error("multi-byte size header (order >= 63) not supported", 0)
    if not 63 <= head <= 125:
        raise Graph6Error(f"size byte {head} outside graph6 range", 0)
    n = head - 63
    if n > MAX_VERTICES:
        raise Graph6Error(f"order {n} exceeds the {MAX_VERTICES}-vertex cap", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 != nbytes:
        raise Graph6Error(
            f"payload is {len(data) - 1} bytes, expected {nbytes} for order {n}",
            min(len(data), nbytes + 1),
        )
    rows = [0] * n
    k = 0
    for j in range(1, n):
        bit_j = 1 << j
        for i in range(j):
            byte = data[1 + k // 6]
            if not 63 <= byte <= 126:
                raise Graph6Error(f"payload byte {byte} outside graph6 range", 1 + k // 6)
            if (byte - 63) >> (5 - k % 6) & 1:
                rows[i] |= bit_j
                rows[j] |= 1 << i
            k += 1
    for k in range(nbits, nbytes * 6):
        byte = data[1 + k // 6]
        if not 63 <= byte <= 126:
            raise Graph6Error(f"payload byte {byte} outside graph6 range", 1 + k // 6)
        if (byte - 63) >> (5 - k % 6) & 1:
            raise Graph6Error("nonzero padding bits", 1 + k // 6)
    return _make(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    """graph6 text for g under its current labeling (no trailing newline)."""
    n = g.order
    adj = g.adj
    out = [chr(63 + n)]
    acc = 0
    nb = 0
    for j in range(1, n):
        row_j = adj[j]
        for i in range(j):
            acc = acc << 1 | (row_j >> i & 1)
            nb += 1
            if nb == 6:
                out.append(chr(63 + acc))
                acc = 0
                nb = 0
    if nb:
        out.append(chr(63 + (acc << (6 - nb))))
    return "".join(out)


def _open_lines(source) -> Iterator[bytes]:
    if isinstance(source, (str, Path)):
        path = Path(source)
        opener = gzip.open if path.suffix == ".gz" else open
        with opener(path, "rb") as fh:
            yield from fh
        return
    if isinstance(source, io.TextIOBase):
        for text in source:
            yield text.encode("ascii")
        return
    for item in source:
        yield item.encode("ascii") if isinstance(item, str) else item


def stream_graphs(
    source,
    on_error: str = "abort",
    errors: list | None = None,
) -> Iterator[Graph]:
    """Yield graphs from a multi-line graph6 source in file order.

    source may be a path (gzip transparent for .gz), an open file, or any
    iterable of lines.  Blank lines are ignored.  on_error selects between
    "abort" (raise, with the line number attached) and "skip" (drop the bad
    line; the error is appended to `errors` when a list is supplied).
    """
    if on_error not in ("abort", "skip"):
        raise ValueError(f"on_error must be 'abort' or 'skip', got {on_error!r}")
    for lineno, raw in enumerate(_open_lines(source), start=1):
        stripped = _strip_newline(raw)
        if not stripped:
            continue
        try:
            yield parse_graph6(stripped)
        except Graph6Error as exc:
            exc.line_number = lineno
            err = Graph6Error(str(exc).rsplit(" (", 1)[0], exc.offset, lineno)
            if on_error == "abort":
                raise err from None
            if errors is not None:
                errors.append(err)


def dump_graphs(graphs: Iterable[Graph], path) -> int:
    """Write graphs as LF-terminated graph6 lines; returns the line count."""
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    count = 0
    with opener(path, "wt", encoding="ascii") as fh:
        for g in graphs:
            fh.write(write_graph6(g))
            fh.write("\n")
            count += 1
    return count
