"""Bit-exact graph serialization and structured result records.

Supports the short form of the standard printable graph6 encoding
(order byte n+63 for n <= 62, then the column-major upper triangle
packed six bits per byte, each group offset by 63), a plain edge-list
text format, and line-delimited JSON report records so runs can be
diffed and resumed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, TextIO

from .graph import Graph, build_graph

MAX_GRAPH6_ORDER = 62


class FormatError(ValueError):
    """Malformed serialized input; the message carries the offset."""


def encode_graph6(g: Graph) -> str:
    """Single-line printable encoding; defined for n <= 62."""
    if g.n > MAX_GRAPH6_ORDER:
        raise FormatError(f"short graph6 supports n <= {MAX_GRAPH6_ORDER}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = (acc << 1) | (g.adj[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc, nbits = 0, 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    """Inverse of :func:`encode_graph6`; rejects malformed input."""
    line = text.strip()
    if not line:
        raise FormatError("empty graph6 text at byte 0")
    for off, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"character out of graph6 range at byte {off}: {ch!r}")
    n = ord(line[0]) - 63
    if n > MAX_GRAPH6_ORDER:
        raise FormatError(f"order {n} beyond the short form at byte 0")
    if n < 1:
        raise FormatError("graph order must be >= 1 at byte 0")
    nbits = n * (n - 1) // 2
    want = 1 + (nbits + 5) // 6
    if len(line) != want:
        raise FormatError(
            f"graph6 line for n={n} must be {want} bytes, got {len(line)}"
            f" (at byte {min(len(line), want)})")
    edges = []
    bit = 0
    for off in range(1, len(line)):
        group = ord(line[off]) - 63
        for j in range(5, -1, -1):
            if bit >= nbits:
                if group >> j & 1:
                    raise FormatError(f"nonzero padding bit at byte {off}")
                continue
            if group >> j & 1:
                edges.append(_pair_at(bit))
            bit += 1
    return build_graph(n, edges)


def _pair_at(bit: int) -> tuple[int, int]:
    # column-major upper triangle: column v holds bits for u = 0..v-1
    v = 1
    while bit >= v:
        bit -= v
        v += 1
    return (bit, v)


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """First token is n; then one "u v" pair per line, '#' starts a comment."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise FormatError(f"non-integer token on line {lineno}: {line!r}") from None
        if n is None:
            n = values[0]
            values = values[1:]
            if n < 1:
                raise FormatError(f"graph order must be >= 1 on line {lineno}")
        if len(values) % 2:
            raise FormatError(f"dangling vertex token on line {lineno}")
        for i in range(0, len(values), 2):
            u, v = values[i], values[i + 1]
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"vertex out of range on line {lineno}: {u} {v}")
            if u == v:
                raise FormatError(f"self-loop on line {lineno}: {u} {v}")
            edges.append((u, v))
    if n is None:
        raise FormatError("empty edge-list input at line 1")
    return build_graph(n, edges)


def ingest_graph6_stream(reader: Iterable[str],
                         keep: Callable[[Graph], bool] | None = None,
                         strict: bool = True,
                         warn: Callable[[str], None] | None = None) -> Iterator[Graph]:
    """Decode one graph6 line per graph, filtered by ``keep``.

    Malformed lines raise in strict mode; otherwise they are reported
    through ``warn`` with their line index and skipped.
    """
    for lineno, raw in enumerate(reader, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = decode_graph6(line)
        except FormatError as exc:
            if strict:
                raise FormatError(f"line {lineno}: {exc}") from None
            if warn is not None:
                warn(f"line {lineno}: {exc}")
            continue
        if keep is None or keep(g):
            yield g


@dataclass
class ReportRecord:
    """One structured output line: operation, inputs, outputs, witnesses.

    ``timing`` stays None unless explicitly requested so identical runs
    stay byte-identical and diffable.
    """

    operation: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    exhaustive: bool | None = None
    timing: float | None = None

    def to_json_line(self) -> str:
        payload = {"operation": self.operation, "inputs": self.inputs,
                   "outputs": self.outputs}
        if self.witnesses:
            payload["witnesses"] = self.witnesses
        if self.exhaustive is not None:
            payload["exhaustive"] = self.exhaustive
        if self.timing is not None:
            payload["timing"] = self.timing
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_line(cls, line: str) -> "ReportRecord":
        payload = json.loads(line)
        return cls(
            operation=payload["operation"],
            inputs=payload.get("inputs", {}),
            outputs=payload.get("outputs", {}),
            witnesses=payload.get("witnesses", []),
            exhaustive=payload.get("exhaustive"),
            timing=payload.get("timing"),
        )


CSV_HEADER = "n,k,l,f,lower_bound,upper_bound,exhaustive"


def write_extremal_csv(records, out: TextIO) -> None:
    """Summary table for extremal records; one row per (n, k, l)."""
    out.write(CSV_HEADER + "\n")
    for r in records:
        f_val = "" if r.f_value is None else r.f_value
        out.write(f"{r.n},{r.k},{r.l},{f_val},{r.lower_bound},"
                  f"{r.upper_bound if r.upper_bound is not None else ''},"
                  f"{str(r.exhaustive).lower()}\n")
