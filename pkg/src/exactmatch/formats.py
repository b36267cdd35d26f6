"""Text formats for instances, matchings, and reduction maps.

Instance files are line oriented. Blank lines and lines starting with '#'
are ignored. The first significant line is a header, followed by exactly
one record per edge:

    p em <n> <m> <k>        then m lines    e <u> <v> <r|b>
    p tkpm <n> <m> <k>      then m lines    e <u> <v> <weight>

Vertex ids are 0-based. Edge endpoints may appear in either order in a
file; they are normalized to u < v on parse, which never changes edge ids.
A matching serializes to a single line "m <count> <edge-id>...".

Parsers raise InstanceFormatError with the offending line number for
malformed headers, out-of-range ids, and record-count mismatches. Semantic
invariants (self-loops, parallel edges, k ranges) are left to
graphs.validate and graphs.validate_instance so that callers decide how
strict to be.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .graphs import BLUE, RED, ColoredGraph, EmInstance, Matching, TkpmInstance, WeightedGraph


class InstanceFormatError(ValueError):
    """Raised on malformed instance or matching text; the message carries
    the 1-based line number."""


def _significant_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InstanceFormatError(f"line {lineno}: {what} is not an integer: {token!r}") from None


def _parse_header(lineno: int, line: str, problem: str) -> tuple[int, int, int]:
    fields = line.split()
    if len(fields) != 5 or fields[0] != "p" or fields[1] != problem:
        raise InstanceFormatError(
            f"line {lineno}: malformed header, expected 'p {problem} <n> <m> <k>'")
    n = _parse_int(fields[2], lineno, "vertex count")
    m = _parse_int(fields[3], lineno, "edge count")
    k = _parse_int(fields[4], lineno, "k")
    if n < 0 or m < 0 or k < 0:
        raise InstanceFormatError(f"line {lineno}: header values must be non-negative")
    return n, m, k


def _parse_edge_records(lines, n: int, m: int, problem: str):
    edges = []
    for lineno, line in lines:
        if len(edges) == m:
            raise InstanceFormatError(f"line {lineno}: unexpected record after {m} edges")
        fields = line.split()
        if len(fields) != 4 or fields[0] != "e":
            raise InstanceFormatError(
                f"line {lineno}: malformed edge record, expected 'e <u> <v> <{'r|b' if problem == 'em' else 'weight'}>'")
        u = _parse_int(fields[1], lineno, "vertex id")
        v = _parse_int(fields[2], lineno, "vertex id")
        if not (0 <= u < n and 0 <= v < n):
            raise InstanceFormatError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        if u > v:
            u, v = v, u
        if problem == "em":
            if fields[3] not in (RED, BLUE):
                raise InstanceFormatError(f"line {lineno}: color must be '{RED}' or '{BLUE}'")
            edges.append((u, v, fields[3]))
        else:
            w = _parse_int(fields[3], lineno, "weight")
            if w < 0:
                raise InstanceFormatError(f"line {lineno}: weight must be non-negative")
            edges.append((u, v, w))
    if len(edges) != m:
        raise InstanceFormatError(
            f"unexpected end of input: expected {m} edge records, found {len(edges)}")
    return edges


def parse_em_instance(text: str) -> EmInstance:
    """Parse the 'p em' text format into an EmInstance."""
    lines = _significant_lines(text)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise InstanceFormatError("line 1: empty input, expected a 'p em' header") from None
    n, m, k = _parse_header(lineno, line, "em")
    edges = _parse_edge_records(lines, n, m, "em")
    return EmInstance(ColoredGraph(n, tuple(edges)), k)


def parse_tkpm_instance(text: str) -> TkpmInstance:
    """Parse the 'p tkpm' text format into a TkpmInstance."""
    lines = _significant_lines(text)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise InstanceFormatError("line 1: empty input, expected a 'p tkpm' header") from None
    n, m, k = _parse_header(lineno, line, "tkpm")
    edges = _parse_edge_records(lines, n, m, "tkpm")
    return TkpmInstance(WeightedGraph(n, tuple(edges)), k)


def format_em_instance(instance: EmInstance) -> str:
    g = instance.graph
    out = [f"p em {g.n} {len(g.edges)} {instance.k}"]
    out.extend(f"e {u} {v} {c}" for u, v, c in g.edges)
    return "\n".join(out) + "\n"


def format_tkpm_instance(instance: TkpmInstance) -> str:
    g = instance.graph
    out = [f"p tkpm {g.n} {len(g.edges)} {instance.k}"]
    out.extend(f"e {u} {v} {w}" for u, v, w in g.edges)
    return "\n".join(out) + "\n"


def format_matching(matching: Matching) -> str:
    ids = sorted(set(matching))
    return " ".join(["m", str(len(ids))] + [str(i) for i in ids])


def parse_matching(line: str, lineno: int = 1) -> Matching:
    """Parse one 'm <count> <edge-id>...' record."""
    fields = line.split()
    if len(fields) < 2 or fields[0] != "m":
        raise InstanceFormatError(f"line {lineno}: malformed matching, expected 'm <count> <ids>'")
    count = _parse_int(fields[1], lineno, "matching size")
    ids = [_parse_int(t, lineno, "edge id") for t in fields[2:]]
    if count != len(ids):
        raise InstanceFormatError(
            f"line {lineno}: matching declares {count} edges but lists {len(ids)}")
    return tuple(sorted(set(ids)))
