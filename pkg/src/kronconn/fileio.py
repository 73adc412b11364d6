"""Plain edge-list text format.

First significant line: "n m". Then exactly m lines "u v". Lines starting
with '#' and blank lines are ignored. Serialization is canonical: edges
sorted by (min endpoint, max endpoint), each written "min max".
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph, build_graph


class EdgeListError(ValueError):
    """Malformed edge-list document; ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _significant_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append((i, stripped))
    return out


def _two_ints(line: str, lineno: int, what: str) -> tuple[int, int]:
    tokens = line.split()
    if len(tokens) != 2:
        raise EdgeListError(
            f"{what} needs exactly two integers, got {len(tokens)} tokens",
            lineno,
        )
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError:
        raise EdgeListError(
            f"bad token in {what}: expected integers, got {line!r}", lineno
        ) from None


def parse_graph(text: str) -> Graph:
    lines = _significant_lines(text)
    if not lines:
        raise EdgeListError("missing header", 1)
    header_line, header = lines[0]
    n, m = _two_ints(header, header_line, "header")
    if n < 1 or m < 0:
        raise EdgeListError(
            f"malformed header: need n >= 1 and m >= 0, got n={n} m={m}",
            header_line,
        )
    body = lines[1:]
    if len(body) > m:
        raise EdgeListError(
            f"wrong edge count: header says {m}, extra edge line found",
            body[m][0],
        )
    if len(body) < m:
        last = body[-1][0] if body else header_line
        raise EdgeListError(
            f"wrong edge count: header says {m}, found {len(body)}", last
        )
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, line in body:
        u, v = _two_ints(line, lineno, "edge")
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(
                f"vertex out of range: ({u}, {v}) with n={n}", lineno
            )
        if u == v:
            raise EdgeListError(f"loop ({u}, {v})", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise EdgeListError(f"duplicate edge ({u}, {v})", lineno)
        seen.add(key)
        edges.append((u, v))
    return build_graph(n, edges)


def serialize_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"{g.n} {g.m}")
    out.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(out) + "\n"


def read_graph_file(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph_file(path: str, g: Graph, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(g, comments))
