"""
Edge-list text format

One arc per line as two whitespace-separated vertex ids, '#' starts a
comment. The canonical emitter writes a leading "# n=<n>" comment, which the
parser reads back as the vertex count when no explicit override is given.
"""
from pathlib import Path
from typing import List, Optional, Set, Tuple
import re

import structlog

from app.core.exceptions import EdgeListError
from app.models import Digraph

logger = structlog.get_logger()

_HEADER = re.compile(r"^\s*n\s*=\s*(\d+)\s*$")
_VERTEX = re.compile(r"\d+", re.ASCII)


def parse_edge_list(text: str, n_override: Optional[int] = None) -> Digraph:
    """Parse edge-list text into a Digraph, reporting errors with line numbers"""
    declared_n: Optional[int] = None
    arcs: List[Tuple[int, int]] = []
    lines_of: List[int] = []
    seen: Set[Tuple[int, int]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body, _, comment = raw.partition("#")
        header = _HEADER.match(comment)
        if header and not body.strip() and declared_n is None and not arcs:
            declared_n = int(header.group(1))
        tokens = body.split()
        if not tokens:
            continue
        if len(tokens) != 2 or not all(_VERTEX.fullmatch(t) for t in tokens):
            raise EdgeListError(f"malformed arc {body.strip()!r}", lineno)
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise EdgeListError(f"loop arc {u} {v}", lineno)
        if (u, v) in seen:
            raise EdgeListError(f"duplicate arc {u} {v}", lineno)
        seen.add((u, v))
        arcs.append((u, v))
        lines_of.append(lineno)

    n = n_override if n_override is not None else declared_n
    if n is None:
        if not arcs:
            raise EdgeListError("no arcs and no vertex count", max(1, len(text.splitlines())))
        n = max(max(u, v) for u, v in arcs) + 1
    for (u, v), lineno in zip(arcs, lines_of):
        if u >= n or v >= n:
            raise EdgeListError(f"vertex id {max(u, v)} >= n={n}", lineno)
    if n < 1:
        raise EdgeListError("vertex count must be positive", 1)

    logger.debug("Edge list parsed", n=n, arcs=len(arcs))
    return Digraph.from_arcs(n, arcs)


def read_edge_list(path: Path, n_override: Optional[int] = None) -> Digraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise EdgeListError(f"cannot read {path}: {e.strerror}", 0, details={"path": str(path)})
    return parse_edge_list(text, n_override)


def emit_edge_list(digraph: Digraph) -> str:
    """Canonical form: header comment then arcs in sorted order"""
    lines = [f"# n={digraph.n}"]
    lines.extend(f"{u} {v}" for u, v in digraph.arcs)
    return "\n".join(lines) + "\n"
