"""
VDB index evaluation

I(D) = 1/2 * sum over arcs uv of phi(d+(u), d-(v)), computed directly over the
arcs and through the degree spectrum; the two must agree.
"""
from fractions import Fraction
from typing import Iterable, Optional, Tuple
import math

import networkx as nx
import structlog

from app.core.exceptions import DomainError, InvalidDigraphError, IsolatedVertexError
from app.models import DegreeSpectrum, Digraph, PhiFamily, PhiSpec
from app.services.spectrum import require_no_isolated

logger = structlog.get_logger()


def phi_eval(spec: PhiSpec, i: int, j: int) -> float:
    return spec.evaluate(i, j)


def index_arc_sum(digraph: Digraph, spec: PhiSpec) -> float:
    require_no_isolated(digraph)
    outs, ins = digraph.out_degrees(), digraph.in_degrees()
    return 0.5 * math.fsum(spec.evaluate(outs[u], ins[v]) for u, v in digraph.arcs)


def index_spectrum_sum(spectrum: DegreeSpectrum, spec: PhiSpec) -> float:
    # p(i, i) = a(i, i): each diagonal arc counted once
    return 0.5 * math.fsum(count * spec.evaluate(i, j) for (i, j), count in spectrum.p.items())


def index_exact(digraph: Digraph, spec: PhiSpec) -> Fraction:
    """Exact rational value for the integer-valued families

    Defined for general Randic and general sum-connectivity with a non-negative
    integer alpha (first and second Zagreb among them).
    """
    alpha = spec.integral_alpha
    if alpha is None:
        raise DomainError(f"{spec.name} has no exact integer form")
    require_no_isolated(digraph)
    outs, ins = digraph.out_degrees(), digraph.in_degrees()
    if spec.family == PhiFamily.GENERAL_RANDIC:
        total = sum((outs[u] * ins[v]) ** alpha for u, v in digraph.arcs)
    else:
        total = sum((outs[u] + ins[v]) ** alpha for u, v in digraph.arcs)
    return Fraction(total, 2)


def graph_index(edges: Iterable[Tuple[int, int]], n: int, spec: PhiSpec) -> float:
    """Classical index of a simple graph: sum over edges of phi(deg u, deg v)"""
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for u, v in edges:
        if u == v:
            raise InvalidDigraphError(f"loop edge {{{u}, {v}}}")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidDigraphError(f"edge {{{u}, {v}}} outside 0..{n - 1}")
        graph.add_edge(u, v)
    isolates = sorted(nx.isolates(graph))
    if isolates:
        raise IsolatedVertexError(isolates[0], n)
    return math.fsum(spec.evaluate(graph.degree(u), graph.degree(v)) for u, v in graph.edges())


def _pair_weight(i: int, j: int) -> float:
    return 1 / i + 1 / j


def star_anchored_decomposition(spectrum: DegreeSpectrum, spec: PhiSpec) -> float:
    """I(D) rebuilt from n0 and the arc types other than (1, n-1)

    2I = [2(n-1) - (n-1)/n * n0] phi(1,n-1)
         + sum over (i,j) != (1,n-1) of [phi(i,j) - (n-1)/n (1/i + 1/j) phi(1,n-1)] p(i,j)
    """
    n = spectrum.n
    anchor = spec.evaluate(1, n - 1)
    ratio = (n - 1) / n
    terms = [(2 * (n - 1) - ratio * spectrum.n0) * anchor]
    for (i, j), count in spectrum.p.items():
        if (i, j) == (1, n - 1):
            continue
        terms.append((spec.evaluate(i, j) - ratio * _pair_weight(i, j) * anchor) * count)
    return 0.5 * math.fsum(terms)


def complete_anchored_decomposition(spectrum: DegreeSpectrum, spec: PhiSpec) -> float:
    """I(D) rebuilt from n0 and the arc types other than (n-1, n-1)

    2I = 1/2 (2n - n0)(n-1) phi(n-1,n-1)
         + sum over (i,j) != (n-1,n-1) of [phi(i,j) - (n-1)/2 (1/i + 1/j) phi(n-1,n-1)] p(i,j)
    """
    n = spectrum.n
    anchor = spec.evaluate(n - 1, n - 1)
    half = (n - 1) / 2
    terms = [0.5 * (2 * n - spectrum.n0) * (n - 1) * anchor]
    for (i, j), count in spectrum.p.items():
        if (i, j) == (n - 1, n - 1):
            continue
        terms.append((spec.evaluate(i, j) - half * _pair_weight(i, j) * anchor) * count)
    return 0.5 * math.fsum(terms)


def diagonal_split_decomposition(spectrum: DegreeSpectrum, spec: PhiSpec) -> float:
    """complete_anchored_decomposition with off-diagonal and diagonal terms apart

    The diagonal weight (n-1)/2 * 2/i is written as (n-1)/i.
    """
    n = spectrum.n
    anchor = spec.evaluate(n - 1, n - 1)
    terms = [0.5 * (2 * n - spectrum.n0) * (n - 1) * anchor]
    for (i, j), count in sorted(spectrum.p.items()):
        if i < j:
            terms.append((spec.evaluate(i, j) - (n - 1) / 2 * _pair_weight(i, j) * anchor) * count)
        elif i < n - 1:
            terms.append((spec.evaluate(i, i) - (n - 1) / i * anchor) * count)
    return 0.5 * math.fsum(terms)


def decomposition_gaps(spectrum: DegreeSpectrum, spec: PhiSpec, value: Optional[float] = None) -> Tuple[float, float, float]:
    """Absolute differences between I(D) and each decomposition"""
    if value is None:
        value = index_spectrum_sum(spectrum, spec)
    return (
        abs(value - star_anchored_decomposition(spectrum, spec)),
        abs(value - complete_anchored_decomposition(spectrum, spec)),
        abs(value - diagonal_split_decomposition(spectrum, spec)),
    )
